"""Exception types shared across the package."""


class DistmonError(Exception):
    """Base class for all package errors."""


class ObjectMismatch(DistmonError):
    """Composition or comparison of maps whose endpoints do not line up."""


class MonoidMismatch(DistmonError):
    """An operation mixed objects over different grading monoids."""


class StructureMismatch(DistmonError):
    """Functors or transformations that are not composable."""


class CoverageError(DistmonError):
    """A tabulated family lacks an entry a check needs."""


class BadUnitScalar(DistmonError):
    """A unit-distortion table whose degree-0 coefficient is not 1."""


class ScenarioError(DistmonError):
    """Base class for scenario ingestion failures."""


class ParseError(ScenarioError):
    """The scenario file is not well-formed JSON."""


class ValidationError(ScenarioError):
    """The scenario document violates the schema."""

    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key

"""Idempotent families, twisted distortions, and their axiom table.

A structural idempotent acts on the summand X_i (x) Y_j by 0 or 1; the
twist of a braiding by such a family composes the two, producing
coherent but generally non-invertible interchanges.  Eight axiom ids are
checked here:

* ``E0``  idempotency plus binaturality,
* ``E1``  normalization against the unit object,
* ``E2L`` / ``E2R``  typed multiplicativity, literal single-factor form,
* ``E2L_cocycle`` / ``E2R_cocycle``  the two-factor composite form
  ``e_{XY,Z} o (e_{X,Y} (x) Id)`` versus ``(Id (x) e_{Y,Z}) o e_{X,YZ}``
  conjugated by the associator,
* ``BL`` / ``BR``  braiding-equivariant sliding.

The literal and cocycle readings of multiplicativity genuinely disagree
on the parity projector; both are first-class axiom ids and never share
a verdict.  For structural data every axiom also reduces to per-degree-
triple scalar identities; the checkers evaluate that independent route
on every tuple and refuse to return if the two disagree.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Optional

from dataclasses import dataclass

from .errors import MonoidMismatch, ObjectMismatch
from .exactlin import (
    GradedMap, GradedObject, associator, associator_inv, compose,
    graded_map, identity, mat_rank, pair_basis, pair_decoder, sort_universe,
    tensor_map, tensor_obj, triple_decoder_left, triple_decoder_right,
    unit_object,
)
from .distortion import StructuralBinary, binaturality_check
from .reports import (
    CheckBudget, CheckReport, Coverage, equality_witness, failed, passed,
)

AXIOMS = ("E0", "E1", "E2L", "E2R", "E2L_cocycle", "E2R_cocycle", "BL", "BR")


# ---------------------------------------------------------------------------
# idempotent families


class StructuralIdempotent:
    """Acts on X_i (x) Y_j by c(i, j) in {0, 1}; stored as the zero set."""

    structural = True

    def __init__(self, zero_pairs=(), label: str = ""):
        self.zero_pairs = frozenset(zero_pairs)
        self.label = label
        self._memo: dict = {}

    @staticmethod
    def from_table(table: dict, label: str = "") -> "StructuralIdempotent":
        """Build from an explicit (i, j) -> scalar table; rejects scalars
        other than 0 and 1, which could not be idempotent."""
        zero_pairs = set()
        for pair, value in table.items():
            if value == 0:
                zero_pairs.add(pair)
            elif value != 1:
                raise ObjectMismatch(
                    f"idempotent coefficient at {pair} must be 0 or 1, got {value!r}"
                )
        return StructuralIdempotent(zero_pairs, label)

    def coefficient(self, field, i: int, j: int):
        return field.zero if (i, j) in self.zero_pairs else field.one

    def at(self, field, x: GradedObject, y: GradedObject) -> GradedMap:
        key = (field, x, y)
        got = self._memo.get(key)
        if got is None:
            xy = tensor_obj(x, y)
            zero = field.zero
            blocks = {}
            for n in xy.degrees:
                labels = pair_basis(x, y, n)
                rows = [[zero] * len(labels) for _ in labels]
                for c, (i, j, _, _) in enumerate(labels):
                    rows[c][c] = self.coefficient(field, i, j)
                blocks[n] = rows
            got = graded_map(field, xy, xy, blocks)
            self._memo[key] = got
        return got

    def __repr__(self):
        return f"StructuralIdempotent(zero_pairs={sorted(self.zero_pairs)})"


class TabulatedIdempotent:
    structural = False

    def __init__(self, entries: dict, label: str = ""):
        self.entries = dict(entries)
        self.label = label

    def at(self, field, x: GradedObject, y: GradedObject) -> GradedMap:
        from .errors import CoverageError
        try:
            return self.entries[(x, y)]
        except KeyError:
            raise CoverageError(
                f"tabulated idempotent {self.label or ''} has no entry for ({x}, {y})"
            ) from None


def identity_idempotent() -> StructuralIdempotent:
    return StructuralIdempotent((), "identity")


def parity_projector() -> StructuralIdempotent:
    """Kills the odd-odd summand, identity on the other three."""
    return StructuralIdempotent({(1, 1)}, "parity_projector")


# ---------------------------------------------------------------------------
# the twist construction


class ComposedBinary:
    """beta o e for families that are not both structural."""

    structural = False

    def __init__(self, beta, e, label: str = ""):
        self.beta = beta
        self.e = e
        self.label = label

    def at(self, field, x: GradedObject, y: GradedObject) -> GradedMap:
        return compose(self.beta.at(field, x, y), self.e.at(field, x, y))


def twist(beta, e):
    """The family beta o e; structural whenever both inputs are."""
    if isinstance(beta, StructuralBinary) and isinstance(e, StructuralIdempotent):
        return StructuralBinary(
            lambda f, i, j: f.mul(beta.scale(f, i, j), e.coefficient(f, i, j)),
            beta.sign,
            f"twist({beta.label},{e.label})",
        )
    return ComposedBinary(beta, e, "twist")


# ---------------------------------------------------------------------------
# matrix-level axiom sides


def _axiom_sides(field, e, beta, axiom: str, x, y, z):
    """(lhs, rhs, decoder) for one triple-quantified axiom instance."""
    xy = tensor_obj(x, y)
    yz = tensor_obj(y, z)
    idx = identity(field, x)
    idy = identity(field, y)
    idz = identity(field, z)
    al = associator(field, x, y, z)
    alinv = associator_inv(field, x, y, z)

    if axiom == "E2L":
        lhs = compose(al, e.at(field, xy, z))
        rhs = compose(tensor_map(idx, e.at(field, y, z)),
                      compose(e.at(field, x, yz), al))
        return lhs, rhs, triple_decoder_left(x, y, z)
    if axiom == "E2R":
        lhs = compose(alinv, e.at(field, x, yz))
        rhs = compose(tensor_map(e.at(field, x, y), idz),
                      compose(e.at(field, xy, z), alinv))
        return lhs, rhs, triple_decoder_right(x, y, z)
    if axiom == "E2L_cocycle":
        pair_form = compose(e.at(field, xy, z), tensor_map(e.at(field, x, y), idz))
        split_form = compose(tensor_map(idx, e.at(field, y, z)), e.at(field, x, yz))
        lhs = compose(al, pair_form)
        rhs = compose(split_form, al)
        return lhs, rhs, triple_decoder_left(x, y, z)
    if axiom == "E2R_cocycle":
        pair_form = compose(e.at(field, xy, z), tensor_map(e.at(field, x, y), idz))
        split_form = compose(tensor_map(idx, e.at(field, y, z)), e.at(field, x, yz))
        lhs = compose(pair_form, alinv)
        rhs = compose(alinv, split_form)
        return lhs, rhs, triple_decoder_right(x, y, z)
    if axiom == "BL":
        front = compose(tensor_map(idx, beta.at(field, y, z)),
                        tensor_map(idx, e.at(field, y, z)))
        lhs = compose(associator_inv(field, x, z, y),
                      compose(front, e.at(field, x, yz)))
        rhs = compose(tensor_map(e.at(field, x, z), idy),
                      compose(associator_inv(field, x, z, y), front))
        return lhs, rhs, triple_decoder_right(x, y, z)
    if axiom == "BR":
        front = compose(tensor_map(beta.at(field, x, y), idz),
                        tensor_map(e.at(field, x, y), idz))
        lhs = compose(associator(field, y, x, z),
                      compose(front, e.at(field, xy, z)))
        rhs = compose(tensor_map(idy, e.at(field, x, z)),
                      compose(associator(field, y, x, z), front))
        return lhs, rhs, triple_decoder_left(x, y, z)
    raise ValueError(f"unknown axiom {axiom!r}")


# ---------------------------------------------------------------------------
# scalar oracle (structural data only)


def scalar_axiom_sides(field, monoid, c: Callable, s: Callable,
                       axiom: str, i: int, j: int, k: int):
    """Per-degree-triple scalar values of both sides of an axiom.

    ``c(i, j)`` is the idempotent coefficient, ``s(i, j)`` the braiding
    coefficient (with its sign); both return field scalars.
    """
    add = monoid.add
    mul = field.mul
    if axiom == "E2L":
        return c(add(i, j), k), mul(c(j, k), c(i, add(j, k)))
    if axiom == "E2R":
        return c(i, add(j, k)), mul(c(i, j), c(add(i, j), k))
    if axiom in ("E2L_cocycle", "E2R_cocycle"):
        return (mul(c(add(i, j), k), c(i, j)),
                mul(c(j, k), c(i, add(j, k))))
    if axiom == "BL":
        common = mul(c(j, k), s(j, k))
        return mul(c(i, add(j, k)), common), mul(c(i, k), common)
    if axiom == "BR":
        common = mul(c(i, j), s(i, j))
        return mul(c(add(i, j), k), common), mul(c(i, k), common)
    raise ValueError(f"axiom {axiom!r} has no scalar form")


def _scalar_axiom_agrees(field, monoid, e, beta, axiom, x, y, z) -> bool:
    def c(i, j):
        return e.coefficient(field, i, j)

    def s(i, j):
        return beta.coefficient(field, i, j) if beta is not None else field.one

    for i in x.degrees:
        for j in y.degrees:
            for k in z.degrees:
                lhs, rhs = scalar_axiom_sides(field, monoid, c, s, axiom, i, j, k)
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# the axiom checker


def check_idempotent_axiom(field, e, axiom: str, universe, budget: CheckBudget,
                           beta=None) -> CheckReport:
    """Decide one axiom of the twist construction by exact matrix equality."""
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}")
    if axiom in ("BL", "BR") and beta is None:
        raise ValueError(f"axiom {axiom} needs a braiding")
    objs = sort_universe(universe)
    monoid = objs[0].monoid
    unit = unit_object(monoid)

    if axiom == "E0":
        tuples = 0
        for x, y in product(objs, repeat=2):
            tuples += 1
            m = e.at(field, x, y)
            w = equality_witness("E0", (x, y), compose(m, m), m, pair_decoder(x, y))
            if w is not None:
                return failed("E0", Coverage(tuples), w)
        return binaturality_check(
            "E0", field, lambda a, b: e.at(field, a, b), e.structural,
            objs, budget, extra_tuples=tuples, flips=False,
        )

    if axiom == "E1":
        tuples = 0
        for x in objs:
            tuples += 1
            for pair in ((x, unit), (unit, x)):
                m = e.at(field, *pair)
                ident = identity(field, tensor_obj(*pair))
                w = equality_witness("E1", pair, m, ident, pair_decoder(*pair))
                if w is not None:
                    return failed("E1", Coverage(tuples), w)
        return passed("E1", Coverage(tuples))

    structural = e.structural and (beta is None or beta.structural)
    tuples = 0
    for x, y, z in product(objs, repeat=3):
        if tuples >= budget.max_object_tuples:
            break
        tuples += 1
        lhs, rhs, decoder = _axiom_sides(field, e, beta, axiom, x, y, z)
        w = equality_witness(axiom, (x, y, z), lhs, rhs, decoder)
        if structural:
            if _scalar_axiom_agrees(field, monoid, e, beta, axiom, x, y, z) \
                    != (w is None):
                raise AssertionError(
                    f"internal: scalar route disagrees with matrices for {axiom}"
                )
        if w is not None:
            return failed(axiom, Coverage(tuples), w)
    note = "structural scalar route cross-checked" if structural else None
    return passed(axiom, Coverage(tuples, note=note))


# ---------------------------------------------------------------------------
# invertibility


@dataclass(frozen=True)
class PairInvertibility:
    pair: tuple
    invertible: bool
    defect_degree: Optional[int] = None  # first degree with a rank defect


@dataclass(frozen=True)
class InvertibilityReport:
    pairs: tuple[PairInvertibility, ...]
    invertible_everywhere: bool
    first_witness: Optional[tuple] = None

    def verdict_for(self, x, y) -> bool:
        for entry in self.pairs:
            if entry.pair == (x, y):
                return entry.invertible
        raise KeyError((x, y))


def invertibility_test(field, family, universe) -> InvertibilityReport:
    """Exact per-degree rank decision for every universe pair.

    Works for binary families (X (x) Y -> Y (x) X, blockwise square) and
    idempotent families (endomorphisms).
    """
    objs = sort_universe(universe)
    entries = []
    first = None
    for x, y in product(objs, repeat=2):
        m = family.at(field, x, y)
        defect = None
        for d in m.source.degrees:
            n_src = m.source.dim(d)
            n_tgt = m.target.dim(d)
            block = m.block(d)
            if n_src != n_tgt:
                defect = d
                break
            rank = mat_rank(field, block) if block is not None else 0
            if rank < n_src:
                defect = d
                break
        ok = defect is None
        entries.append(PairInvertibility((x, y), ok, defect))
        if not ok and first is None:
            first = (x, y)
    return InvertibilityReport(tuple(entries), first is None, first)


# ---------------------------------------------------------------------------
# exhaustive structural search (parity grading)


@dataclass(frozen=True)
class SearchRow:
    odd_odd_coefficient: int  # the only free normalized entry
    reports: tuple[CheckReport, ...]

    def verdicts(self) -> dict:
        return {r.axiom: r.verdict for r in self.reports}

    def satisfies(self, axioms) -> bool:
        v = self.verdicts()
        return all(v[a] == "pass" for a in axioms)


@dataclass(frozen=True)
class SearchReport:
    rows: tuple[SearchRow, ...]

    def satisfying(self, axioms) -> list[int]:
        return [row.odd_odd_coefficient for row in self.rows if row.satisfies(axioms)]


def search_structural_idempotents(field, beta, universe,
                                  budget: CheckBudget) -> SearchReport:
    """Run every axiom on each normalized parity idempotent.

    Normalization pins c(i, 0) = c(0, j) = 1, so over the parity grading
    the only free entry is c(1, 1) in {0, 1}: exactly two candidates.
    """
    objs = sort_universe(universe)
    if objs[0].monoid.kind != "parity":
        raise MonoidMismatch("the structural idempotent search is parity-only")
    rows = []
    for c11 in (0, 1):
        e = StructuralIdempotent({(1, 1)} if c11 == 0 else (), f"c11={c11}")
        reports = tuple(
            check_idempotent_axiom(field, e, axiom, objs, budget, beta=beta)
            for axiom in AXIOMS
        )
        rows.append(SearchRow(c11, reports))
    return SearchReport(tuple(rows))

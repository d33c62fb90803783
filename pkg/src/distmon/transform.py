"""Monoidal natural transformations and their 2-categorical calculus.

Components are produced by a rule, so a transformation is defined on
every object the checks reach (tensor composites included).  Vertical
composition stacks components; horizontal composition whiskers through
the functors and is verified well-defined (both classical formulas must
agree on the universe) at construction time.  The interchange law and
strict associativity/unitality of horizontal composition are decided on
explicit catalogs by exact componentwise equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .errors import StructureMismatch
from .exactlin import (
    GradedMap, GradedObject, compose, graded_map, identity, identity_matrix,
    pair_decoder, tensor_map, tensor_obj,
)
from .laxfun import LaxFunctor, compose_lax, identity_functor
from .reports import (
    CheckBudget, CheckReport, Coverage, equality_witness, failed, passed,
)


@dataclass(frozen=True, eq=False)
class MonNatTrans:
    name: str
    source_functor: LaxFunctor
    target_functor: LaxFunctor
    component: Callable[[GradedObject], GradedMap]


def identity_transformation(func: LaxFunctor) -> MonNatTrans:
    field = func.target.field
    return MonNatTrans(
        name=f"id[{func.name}]",
        source_functor=func,
        target_functor=func,
        component=lambda x: identity(field, func.obj(x)),
    )


def projection_transformation(f_from: LaxFunctor, f_to: LaxFunctor) -> MonNatTrans:
    """The degree projection between two truncations tau_large => tau_small."""
    for func in (f_from, f_to):
        if not func.info or func.info[0] != "truncation":
            raise StructureMismatch("projection cells connect truncation functors")
    if f_from.source is not f_to.source:
        raise StructureMismatch("projection cells need a shared structure")
    large, small = f_from.info[1], f_to.info[1]
    if small > large:
        raise StructureMismatch(
            f"projection must lower the bound ({large} -> {small})"
        )
    field = f_from.target.field

    def component(x: GradedObject) -> GradedMap:
        src, tgt = f_from.obj(x), f_to.obj(x)
        blocks = {d: identity_matrix(field, k) for d, k in tgt.dims}
        return graded_map(field, src, tgt, blocks)

    return MonNatTrans(
        name=f"pi[{large}->{small}]",
        source_functor=f_from,
        target_functor=f_to,
        component=component,
    )


def scalar_transformation(func: LaxFunctor, c) -> MonNatTrans:
    """c times the identity on every component (a test family: monoidal
    exactly when c = 1)."""
    field = func.target.field

    def component(x: GradedObject) -> GradedMap:
        fx = func.obj(x)
        blocks = {
            d: [[c if r == q else field.zero for q in range(k)] for r in range(k)]
            for d, k in fx.dims
        }
        return graded_map(field, fx, fx, blocks)

    return MonNatTrans(f"scalar[{field.fmt(c)}]", func, func, component)


def vertical(phi: MonNatTrans, theta: MonNatTrans) -> MonNatTrans:
    """phi after theta: F => G => H."""
    if theta.target_functor is not phi.source_functor:
        raise StructureMismatch(
            f"vertical composite {phi.name} o {theta.name}: functors differ"
        )
    return MonNatTrans(
        name=f"({phi.name}.{theta.name})",
        source_functor=theta.source_functor,
        target_functor=phi.target_functor,
        component=lambda x: compose(phi.component(x), theta.component(x)),
    )


def _whisker(phi: MonNatTrans, theta: MonNatTrans) -> MonNatTrans:
    """Horizontal composite without the well-definedness gate."""
    f1, f2 = theta.source_functor, theta.target_functor
    g1, g2 = phi.source_functor, phi.target_functor
    if f1.target is not g1.source:
        raise StructureMismatch(
            f"horizontal composite {phi.name} * {theta.name}: structures differ"
        )
    return MonNatTrans(
        name=f"({phi.name}*{theta.name})",
        source_functor=compose_lax(g1, f1),
        target_functor=compose_lax(g2, f2),
        component=lambda x: compose(
            phi.component(f2.obj(x)), g1.mor(theta.component(x))
        ),
    )


def horizontal(phi: MonNatTrans, theta: MonNatTrans) -> MonNatTrans:
    """phi * theta for theta : F1 => F2 (C -> D), phi : G1 => G2 (D -> E).

    Components are phi_{F2 X} o G1(theta_X); construction verifies the
    alternative formula G2(theta_X) o phi_{F1 X} agrees on the universe.
    """
    out = _whisker(phi, theta)
    f1, f2 = theta.source_functor, theta.target_functor
    g2 = phi.target_functor
    for x in f1.source.universe:
        alt = compose(g2.mor(theta.component(x)), phi.component(f1.obj(x)))
        if equality_witness("", (x,), out.component(x), alt) is not None:
            raise StructureMismatch(
                f"horizontal composite {phi.name} * {theta.name} is ill-defined "
                f"at {x}: the two whiskering formulas disagree"
            )
    return out


# ---------------------------------------------------------------------------
# checkers


def check_monoidal(theta: MonNatTrans, budget: CheckBudget) -> CheckReport:
    """The tensor and unit compatibility squares of a 2-cell."""
    f, g = theta.source_functor, theta.target_functor
    base = f.source
    tuples = 0
    for x, y in product(base.universe, repeat=2):
        if tuples >= budget.max_object_tuples:
            break
        tuples += 1
        lhs = compose(g.mu(x, y),
                      tensor_map(theta.component(x), theta.component(y)))
        rhs = compose(theta.component(tensor_obj(x, y)), f.mu(x, y))
        w = equality_witness("monoidal", (x, y), lhs, rhs,
                             pair_decoder(f.obj(x), f.obj(y)))
        if w is not None:
            return failed("monoidal", Coverage(tuples), w)
    tuples += 1
    lhs = g.mu0
    rhs = compose(theta.component(base.unit), f.mu0)
    w = equality_witness("monoidal", (base.unit,), lhs, rhs)
    if w is not None:
        return failed("monoidal", Coverage(tuples, note="unit"), w)
    return passed("monoidal", Coverage(tuples))


def check_lambda_conjugation(theta: MonNatTrans, budget: CheckBudget) -> CheckReport:
    """theta_Z o F(Lambda_Z) = G(Lambda_Z) o theta_Z for universe Z."""
    f, g = theta.source_functor, theta.target_functor
    tuples = 0
    for z in f.source.universe:
        tuples += 1
        lam = f.source.lambda_map(z)
        lhs = compose(theta.component(z), f.mor(lam))
        rhs = compose(g.mor(lam), theta.component(z))
        w = equality_witness("lambda_conjugation", (z,), lhs, rhs)
        if w is not None:
            return failed("lambda_conjugation", Coverage(tuples), w)
    return passed("lambda_conjugation", Coverage(tuples))


def check_interchange(eta: MonNatTrans, theta: MonNatTrans, phi: MonNatTrans,
                      psi: MonNatTrans, budget: CheckBudget) -> CheckReport:
    """(psi o phi) * (theta o eta) = (psi * theta) o (phi * eta).

    Both sides are assembled through the raw whiskering formula, so a
    corrupted component surfaces as a fail verdict with a witness.
    """
    lhs = _whisker(vertical(psi, phi), vertical(theta, eta))
    rhs = vertical(_whisker(psi, theta), _whisker(phi, eta))
    tuples = 0
    for x in eta.source_functor.source.universe:
        tuples += 1
        w = equality_witness("interchange", (x,), lhs.component(x),
                             rhs.component(x))
        if w is not None:
            return failed("interchange", Coverage(tuples), w)
    return passed("interchange", Coverage(tuples))


def _components_equal(axiom, a: MonNatTrans, b: MonNatTrans, universe):
    for x in universe:
        w = equality_witness(axiom, (x,), a.component(x), b.component(x))
        if w is not None:
            return w
    return None


def check_horizontal_strictness(chains: Sequence[Sequence[MonNatTrans]],
                                budget: CheckBudget) -> CheckReport:
    """Associativity of * on 3-cell chains plus both unit laws per cell.

    Each chain lists composable 2-cells innermost first; non-composable
    chains raise StructureMismatch rather than producing a fail verdict.
    """
    tuples = 0
    for chain in chains:
        if len(chain) != 3:
            raise StructureMismatch("horizontal strictness chains have length 3")
        a, b, c = chain
        universe = a.source_functor.source.universe
        left = horizontal(c, horizontal(b, a))
        right = horizontal(horizontal(c, b), a)
        tuples += len(universe)
        w = _components_equal("horizontal_strictness", left, right, universe)
        if w is not None:
            return failed("horizontal_strictness",
                          Coverage(tuples, note="associativity"), w)
    seen = []
    for chain in chains:
        for cell in chain:
            if all(cell is not s for s in seen):
                seen.append(cell)
    for cell in seen:
        universe = cell.source_functor.source.universe
        id_src = identity_transformation(identity_functor(cell.source_functor.source))
        id_tgt = identity_transformation(identity_functor(cell.source_functor.target))
        tuples += 2 * len(universe)
        w = _components_equal("horizontal_strictness",
                              horizontal(cell, id_src), cell, universe)
        if w is None:
            w = _components_equal("horizontal_strictness",
                                  horizontal(id_tgt, cell), cell, universe)
        if w is not None:
            return failed("horizontal_strictness",
                          Coverage(tuples, note="unit law"), w)
    return passed("horizontal_strictness", Coverage(tuples))

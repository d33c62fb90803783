"""Lax monoidal functors compatible with the distortion pair.

A functor here is a concrete description: object map, morphism map, the
laxator family mu(X, Y) : FX (x)' FY -> F(X (x) Y) and the unit map
mu0 : I' -> FI.  Three constructors cover the interesting ground:

* the identity functor (everything is the identity),
* degree truncation over the natural-number grading -- genuinely lax,
  mu is a projection-shaped partial identity,
* the degree collapse onto the trivially graded structure -- the functor
  that forgets degrees, which breaks strict unit-distortion
  compatibility whenever the source unit distortion is nontrivial.

Composition builds the composite laxators
``mu^{GF}(X,Y) = G(mu^F(X,Y)) o mu^G(FX,FY)`` and
``mu0^{GF} = G(mu0^F) o mu0^G``; both bracketings of a triple composite
produce blockwise equal data, and the strictness checker verifies that
on concrete universes rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product
from typing import Callable

from .errors import MonoidMismatch, StructureMismatch
from .exactlin import (
    GradedMap, GradedObject, TRIVIAL, associator, compose, graded_map,
    identity, identity_matrix, left_unitor, pair_basis, pair_decoder,
    right_unitor, sort_universe, tensor_map, tensor_obj,
    triple_decoder_left, unit_object, zero_map,
)
from .distortion import DistortedStructure, identity_unit, symmetric_braiding
from .reports import (
    CheckBudget, CheckReport, Coverage, equality_witness, failed, passed,
)
from .sampling import map_batch


@dataclass(frozen=True, eq=False)
class LaxFunctor:
    name: str
    source: DistortedStructure
    target: DistortedStructure
    degree_map: Callable[[int], int]
    obj: Callable[[GradedObject], GradedObject]
    mor: Callable[[GradedMap], GradedMap]
    mu: Callable[[GradedObject, GradedObject], GradedMap]
    mu0: GradedMap
    info: tuple = ()


def identity_functor(ds: DistortedStructure) -> LaxFunctor:
    field = ds.field
    return LaxFunctor(
        name="Id",
        source=ds,
        target=ds,
        degree_map=lambda d: d,
        obj=lambda x: x,
        mor=lambda f: f,
        mu=lambda x, y: identity(field, tensor_obj(x, y)),
        mu0=identity(field, ds.unit),
        info=("identity",),
    )


def truncation_functor(ds: DistortedStructure, bound: int) -> LaxFunctor:
    """Kill all degrees above ``bound``; lax but not strong."""
    if ds.monoid.kind != "nat":
        raise MonoidMismatch("truncation needs the natural-number grading")
    field = ds.field

    def obj(x: GradedObject) -> GradedObject:
        return GradedObject(x.monoid, tuple((d, k) for d, k in x.dims if d <= bound))

    def mor(f: GradedMap) -> GradedMap:
        blocks = {d: m for d, m in f.blocks if d <= bound}
        return graded_map(field, obj(f.source), obj(f.target), blocks)

    def mu(x: GradedObject, y: GradedObject) -> GradedMap:
        src = tensor_obj(obj(x), obj(y))
        tgt = obj(tensor_obj(x, y))
        blocks = {}
        for d in src.degrees:
            if d <= bound:
                blocks[d] = identity_matrix(field, src.dim(d))
        return graded_map(field, src, tgt, blocks)

    return LaxFunctor(
        name=f"tau{bound}",
        source=ds,
        target=ds,
        degree_map=lambda d: d,
        obj=obj,
        mor=mor,
        mu=mu,
        mu0=identity(field, ds.unit),
        info=("truncation", bound),
    )


def collapse_functor(ds: DistortedStructure,
                     target: DistortedStructure = None) -> LaxFunctor:
    """Forget the grading: total dimension in degree 0, block-diagonal maps.

    The default target carries the symmetric flip and the identity unit
    distortion on the trivially graded images of the source universe.
    """
    field = ds.field

    def obj(x: GradedObject) -> GradedObject:
        total = x.total_dim
        return GradedObject(TRIVIAL, ((0, total),) if total else ())

    def _positions(x: GradedObject) -> dict:
        pos = {}
        p = 0
        for d, k in x.dims:
            for a in range(k):
                pos[(d, a)] = p
                p += 1
        return pos

    def mor(f: GradedMap) -> GradedMap:
        src, tgt = obj(f.source), obj(f.target)
        if src.total_dim == 0 or tgt.total_dim == 0:
            return zero_map(field, src, tgt)
        zero = field.zero
        rows = [[zero] * src.total_dim for _ in range(tgt.total_dim)]
        spos, tpos = _positions(f.source), _positions(f.target)
        for d, block in f.blocks:
            r0, c0 = tpos[(d, 0)], spos[(d, 0)]
            for r, row in enumerate(block):
                for c, v in enumerate(row):
                    if v != zero:
                        rows[r0 + r][c0 + c] = v
        return graded_map(field, src, tgt, {0: rows})

    def mu(x: GradedObject, y: GradedObject) -> GradedMap:
        src = tensor_obj(obj(x), obj(y))
        xy = tensor_obj(x, y)
        tgt = obj(xy)
        if src.total_dim == 0:
            return zero_map(field, src, tgt)
        xpos, ypos = _positions(x), _positions(y)
        dy = y.total_dim
        tpos = {}
        p = 0
        for n in xy.degrees:
            for lab in pair_basis(x, y, n):
                tpos[lab] = p
                p += 1
        zero, one = field.zero, field.one
        rows = [[zero] * src.total_dim for _ in range(tgt.total_dim)]
        for (i, a), px in xpos.items():
            for (j, b), py in ypos.items():
                rows[tpos[(i, j, a, b)]][px * dy + py] = one
        return graded_map(field, src, tgt, {0: rows})

    if target is None:
        images = [obj(x) for x in ds.universe] + [unit_object(TRIVIAL)]
        target = DistortedStructure(
            field, TRIVIAL, sort_universe(images),
            symmetric_braiding(), identity_unit(),
        )

    return LaxFunctor(
        name="U",
        source=ds,
        target=target,
        degree_map=lambda d: 0,
        obj=obj,
        mor=mor,
        mu=mu,
        mu0=identity(field, target.unit),
        info=("collapse",),
    )


@cache
def compose_lax(g: LaxFunctor, f: LaxFunctor) -> LaxFunctor:
    """g after f, with the composite laxators.

    Memoized so that repeated composites of the same 1-cells are the same
    object; 2-cell composition relies on that identity.
    """
    if f.target is not g.source:
        raise StructureMismatch(
            f"cannot compose {g.name} after {f.name}: structures differ"
        )

    def mu(x, y):
        return compose(g.mor(f.mu(x, y)), g.mu(f.obj(x), f.obj(y)))

    return LaxFunctor(
        name=f"{g.name}*{f.name}",
        source=f.source,
        target=g.target,
        degree_map=lambda d: g.degree_map(f.degree_map(d)),
        obj=lambda x: g.obj(f.obj(x)),
        mor=lambda m: g.mor(f.mor(m)),
        mu=mu,
        mu0=compose(g.mor(f.mu0), g.mu0),
        info=("composite", f.info, g.info),
    )


# ---------------------------------------------------------------------------
# checkers


def check_lax_axioms(func: LaxFunctor, budget: CheckBudget) -> CheckReport:
    """Lax pentagon over universe triples and both unit triangles."""
    field = func.target.field
    src_unit = func.source.unit

    tuples = 0
    for x in func.source.universe:
        tuples += 1
        fx = func.obj(x)
        lhs = compose(func.mor(left_unitor(field, x)),
                      compose(func.mu(src_unit, x),
                              tensor_map(func.mu0, identity(field, fx))))
        rhs = left_unitor(field, fx)
        w = equality_witness("lax", (x,), lhs, rhs)
        if w is not None:
            return failed("lax", Coverage(tuples, note="left unit"), w)
        lhs = compose(func.mor(right_unitor(field, x)),
                      compose(func.mu(x, src_unit),
                              tensor_map(identity(field, fx), func.mu0)))
        rhs = right_unitor(field, fx)
        w = equality_witness("lax", (x,), lhs, rhs)
        if w is not None:
            return failed("lax", Coverage(tuples, note="right unit"), w)

    triples = 0
    for x, y, z in product(func.source.universe, repeat=3):
        if triples >= budget.max_object_tuples:
            break
        triples += 1
        fx, fy, fz = func.obj(x), func.obj(y), func.obj(z)
        lhs = compose(
            func.mor(associator(field, x, y, z)),
            compose(func.mu(tensor_obj(x, y), z),
                    tensor_map(func.mu(x, y), identity(field, fz))))
        rhs = compose(
            func.mu(x, tensor_obj(y, z)),
            compose(tensor_map(identity(field, fx), func.mu(y, z)),
                    associator(field, fx, fy, fz)))
        w = equality_witness("lax", (x, y, z), lhs, rhs,
                             triple_decoder_left(fx, fy, fz))
        if w is not None:
            return failed("lax", Coverage(tuples + triples, note="pentagon"), w)
    note = f"unit objects={tuples} pentagon triples={triples}"
    return passed("lax", Coverage(tuples + triples, note=note))


def check_SLambda(func: LaxFunctor, budget: CheckBudget) -> CheckReport:
    """Strict unit-distortion compatibility F(Lambda_Z) = Lambda'_{FZ}."""
    tuples = 0
    for z in func.source.universe:
        tuples += 1
        lhs = func.mor(func.source.lambda_map(z))
        rhs = func.target.lambda_map(func.obj(z))
        w = equality_witness("SLambda", (z,), lhs, rhs)
        if w is not None:
            return failed("SLambda", Coverage(tuples), w)
    return passed("SLambda", Coverage(tuples))


def check_Ssigma(func: LaxFunctor, budget: CheckBudget) -> CheckReport:
    """F(sigma_{X,Y}) o mu(X,Y) = mu(Y,X) o sigma'_{FX,FY}."""
    tuples = 0
    for x, y in product(func.source.universe, repeat=2):
        if tuples >= budget.max_object_tuples:
            break
        tuples += 1
        fx, fy = func.obj(x), func.obj(y)
        lhs = compose(func.mor(func.source.sigma_map(x, y)), func.mu(x, y))
        rhs = compose(func.mu(y, x), func.target.sigma_map(fx, fy))
        w = equality_witness("Ssigma", (x, y), lhs, rhs, pair_decoder(fx, fy))
        if w is not None:
            return failed("Ssigma", Coverage(tuples), w)
    return passed("Ssigma", Coverage(tuples))


def check_laxator_naturality(func: LaxFunctor, budget: CheckBudget) -> CheckReport:
    """mu(X',Y') o (F(u) (x)' F(v)) = F(u (x) v) o mu(X,Y) on sampled maps."""
    field = func.target.field
    tuples = 0
    sampled = 0
    for x, y, xp, yp in product(func.source.universe, repeat=4):
        if tuples >= budget.max_object_tuples:
            break
        tuples += 1
        sid = f"mu_nat:{func.name}:{tuples - 1}"
        us = map_batch(field, x, xp, budget, sid + ":u")
        vs = map_batch(field, y, yp, budget, sid + ":v")
        for u, v in zip(us, vs):
            sampled += 1
            lhs = compose(func.mu(xp, yp), tensor_map(func.mor(u), func.mor(v)))
            rhs = compose(func.mor(tensor_map(u, v)), func.mu(x, y))
            w = equality_witness("laxator_naturality", (x, y, xp, yp), lhs, rhs,
                                 pair_decoder(func.obj(x), func.obj(y)))
            if w is not None:
                return failed("laxator_naturality", Coverage(tuples, sampled), w)
    return passed("laxator_naturality", Coverage(tuples, sampled))


def check_triple_strictness(h: LaxFunctor, g: LaxFunctor, f: LaxFunctor,
                            budget: CheckBudget,
                            compose_fn=None) -> CheckReport:
    """Blockwise equality of both bracketings of the composite laxators.

    ``compose_fn`` is a test hook; the default is the real composition.
    """
    compose_fn = compose_fn or compose_lax
    left = compose_fn(h, compose_fn(g, f))
    right = compose_fn(compose_fn(h, g), f)
    tuples = 1
    w = equality_witness("triple_strictness", (f.source.unit,), left.mu0, right.mu0)
    if w is not None:
        return failed("triple_strictness", Coverage(tuples, note="unit"), w)
    for x, y in product(f.source.universe, repeat=2):
        if tuples > budget.max_object_tuples:
            break
        tuples += 1
        w = equality_witness("triple_strictness", (x, y), left.mu(x, y),
                             right.mu(x, y))
        if w is not None:
            return failed("triple_strictness", Coverage(tuples), w)
    return passed("triple_strictness", Coverage(tuples))

"""Shared helpers for the test suite."""

from fractions import Fraction

import hypothesis.strategies as st

from distmon import GradedObject, graded_map
from distmon.fields import RATIONAL

Q = RATIONAL


def obj(monoid, table):
    return GradedObject.of(monoid, table)


def frac_rows(rows):
    return [[Fraction(v) for v in row] for row in rows]


def qmap(src, tgt, blocks):
    """Rational graded map from int/str matrix literals."""
    return graded_map(Q, src, tgt, {d: frac_rows(m) for d, m in blocks.items()})


def degrees_for(monoid, max_degree):
    if monoid.kind == "trivial":
        return [0]
    if monoid.kind == "parity":
        return [0, 1]
    return list(range(max_degree + 1))


def object_strategy(monoid, max_degree=2, max_dim=2, max_support=2):
    return st.dictionaries(
        st.sampled_from(degrees_for(monoid, max_degree)),
        st.integers(1, max_dim),
        min_size=1,
        max_size=max_support,
    ).map(lambda table: GradedObject.of(monoid, table))


PALETTE = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)]


def map_strategy(draw, src, tgt):
    """Draw a degree-preserving rational map inside an st.composite/data."""
    blocks = {}
    for d in src.degrees:
        m, n = tgt.dim(d), src.dim(d)
        if m == 0:
            continue
        rows = draw(st.lists(
            st.lists(st.sampled_from(PALETTE), min_size=n, max_size=n),
            min_size=m, max_size=m,
        ))
        blocks[d] = rows
    return graded_map(Q, src, tgt, blocks)

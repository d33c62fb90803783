"""Graded vector spaces over an exact field.

Objects are finitely supported degree -> dimension tables over a grading
monoid; maps are degree-preserving and stored as one exact matrix block
per degree (absent blocks are zero).  Tensor products fix the basis layout
once and for all:

* at total degree ``n`` the summands ``X_i (x) Y_j`` are concatenated in
  ascending order of the first-factor degree ``i``;
* inside one summand indices are row-major (X index outer, Y index inner).

With that discipline the associator and the unitors are concrete
permutation matrices, and every identity in this package is decided by
entrywise scalar equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .errors import MonoidMismatch, ObjectMismatch
from .reports import CheckBudget, CheckReport, Coverage, equality_witness, failed, passed


# ---------------------------------------------------------------------------
# grading monoids


@dataclass(frozen=True)
class GradingMonoid:
    """A commutative monoid of degrees: {0}, Z/2 or N."""

    kind: str  # "trivial" | "parity" | "nat"

    zero = 0

    def add(self, a: int, b: int) -> int:
        if self.kind == "parity":
            return (a + b) & 1
        if self.kind == "nat":
            return a + b
        return 0

    def valid_degree(self, d: int) -> bool:
        if not isinstance(d, int) or d < 0:
            return False
        if self.kind == "trivial":
            return d == 0
        if self.kind == "parity":
            return d in (0, 1)
        return True


TRIVIAL = GradingMonoid("trivial")
PARITY = GradingMonoid("parity")
NAT = GradingMonoid("nat")

MONOIDS = {"trivial": TRIVIAL, "parity": PARITY, "nat": NAT}


# ---------------------------------------------------------------------------
# objects


@dataclass(frozen=True)
class GradedObject:
    """Finitely supported degree -> dimension table (dimensions >= 1)."""

    monoid: GradingMonoid
    dims: tuple[tuple[int, int], ...]  # sorted by degree

    @staticmethod
    def of(monoid: GradingMonoid, dims: Mapping[int, int]) -> "GradedObject":
        items = []
        for d, k in dims.items():
            if not monoid.valid_degree(d):
                raise MonoidMismatch(f"degree {d} invalid for {monoid.kind} grading")
            if not isinstance(k, int) or k < 1:
                raise ObjectMismatch(f"dimension at degree {d} must be >= 1, got {k!r}")
            items.append((d, k))
        return GradedObject(monoid, tuple(sorted(items)))

    def dim(self, degree: int) -> int:
        for d, k in self.dims:
            if d == degree:
                return k
        return 0

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.dims)

    @property
    def total_dim(self) -> int:
        return sum(k for _, k in self.dims)

    def __str__(self) -> str:
        inner = ", ".join(f"{d}:{k}" for d, k in self.dims)
        return "{" + inner + "}"


def unit_object(monoid: GradingMonoid) -> GradedObject:
    return GradedObject.of(monoid, {0: 1})


def canonical_key(obj: GradedObject):
    """Sort key for universes: smaller supports first, then lexicographic."""
    return (len(obj.dims), obj.dims)


def sort_universe(objs: Iterable[GradedObject]) -> tuple[GradedObject, ...]:
    return tuple(sorted(set(objs), key=canonical_key))


# ---------------------------------------------------------------------------
# tensor layout

Label = tuple  # (i, j, a, b) for pairs, (i, j, k, a, b, c) for triples


def pair_summands(x: GradedObject, y: GradedObject, n: int) -> list[tuple[int, int]]:
    """Degree pairs (i, j) with i + j = n, ascending in i."""
    out = [
        (i, j)
        for i in x.degrees
        for j in y.degrees
        if x.monoid.add(i, j) == n
    ]
    out.sort()
    return out


def pair_basis(x: GradedObject, y: GradedObject, n: int) -> list[Label]:
    """Basis labels (i, j, a, b) of (X (x) Y)_n in layout order."""
    labels = []
    for i, j in pair_summands(x, y, n):
        for a in range(x.dim(i)):
            for b in range(y.dim(j)):
                labels.append((i, j, a, b))
    return labels


@cache
def tensor_obj(x: GradedObject, y: GradedObject) -> GradedObject:
    if x.monoid != y.monoid:
        raise MonoidMismatch(f"cannot tensor {x.monoid.kind} with {y.monoid.kind}")
    dims: dict[int, int] = {}
    for i, ki in x.dims:
        for j, kj in y.dims:
            n = x.monoid.add(i, j)
            dims[n] = dims.get(n, 0) + ki * kj
    return GradedObject(x.monoid, tuple(sorted(dims.items())))


def triple_basis_left(x: GradedObject, y: GradedObject, z: GradedObject, n: int) -> list[Label]:
    """Basis labels (i, j, k, a, b, c) of ((X (x) Y) (x) Z)_n in layout order."""
    xy = tensor_obj(x, y)
    labels = []
    for m, k in pair_summands(xy, z, n):
        for i, j in pair_summands(x, y, m):
            for a in range(x.dim(i)):
                for b in range(y.dim(j)):
                    for c in range(z.dim(k)):
                        labels.append((i, j, k, a, b, c))
    return labels


def triple_basis_right(x: GradedObject, y: GradedObject, z: GradedObject, n: int) -> list[Label]:
    """Basis labels (i, j, k, a, b, c) of (X (x) (Y (x) Z))_n in layout order."""
    yz = tensor_obj(y, z)
    labels = []
    for i, m in pair_summands(x, yz, n):
        for a in range(x.dim(i)):
            for j, k in pair_summands(y, z, m):
                for b in range(y.dim(j)):
                    for c in range(z.dim(k)):
                        labels.append((i, j, k, a, b, c))
    return labels


# ---------------------------------------------------------------------------
# exact matrices (tuples of row tuples)


def identity_matrix(field, n: int):
    one, zero = field.one, field.zero
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def mat_is_zero(m, zero) -> bool:
    return all(v == zero for row in m for v in row)


def mat_mul(field, a, b):
    rows_a = len(a)
    rows_b = len(b)
    cols_b = len(b[0]) if rows_b else 0
    zero = field.zero
    one = field.one
    add, mul = field.add, field.mul
    out = []
    for i in range(rows_a):
        ai = a[i]
        acc = [zero] * cols_b
        for t in range(rows_b):
            x = ai[t]
            if x == zero:
                continue
            bt = b[t]
            if x == one:
                for j in range(cols_b):
                    y = bt[j]
                    if y != zero:
                        acc[j] = add(acc[j], y)
            else:
                for j in range(cols_b):
                    y = bt[j]
                    if y != zero:
                        acc[j] = add(acc[j], mul(x, y))
        out.append(tuple(acc))
    return tuple(out)


def kron(field, a, b):
    rows_b = len(b)
    cols_b = len(b[0]) if rows_b else 0
    zero, one = field.zero, field.one
    mul = field.mul
    out = []
    for arow in a:
        for p in range(rows_b):
            brow = b[p]
            row: list = []
            for x in arow:
                if x == zero:
                    row.extend([zero] * cols_b)
                elif x == one:
                    row.extend(brow)
                else:
                    row.extend(mul(x, y) for y in brow)
            out.append(tuple(row))
    return tuple(out)


def mat_transpose(m):
    if not m:
        return ()
    return tuple(zip(*m))


def mat_rank(field, m) -> int:
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    zero = field.zero
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if rows[r][col] != zero:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] != zero:
                f = rows[r][col]
                rows[r] = [
                    field.sub(v, field.mul(f, w)) for v, w in zip(rows[r], rows[rank])
                ]
        rank += 1
        if rank == nrows:
            break
    return rank


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True)
class GradedMap:
    """Degree-preserving linear map, one block per shared degree.

    Absent blocks denote zero; the constructor below drops all-zero blocks
    so structural equality of two maps is exact map equality.
    """

    field: object
    source: GradedObject
    target: GradedObject
    blocks: tuple[tuple[int, tuple], ...]

    def block(self, degree: int):
        for d, m in self.blocks:
            if d == degree:
                return m
        return None

    def __str__(self) -> str:
        parts = ", ".join(f"{d}: {m}" for d, m in self.blocks)
        return f"{self.source} -> {self.target} [{parts}]"


def graded_map(field, source: GradedObject, target: GradedObject,
               blocks: Mapping[int, Sequence[Sequence]]) -> GradedMap:
    """Validating constructor; drops all-zero blocks."""
    if source.monoid != target.monoid:
        raise MonoidMismatch("map endpoints use different grading monoids")
    clean = []
    for d, rows in blocks.items():
        m, n = target.dim(d), source.dim(d)
        if m == 0 or n == 0:
            raise ObjectMismatch(f"block at degree {d} absent from source or target")
        mat = tuple(tuple(row) for row in rows)
        if len(mat) != m or any(len(row) != n for row in mat):
            raise ObjectMismatch(
                f"block at degree {d} must have shape {m}x{n}"
            )
        if not mat_is_zero(mat, field.zero):
            clean.append((d, mat))
    return GradedMap(field, source, target, tuple(sorted(clean)))


def _raw_map(field, source, target, blocks: dict) -> GradedMap:
    """Fast internal constructor: blocks already shaped, zeros dropped here."""
    clean = tuple(
        sorted((d, m) for d, m in blocks.items() if not mat_is_zero(m, field.zero))
    )
    return GradedMap(field, source, target, clean)


def zero_map(field, source: GradedObject, target: GradedObject) -> GradedMap:
    if source.monoid != target.monoid:
        raise MonoidMismatch("map endpoints use different grading monoids")
    return GradedMap(field, source, target, ())


def identity(field, x: GradedObject) -> GradedMap:
    blocks = {d: identity_matrix(field, k) for d, k in x.dims}
    return GradedMap(field, x, x, tuple(sorted(blocks.items())))


def compose(g: GradedMap, f: GradedMap) -> GradedMap:
    """g after f."""
    if f.field != g.field:
        raise ObjectMismatch("cannot compose maps over different fields")
    if f.target != g.source:
        raise ObjectMismatch(
            f"compose: inner objects differ ({f.target} vs {g.source})"
        )
    fb = dict(f.blocks)
    out = {}
    for d, gb in g.blocks:
        if d in fb:
            out[d] = mat_mul(g.field, gb, fb[d])
    return _raw_map(g.field, f.source, g.target, out)


def tensor_map(f: GradedMap, g: GradedMap) -> GradedMap:
    if f.field != g.field:
        raise ObjectMismatch("cannot tensor maps over different fields")
    if f.source.monoid != g.source.monoid:
        raise MonoidMismatch("cannot tensor maps over different grading monoids")
    field = f.field
    src = tensor_obj(f.source, g.source)
    tgt = tensor_obj(f.target, g.target)
    fb, gb = dict(f.blocks), dict(g.blocks)
    zero = field.zero
    out = {}
    for n in src.degrees:
        tdim = tgt.dim(n)
        if tdim == 0:
            continue
        src_pairs = pair_summands(f.source, g.source, n)
        tgt_pairs = pair_summands(f.target, g.target, n)
        col_off = {}
        off = 0
        for i, j in src_pairs:
            col_off[(i, j)] = off
            off += f.source.dim(i) * g.source.dim(j)
        row_off = {}
        off = 0
        for i, j in tgt_pairs:
            row_off[(i, j)] = off
            off += f.target.dim(i) * g.target.dim(j)
        rows = [[zero] * src.dim(n) for _ in range(tdim)]
        for i, j in src_pairs:
            if (i, j) not in row_off:
                continue
            a, b = fb.get(i), gb.get(j)
            if a is None or b is None:
                continue
            kr = kron(field, a, b)
            r0, c0 = row_off[(i, j)], col_off[(i, j)]
            for r, krow in enumerate(kr):
                row = rows[r0 + r]
                for c, v in enumerate(krow):
                    if v != zero:
                        row[c0 + c] = v
        out[n] = tuple(tuple(r) for r in rows)
    return _raw_map(field, src, tgt, out)


def _permutation_map(field, source, target, send: Callable[[int, Label], Label],
                     source_labels, target_labels) -> GradedMap:
    """Build the permutation map sending each source basis label through `send`."""
    zero, one = field.zero, field.one
    out = {}
    for n in source.degrees:
        src = source_labels(n)
        tpos = {lab: r for r, lab in enumerate(target_labels(n))}
        rows = [[zero] * len(src) for _ in range(target.dim(n))]
        for c, lab in enumerate(src):
            rows[tpos[send(n, lab)]][c] = one
        out[n] = tuple(tuple(r) for r in rows)
    return _raw_map(field, source, target, out)


@cache
def associator(field, x: GradedObject, y: GradedObject, z: GradedObject) -> GradedMap:
    """(X (x) Y) (x) Z -> X (x) (Y (x) Z), a permutation at each degree."""
    left = tensor_obj(tensor_obj(x, y), z)
    right = tensor_obj(x, tensor_obj(y, z))
    return _permutation_map(
        field, left, right,
        lambda n, lab: lab,
        lambda n: triple_basis_left(x, y, z, n),
        lambda n: triple_basis_right(x, y, z, n),
    )


@cache
def associator_inv(field, x: GradedObject, y: GradedObject, z: GradedObject) -> GradedMap:
    a = associator(field, x, y, z)
    blocks = {d: mat_transpose(m) for d, m in a.blocks}
    return _raw_map(field, a.target, a.source, blocks)


@cache
def left_unitor(field, x: GradedObject) -> GradedMap:
    """I (x) X -> X (identity permutation in this layout)."""
    src = tensor_obj(unit_object(x.monoid), x)
    blocks = {d: identity_matrix(field, k) for d, k in x.dims}
    return GradedMap(field, src, x, tuple(sorted(blocks.items())))


@cache
def left_unitor_inv(field, x: GradedObject) -> GradedMap:
    u = left_unitor(field, x)
    return GradedMap(field, x, u.source, u.blocks)


@cache
def right_unitor(field, x: GradedObject) -> GradedMap:
    """X (x) I -> X (identity permutation in this layout)."""
    src = tensor_obj(x, unit_object(x.monoid))
    blocks = {d: identity_matrix(field, k) for d, k in x.dims}
    return GradedMap(field, src, x, tuple(sorted(blocks.items())))


@cache
def right_unitor_inv(field, x: GradedObject) -> GradedMap:
    u = right_unitor(field, x)
    return GradedMap(field, x, u.source, u.blocks)


# ---------------------------------------------------------------------------
# witness decoders


def pair_decoder(x: GradedObject, y: GradedObject):
    """Column -> (i, j) factor degrees for a map out of X (x) Y."""
    def decode(degree: int, col: int):
        i, j, _, _ = pair_basis(x, y, degree)[col]
        return (i, j)
    return decode


def triple_decoder_left(x: GradedObject, y: GradedObject, z: GradedObject):
    """Column -> (i, j, k) for a map out of (X (x) Y) (x) Z."""
    def decode(degree: int, col: int):
        i, j, k, _, _, _ = triple_basis_left(x, y, z, degree)[col]
        return (i, j, k)
    return decode


def triple_decoder_right(x: GradedObject, y: GradedObject, z: GradedObject):
    """Column -> (i, j, k) for a map out of X (x) (Y (x) Z)."""
    def decode(degree: int, col: int):
        i, j, k, _, _, _ = triple_basis_right(x, y, z, degree)[col]
        return (i, j, k)
    return decode


# ---------------------------------------------------------------------------
# base coherence


def check_base(field, universe: Sequence[GradedObject], budget: CheckBudget,
               assoc: Callable = None) -> CheckReport:
    """Pentagon (quadruples, capped by budget) and triangle (all pairs).

    ``assoc`` is a test hook; the default is the canonical associator.
    """
    if not universe:
        raise ObjectMismatch("check_base needs a nonempty universe")
    assoc = assoc or associator
    objs = sort_universe(universe)
    unit = unit_object(objs[0].monoid)

    pairs = 0
    for x, y in product(objs, repeat=2):
        lhs = compose(tensor_map(identity(field, x), left_unitor(field, y)),
                      assoc(field, x, unit, y))
        rhs = tensor_map(right_unitor(field, x), identity(field, y))
        pairs += 1
        w = equality_witness("base", (x, y), lhs, rhs)
        if w is not None:
            return failed("base", Coverage(pairs, note="triangle"), w)

    quads = 0
    for w_, x, y, z in product(objs, repeat=4):
        if quads >= budget.max_object_tuples:
            break
        p1 = compose(assoc(field, w_, x, tensor_obj(y, z)),
                     assoc(field, tensor_obj(w_, x), y, z))
        p2 = compose(tensor_map(identity(field, w_), assoc(field, x, y, z)),
                     compose(assoc(field, w_, tensor_obj(x, y), z),
                             tensor_map(assoc(field, w_, x, y), identity(field, z))))
        quads += 1
        wit = equality_witness("base", (w_, x, y, z), p1, p2)
        if wit is not None:
            return failed("base", Coverage(pairs + quads, note="pentagon"), wit)

    note = f"triangle pairs={pairs} pentagon quadruples={quads}"
    return passed("base", Coverage(pairs + quads, note=note))

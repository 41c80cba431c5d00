"""Exact rational dense linear algebra.

Vectors are tuples of Fraction, matrices are small and dense.  A Subspace is
stored as its reduced row-echelon basis, so two subspaces are equal iff their
canonical bases are equal as sequences.  Everything is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


@dataclass(frozen=True)
class Mat:
    """Dense row-major rational matrix."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        rows = [vec(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count from an empty matrix")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]


def _rref_rows(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place Gauss-Jordan; returns the nonzero rows in RREF."""
    if not rows:
        return []
    ncols = len(rows[0])
    piv_r = 0
    for piv_c in range(ncols):
        pivot = None
        for i in range(piv_r, len(rows)):
            if rows[i][piv_c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[piv_r], rows[pivot] = rows[pivot], rows[piv_r]
        inv = 1 / rows[piv_r][piv_c]
        if inv != 1:
            rows[piv_r] = [x * inv for x in rows[piv_r]]
        for i in range(len(rows)):
            if i != piv_r and rows[i][piv_c] != 0:
                f = rows[i][piv_c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv_r])]
        piv_r += 1
        if piv_r == len(rows):
            break
    return [r for r in rows[:piv_r]]


def rref(m: Mat) -> Mat:
    """Reduced row-echelon form; zero rows are dropped (row space preserved)."""
    reduced = _rref_rows(m.row_list())
    return Mat(len(reduced), m.cols, tuple(x for r in reduced for x in r))


@dataclass(frozen=True)
class Subspace:
    """Canonical subspace of Q^ambient_dim: RREF basis, pivots increasing."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return not any(self.reduce(v))

    def reduce(self, v: Sequence) -> Vector:
        """Residual of v after elimination by the basis rows."""
        v = list(vec(v))
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        for row in self.basis:
            p = _pivot(row)
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot(r) for r in self.basis)


def _pivot(row: Vector) -> int:
    for j, x in enumerate(row):
        if x != 0:
            return j
    raise ValueError("zero row has no pivot")


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    rows = [list(vec(v)) for v in vectors]
    for r in rows:
        if len(r) != ambient_dim:
            raise ValueError("ambient dimension mismatch")
    reduced = _rref_rows(rows)
    return Subspace(ambient_dim, tuple(tuple(r) for r in reduced))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return span(list(a.basis) + list(b.basis), a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: RREF of [A|A; B|0], rows with zero left block span a cap b."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = a.ambient_dim
    zero = [Fraction(0)] * n
    rows = [list(r) + list(r) for r in a.basis]
    rows += [list(r) + zero for r in b.basis]
    reduced = _rref_rows(rows)
    inter = [r[n:] for r in reduced if not any(r[:n])]
    return span(inter, n)


def nullspace(m: Mat) -> Subspace:
    """Right null space {v : m v = 0} as a canonical subspace of Q^cols."""
    red = rref(m)
    piv_cols = []
    rows = red.row_list()
    for r in rows:
        piv_cols.append(_pivot(tuple(r)))
    free_cols = [c for c in range(m.cols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r, pc in zip(rows, piv_cols):
            v[pc] = -r[fc]
        basis.append(v)
    return span(basis, m.cols)

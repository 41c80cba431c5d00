"""Brute-force dimensions of nonsymmetric operads given by arity-3 relations.

The degree-n component of the operadic ideal generated by the relations is
spanned by all graftings: inner trees into the three slots of a relation,
and the result into one leaf of an outer context tree.  The span's rank is
computed by incremental sparse Gaussian elimination over the rationals.
This module is deliberately unclever; it is the trust anchor for the
Groebner-basis claims.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .treeterm import LEAF, NsElement, Tree, arity

DEFAULT_CAP = 7


def oracle_cap() -> int:
    return int(os.environ.get("OPERAD_FORGE_ORACLE_CAP", DEFAULT_CAP))


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


@lru_cache(maxsize=None)
def free_trees(n: int, ops: tuple[str, ...] = ("x", "y")) -> tuple[Tree, ...]:
    """All planar binary trees of arity n with node labels from ops."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    if n == 1:
        return (LEAF,)
    out = []
    for op in ops:
        for k in range(1, n):
            for l in free_trees(k, ops):
                for r in free_trees(n - k, ops):
                    out.append((op, l, r))
    return tuple(out)


def free_dim(n: int, ops: Sequence[str] = ("x", "y")) -> int:
    return len(ops) ** (n - 1) * catalan(n - 1)


def _graft_leaves(t: Tree, subs: Sequence[Tree], i: int = 0) -> tuple[Tree, int]:
    if t == LEAF:
        return subs[i], i + 1
    l, i = _graft_leaves(t[1], subs, i)
    r, i = _graft_leaves(t[2], subs, i)
    return (t[0], l, r), i


def _plug(context: Tree, leaf_index: int, sub: Tree) -> Tree:
    """Replace the leaf_index-th leaf (left to right) of context by sub."""

    def go(t: Tree, i: int) -> tuple[Tree, int]:
        if t == LEAF:
            return (sub if i == leaf_index else t), i + 1
        l, i = go(t[1], i)
        r, i = go(t[2], i)
        return (t[0], l, r), i

    out, _ = go(context, 0)
    return out


def _compositions3(m: int):
    for a in range(1, m - 1):
        for b in range(1, m - a):
            yield a, b, m - a - b


def consequences(rels: Iterable[NsElement], n: int,
                 ops: tuple[str, ...] = ("x", "y")) -> list[dict[int, Fraction]]:
    """Sparse vectors spanning the degree-n component of the ideal."""
    if n < 3:
        raise ValueError("relations live in arity 3")
    index = {t: i for i, t in enumerate(free_trees(n, ops))}
    out = []
    for rel in rels:
        for m in range(3, n + 1):
            inner_elems = []
            for a, b, c in _compositions3(m):
                for t1 in free_trees(a, ops):
                    for t2 in free_trees(b, ops):
                        for t3 in free_trees(c, ops):
                            subs = (t1, t2, t3)
                            elem = [(_graft_leaves(s, subs)[0], coeff)
                                    for s, coeff in rel.items()]
                            inner_elems.append(elem)
            k = n - m + 1
            for context in free_trees(k, ops):
                for leaf_i in range(k):
                    for elem in inner_elems:
                        row = {}
                        for t, coeff in elem:
                            j = index[_plug(context, leaf_i, t)]
                            row[j] = row.get(j, Fraction(0)) + coeff
                        row = {j: c for j, c in row.items() if c != 0}
                        if row:
                            out.append(row)
    return out


class SparseEliminator:
    """Incremental sparse Gaussian elimination over Q."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = dict(row)
        while row:
            p = min(row)
            piv = self.pivots.get(p)
            if piv is None:
                return row
            f = row[p]
            for j, c in piv.items():
                v = row.get(j, Fraction(0)) - f * c
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        return row

    def add(self, row: dict[int, Fraction]) -> bool:
        """Reduce and absorb; returns True if the rank grew."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        self.pivots[p] = {j: c * inv for j, c in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def ideal_rank(rels: Iterable[NsElement], n: int,
               ops: tuple[str, ...] = ("x", "y")) -> int:
    elim = SparseEliminator()
    for row in consequences(rels, n, ops):
        elim.add(row)
    return elim.rank


def bruteforce_dim(rels: Iterable[NsElement], n: int,
                   ops: tuple[str, ...] = ("x", "y"),
                   cap: int | None = None) -> int:
    """dim of the arity-n component of the quotient by the ideal of rels."""
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        raise ValueError(f"arity {n} exceeds the oracle cap {cap}")
    if n < 3:
        return free_dim(n, ops)
    return free_dim(n, ops) - ideal_rank(rels, n, ops)


def dimension_row(system_name: str, rels: list[NsElement], n: int,
                  ops: tuple[str, ...] = ("x", "y")) -> tuple:
    """CSV row (system, n, free_dim, ideal_rank, operad_dim)."""
    fd = free_dim(n, ops)
    r = ideal_rank(rels, n, ops) if n >= 3 else 0
    return (system_name, n, fd, r, fd - r)

"""Explicit bijections from normal forms to classical combinatorial objects.

* Zin normal forms of arity n  <->  planar binary trees with n internal
  vertices (bullet notation; arity 1 maps to the one-vertex tree).
* Bicom normal forms of arity n  <->  lattice words with n-1 E's and N's.
  Pure x-combs map to Dyck words and pure y-combs to reflected Dyck words
  via the comb encodings; mixed monomials peel factors off the root spine.
* Flex normal forms  <->  normal forms of the auxiliary L system over z, t.
"""

from __future__ import annotations

from typing import Union

from .treeterm import LEAF, Tree, arity, is_normal
from . import systems

# --- planar binary trees (bullet notation) ---------------------------------

BULLET = "*"
PBT = Union[str, tuple]  # BULLET | (PBT, PBT)


def internal_vertices(b: PBT) -> int:
    if b == BULLET:
        return 0
    return 1 + internal_vertices(b[0]) + internal_vertices(b[1])


def format_pbt(b: PBT, unicode_bullet: bool = True) -> str:
    dot = "•" if unicode_bullet else "*"
    if b == BULLET:
        return dot
    return f"({format_pbt(b[0], unicode_bullet)}{format_pbt(b[1], unicode_bullet)})"


def parse_pbt(text: str) -> PBT:
    b, rest = _parse_pbt(text.replace("•", "*"))
    if rest:
        raise ValueError(f"trailing input {rest!r}")
    return b


def _parse_pbt(s: str) -> tuple[PBT, str]:
    if not s:
        raise ValueError("empty tree")
    if s[0] == "*":
        return BULLET, s[1:]
    if s[0] != "(":
        raise ValueError(f"expected '(' or bullet at {s!r}")
    left, s = _parse_pbt(s[1:])
    right, s = _parse_pbt(s)
    if not s.startswith(")"):
        raise ValueError("expected ')'")
    return (left, right), s[1:]


_ZIN = systems.system("Zin")


def zin_to_pbt(t: Tree) -> PBT:
    """Normal Zin monomial of arity n -> planar binary tree, n internal vertices."""
    if t == LEAF:
        return (BULLET, BULLET)
    if not is_normal(t, _ZIN):
        raise ValueError("not a normal Zin monomial")
    op, u, v = t
    if op == "x" and v == LEAF:
        return (zin_to_pbt(u), BULLET)
    if op == "y" and v == LEAF:
        return (BULLET, zin_to_pbt(u))
    # the remaining normal shape is y(u, x(w, 1))
    _, w, _one = v
    return (zin_to_pbt(w), zin_to_pbt(u))


def pbt_to_zin(b: PBT) -> Tree:
    if b == BULLET:
        raise ValueError("a bare bullet has no internal vertex")
    if b == (BULLET, BULLET):
        return LEAF
    l, r = b
    if r == BULLET:
        return ("x", pbt_to_zin(l), LEAF)
    if l == BULLET:
        return ("y", pbt_to_zin(r), LEAF)
    return ("y", pbt_to_zin(r), ("x", pbt_to_zin(l), LEAF))


# --- Bicom <-> lattice words ------------------------------------------------


def _is_pure(t: Tree, op: str) -> bool:
    if t == LEAF:
        return True
    return t[0] == op and _is_pure(t[1], op) and _is_pure(t[2], op)


def _comb_word(t: Tree, op: str) -> str:
    """x-combs to Dyck words: E w(left) N w(right); y-combs mirrored."""
    if t == LEAF:
        return ""
    first, second = ("E", "N") if op == "x" else ("N", "E")
    return first + _comb_word(t[1], op) + second + _comb_word(t[2], op)


def _comb_unword(w: str, op: str) -> Tree:
    if not w:
        return LEAF
    first = "E" if op == "x" else "N"
    depth = 0
    for i, ch in enumerate(w):
        depth += 1 if ch == first else -1
        if depth == 0:
            return (op, _comb_unword(w[1:i], op), _comb_unword(w[i + 1:], op))
    raise ValueError(f"not a balanced comb word: {w!r}")


def bicom_to_word(t: Tree) -> str:
    if not is_normal(t, systems.system("Bicom", max_arity=max(arity(t), 3))):
        raise ValueError("not a normal Bicom monomial")
    return _bicom_word(t)


def _bicom_word(t: Tree) -> str:
    if t == LEAF:
        return ""
    if _is_pure(t, "x"):
        return _comb_word(t, "x")
    if _is_pure(t, "y"):
        return _comb_word(t, "y")
    op, u, a = t
    if op == "x":
        return _bicom_word(u) + "E" + _comb_word(a, "x") + "N"
    return _bicom_word(u) + "N" + _comb_word(a, "y") + "E"


def word_to_bicom(w: str) -> Tree:
    if w.count("E") != w.count("N") or set(w) - {"E", "N"}:
        raise ValueError(f"not a balanced EN word: {w!r}")
    return _unword(w)


def _unword(w: str) -> Tree:
    if not w:
        return LEAF
    heights = []
    h = 0
    for ch in w:
        h += 1 if ch == "E" else -1
        heights.append(h)
    if min(heights) >= 0:
        return _comb_unword(w, "x")
    if max(heights) <= 0:
        return _comb_unword(w, "y")
    # peel the last first-return factor off the diagonal
    start = max(i for i in range(len(w) - 1) if heights[i] == 0) + 1
    prefix, factor = w[:start], w[start:]
    if factor[0] == "E":
        return ("x", _unword(prefix), _comb_unword(factor[1:-1], "x"))
    return ("y", _unword(prefix), _comb_unword(factor[1:-1], "y"))


# --- Flex <-> L-operad ------------------------------------------------------

_FLEX = systems.system("Flex")
_LSYS = systems.system("L")


def flex_to_L(t: Tree) -> Tree:
    if not is_normal(t, _FLEX):
        raise ValueError("not a normal Flex monomial")
    return _phi(t)


def _phi(t: Tree) -> Tree:
    if t == LEAF:
        return LEAF
    op, u, v = t
    if op == "x":
        return ("z", _phi(u), _phi(v))
    return ("t", _phi(u), _phi_r(v))


def _phi_r(t: Tree) -> Tree:
    # inverse direction of Psi_R: r = 1 or r = x(u, q)
    if t == LEAF:
        return LEAF
    _, u, q = t
    return ("t", _phi(u), _phi_q(q))


def _phi_q(t: Tree) -> Tree:
    if t == LEAF:
        return LEAF
    _, u, r = t
    return ("t", _phi(u), _phi_r(r))


def L_to_flex(s: Tree) -> Tree:
    if not is_normal(s, _LSYS):
        raise ValueError("not a normal L monomial")
    return _psi(s)


def _psi(s: Tree) -> Tree:
    if s == LEAF:
        return LEAF
    op, u, v = s
    if op == "z":
        return ("x", _psi(u), _psi(v))
    return ("y", _psi(u), _psi_r(v))


def _psi_r(s: Tree) -> Tree:
    if s == LEAF:
        return LEAF
    _, u, v = s
    return ("x", _psi(u), _psi_q(v))


def _psi_q(s: Tree) -> Tree:
    if s == LEAF:
        return LEAF
    _, u, v = s
    return ("y", _psi(u), _psi_r(v))

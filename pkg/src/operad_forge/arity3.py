"""The free arity-3 component of a binary quadratic presentation.

A binary operation space is a list of named operations, each either "paired"
(the operation and its transpose are independent, giving a 2-dimensional
slice) or +/-symmetric (1-dimensional slice).  Arity-3 monomials are planar:
a left comb (x_a . x_b) . x_c or a right comb x_a . (x_b . x_c), with leaves
a permutation of (1,2,3) and an operation at each internal node.  The
symmetric group S3 acts by relabelling leaves.

Convention (normative): the tensor g (x) h of two basis operations denotes
the monomial g(h(x1,x2), x3), and permutations act by substituting
x_i -> x_sigma(i).  With e1 = x1.x2 and e2 = x2.x1 this gives
e1(x)e1 = (x1x2)x3, e2(x)e2 = x3(x2x1), (13)(e2(x)e2) = x1(x2x3).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, NamedTuple

from .exactlin import Subspace, span

PAIRED = "paired"
SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"

_SYM_SIGN = {SYMMETRIC: 1, ANTISYMMETRIC: -1}


@dataclass(frozen=True)
class OpSpace:
    ops: tuple[str, ...]
    sym: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.ops)) != len(self.ops):
            raise ValueError("operation names must be distinct")
        if len(self.sym) != len(self.ops):
            raise ValueError("one symmetry tag per operation")
        for s in self.sym:
            if s not in (PAIRED, SYMMETRIC, ANTISYMMETRIC):
                raise ValueError(f"unknown symmetry tag {s!r}")

    @classmethod
    def paired(cls, *names: str) -> "OpSpace":
        return cls(tuple(names), (PAIRED,) * len(names))

    @property
    def dim(self) -> int:
        return sum(2 if s == PAIRED else 1 for s in self.sym)

    def tag(self, op: str) -> str:
        return self.sym[self.ops.index(op)]


class Monomial3(NamedTuple):
    """shape 'L': (x_a inner x_b) outer x_c;  shape 'R': x_a outer (x_b inner x_c)."""

    shape: str
    leaves: tuple[int, int, int]
    inner: str
    outer: str

    @property
    def outside_leaf(self) -> int:
        """The argument not inside the inner product."""
        return self.leaves[2] if self.shape == "L" else self.leaves[0]


def canonicalize(m: Monomial3, v: OpSpace) -> tuple[Monomial3, int]:
    """Canonical representative and sign under the +/-symmetric identifications.

    At a node carrying a +/-symmetric operation the two planar argument orders
    are identified (with a sign when antisymmetric); the canonical order puts
    the argument with the smaller leftmost leaf first.
    """
    shape, (a, b, c), inner, outer = m
    sign = 1
    itag, otag = v.tag(inner), v.tag(outer)
    if itag != PAIRED:
        if shape == "L" and a > b:
            a, b = b, a
            sign *= _SYM_SIGN[itag]
        elif shape == "R" and b > c:
            b, c = c, b
            sign *= _SYM_SIGN[itag]
    if otag != PAIRED:
        if shape == "L" and a > c:
            # (T)x_c with leftmost(T)=a > c: swap outer args -> x_c(T)
            shape, (a, b, c) = "R", (c, a, b)
            sign *= _SYM_SIGN[otag]
        elif shape == "R" and a > b:
            shape, (a, b, c) = "L", (b, c, a)
            sign *= _SYM_SIGN[otag]
    return Monomial3(shape, (a, b, c), inner, outer), sign


class Arity3Element:
    """Sparse rational combination of canonical arity-3 monomials."""

    __slots__ = ("opspace", "terms")

    def __init__(self, opspace: OpSpace, terms: Iterable[tuple[Monomial3, Fraction]] = ()):
        self.opspace = opspace
        acc: dict[Monomial3, Fraction] = {}
        for m, coeff in terms:
            if m.inner not in opspace.ops or m.outer not in opspace.ops:
                raise ValueError(f"monomial uses unknown operation: {m}")
            cm, sign = canonicalize(m, opspace)
            coeff = Fraction(coeff) * sign
            acc[cm] = acc.get(cm, Fraction(0)) + coeff
        self.terms = {m: c for m, c in acc.items() if c != 0}

    def __add__(self, other: "Arity3Element") -> "Arity3Element":
        return Arity3Element(self.opspace,
                             list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "Arity3Element":
        return Arity3Element(self.opspace, [(m, -c) for m, c in self.terms.items()])

    def __sub__(self, other: "Arity3Element") -> "Arity3Element":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Arity3Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Arity3Element({format_element(self)!r})"

    def is_zero(self) -> bool:
        return not self.terms


def basis3(v: OpSpace) -> list[Monomial3]:
    """Deterministic basis of the free arity-3 module: 3*(dim V)^2 monomials."""
    out = []
    seen = set()
    for shape in ("L", "R"):
        for leaves in sorted(permutations((1, 2, 3))):
            for oi, outer in enumerate(v.ops):
                for ii, inner in enumerate(v.ops):
                    m = Monomial3(shape, leaves, inner, outer)
                    cm, _ = canonicalize(m, v)
                    if cm not in seen:
                        seen.add(cm)
                        out.append(cm)
    assert len(out) == 3 * v.dim ** 2
    return out


def to_vector(e: Arity3Element, basis: list[Monomial3]) -> tuple[Fraction, ...]:
    index = {m: i for i, m in enumerate(basis)}
    row = [Fraction(0)] * len(basis)
    for m, c in e.terms.items():
        row[index[m]] = c
    return tuple(row)


def from_vector(row, basis: list[Monomial3], opspace: OpSpace) -> Arity3Element:
    return Arity3Element(opspace, [(m, Fraction(c)) for m, c in zip(basis, row) if c != 0])


def act(sigma: tuple[int, int, int], e: Arity3Element) -> Arity3Element:
    """Substitute x_i -> x_sigma(i); sigma[i-1] is the image of i."""
    terms = []
    for m, c in e.terms.items():
        leaves = tuple(sigma[l - 1] for l in m.leaves)
        terms.append((Monomial3(m.shape, leaves, m.inner, m.outer), c))
    return Arity3Element(e.opspace, terms)


S3 = [tuple(p) for p in permutations((1, 2, 3))]


def s3_closure(gens: Iterable[Arity3Element], v: OpSpace) -> Subspace:
    basis = basis3(v)
    vecs = [to_vector(act(sigma, g), basis) for g in gens for sigma in S3]
    return span(vecs, len(basis))


@dataclass(frozen=True)
class OperadPresentation:
    name: str
    opspace: OpSpace
    relations: tuple[Arity3Element, ...] = field(default_factory=tuple)

    def relation_space(self) -> Subspace:
        return s3_closure(self.relations, self.opspace)


def quotient_dim3(p: OperadPresentation) -> int:
    return 3 * p.opspace.dim ** 2 - p.relation_space().dim


# --- text format -----------------------------------------------------------
#
# Elements print as signed sums of terms  <coeff>*<monomial>, where a
# monomial is  (x1*x2)*x3  style for a single operation named "*", and
# (x1<x2)>x3  style for the two-operation spaces over "<" and ">".

def format_monomial(m: Monomial3) -> str:
    a, b, c = m.leaves
    if m.shape == "L":
        return f"(x{a}{m.inner}x{b}){m.outer}x{c}"
    return f"x{a}{m.outer}(x{b}{m.inner}x{c})"


def format_element(e: Arity3Element) -> str:
    if not e.terms:
        return "0"
    order = {m: i for i, m in enumerate(basis3(e.opspace))}
    parts = []
    for m in sorted(e.terms, key=order.__getitem__):
        c = e.terms[m]
        sign = "+" if c > 0 else "-"
        parts.append(f"{sign}{abs(c)}*{format_monomial(m)}")
    return "".join(parts)


_TERM = re.compile(r"([+-])\s*(\d+(?:/\d+)?)\*")


def parse_element(text: str, opspace: OpSpace) -> Arity3Element:
    text = text.strip()
    if text == "0":
        return Arity3Element(opspace)
    if text[0] not in "+-":
        text = "+" + text
    terms = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise ValueError(f"bad term at {text[pos:]!r}")
        coeff = Fraction(m.group(2))
        if m.group(1) == "-":
            coeff = -coeff
        end = len(text)
        nxt = _TERM.search(text, m.end())
        if nxt:
            end = nxt.start()
        terms.append((parse_monomial(text[m.end():end], opspace), coeff))
        pos = end
    return Arity3Element(opspace, terms)


def parse_monomial(text: str, opspace: OpSpace) -> Monomial3:
    text = text.strip()
    ops = "|".join(re.escape(o) for o in opspace.ops)
    left = re.fullmatch(rf"\(x([123])({ops})x([123])\)({ops})x([123])", text)
    if left:
        a, i, b, o, c = left.groups()
        return Monomial3("L", (int(a), int(b), int(c)), i, o)
    right = re.fullmatch(rf"x([123])({ops})\(x([123])({ops})x([123])\)", text)
    if right:
        a, o, b, i, c = right.groups()
        return Monomial3("R", (int(a), int(b), int(c)), i, o)
    raise ValueError(f"bad monomial {text!r}")


# --- catalog ---------------------------------------------------------------

SINGLE = OpSpace.paired("*")
DOUBLE = OpSpace.paired("<", ">")


def _el(opspace: OpSpace, *terms: tuple[int, str]) -> Arity3Element:
    return Arity3Element(
        opspace, [(parse_monomial(t, opspace), Fraction(c)) for c, t in terms])


def _single(name: str, *rels: Arity3Element) -> OperadPresentation:
    return OperadPresentation(name, SINGLE, tuple(rels))


def _L(a, b, c):
    return f"(x{a}*x{b})*x{c}"


def _R(a, b, c):
    return f"x{a}*(x{b}*x{c})"


def _catalog() -> dict[str, OperadPresentation]:
    E = lambda *terms: _el(SINGLE, *terms)
    cat = {}
    cat["Free"] = _single("Free")
    cat["As"] = _single("As", E((1, _L(1, 2, 3)), (-1, _R(1, 2, 3))))
    cat["Zin"] = _single("Zin", E(
        (1, _R(1, 2, 3)), (-1, _L(1, 2, 3)), (-1, _L(2, 1, 3))))
    cat["Bicom"] = _single(
        "Bicom",
        E((1, _L(2, 1, 3)), (-1, _L(2, 3, 1))),
        E((1, _R(1, 3, 2)), (-1, _R(3, 1, 2))))
    cat["Nov"] = _single(
        "Nov",
        E((1, _L(1, 2, 3)), (-1, _R(1, 3, 2)), (-1, _L(3, 2, 1)), (1, _R(3, 1, 2))),
        E((1, _L(2, 1, 3)), (-1, _L(2, 3, 1))))
    cat["PreLie"] = _single("PreLie", E(
        (1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (-1, _L(2, 1, 3)), (1, _R(2, 1, 3))))
    cat["Leib"] = _single("Leib", E(
        (1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (1, _R(2, 1, 3))))
    cat["Flex"] = _single("Flex", E(
        (1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (1, _L(3, 2, 1)), (-1, _R(3, 2, 1))))
    cat["AntiFlex"] = _single("AntiFlex", E(
        (1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (-1, _L(3, 2, 1)), (1, _R(3, 2, 1))))
    # Alt and Assosym relations are the standard linearized identities; the
    # literature source is validated against dim Alt(3) = 7 in the tests.
    cat["Alt"] = _single(
        "Alt",
        E((1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (1, _L(2, 1, 3)), (-1, _R(2, 1, 3))),
        E((1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (1, _L(1, 3, 2)), (-1, _R(1, 3, 2))))
    cat["Assosym"] = _single(
        "Assosym",
        E((1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (-1, _L(2, 1, 3)), (1, _R(2, 1, 3))),
        E((1, _L(1, 2, 3)), (-1, _R(1, 2, 3)), (-1, _L(1, 3, 2)), (1, _R(1, 3, 2))))
    return cat


_CATALOG = _catalog()

CATALOG_NAMES = ("As", "Nov", "Zin", "Bicom", "Alt", "Flex", "AntiFlex",
                 "Leib", "PreLie", "Assosym",
                 "NcNov", "NcZin", "NcBicom", "NcFlex", "NcAntiFlex")


def catalog(name: str) -> OperadPresentation:
    if name in _CATALOG:
        return _CATALOG[name]
    if name.startswith("Nc"):
        from . import systems  # two-operation presentations live there
        return systems.nc_presentation(name)
    raise KeyError(f"unknown operad {name!r}")

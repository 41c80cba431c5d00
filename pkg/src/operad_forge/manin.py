"""White product with the associative operad and the nonsymmetric criterion.

white_product_as maps the 48-dimensional free arity-3 module over the two
split operations "<" and ">" into As(3) (x) P(3) and takes the kernel: the
split operations come from  a < b = ab (x) (a.b)  and  a > b = ab (x) (b.a),
so the As coordinate of a monomial is its leaf word in planar order and the
Var coordinate is obtained by recursively swapping the arguments of every
">" node.

The criterion compares R with the S3-closure F of the part of R lying in
the "two-outside" cosets: monomials whose lone argument is x1 or x3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .arity3 import (DOUBLE, SINGLE, Arity3Element, Monomial3, OperadPresentation,
                     OpSpace, basis3, format_element, from_vector, s3_closure,
                     to_vector)
from .exactlin import Mat, Subspace, nullspace, span

AS3_WORDS = sorted(permutations((1, 2, 3)))  # basis of As(3): x_a x_b x_c


@dataclass(frozen=True)
class CriterionReport:
    operad_name: str
    dim_R: int
    dim_F: int
    dim_P3: int
    admits: bool
    F_generators: tuple[Arity3Element, ...]

    def to_json(self) -> str:
        return json.dumps({
            "name": self.operad_name,
            "dim_R": self.dim_R,
            "dim_F": self.dim_F,
            "dim_P3": self.dim_P3,
            "admits": self.admits,
            "F_generators": [format_element(g) for g in self.F_generators],
        }, indent=2)


def _mono_tree(m: Monomial3):
    """Monomial as ((op, leaf, leaf) nested) with integer leaf labels."""
    a, b, c = m.leaves
    if m.shape == "L":
        return (m.outer, (m.inner, a, b), c)
    return (m.outer, a, (m.inner, b, c))


def _leaf_word(t) -> tuple[int, ...]:
    if isinstance(t, int):
        return (t,)
    return _leaf_word(t[1]) + _leaf_word(t[2])


def _to_single_op(t, swap_op: str):
    """Rewrite a two-op monomial tree over <,> to a single-op tree; the
    arguments of every swap_op node are exchanged."""
    if isinstance(t, int):
        return t
    op, l, r = t
    l, r = _to_single_op(l, swap_op), _to_single_op(r, swap_op)
    if op == swap_op:
        l, r = r, l
    return ("*", l, r)


def _tree_to_monomial(t, opspace: OpSpace) -> Monomial3:
    op, l, r = t
    if not isinstance(l, int):
        return Monomial3("L", (l[1], l[2], r), l[0], op)
    return Monomial3("R", (l, r[1], r[2]), r[0], op)


def white_product_as(p: OperadPresentation) -> OperadPresentation:
    """The presentation of As o P over the split pair of operations <, >."""
    if p.opspace.ops != SINGLE.ops:
        raise ValueError("white_product_as expects a single paired operation")
    v_basis = basis3(SINGLE)
    R = p.relation_space()
    q = len(v_basis) - R.dim  # dim P(3)

    w_basis = basis3(DOUBLE)
    word_index = {w: i for i, w in enumerate(AS3_WORDS)}
    rows = []
    for m in w_basis:
        t = _mono_tree(m)
        word = _leaf_word(t)
        var_mono = _tree_to_monomial(_to_single_op(t, ">"), SINGLE)
        # image of the Var monomial in P(3), in the 12 ambient coordinates
        reduced = R.reduce(to_vector(Arity3Element(SINGLE, [(var_mono, Fraction(1))]),
                                     v_basis))
        row = [Fraction(0)] * (6 * len(v_basis))
        base = word_index[word] * len(v_basis)
        for j, x in enumerate(reduced):
            row[base + j] = x
        rows.append(row)
    # kernel of v -> sum_m v_m * image(m): null space of the transpose
    mt = Mat.from_rows(list(zip(*rows)), cols=len(w_basis))
    ker = nullspace(mt)
    rels = tuple(from_vector(r, w_basis, DOUBLE) for r in ker.basis)
    return OperadPresentation(f"As.{p.name}", DOUBLE, rels)


def symmetrize_quotient(q: OperadPresentation) -> OperadPresentation:
    """Identify a > b with b < a, i.e. map a>b to b.a and a<b to a.b."""
    if q.opspace.ops != DOUBLE.ops:
        raise ValueError("symmetrize_quotient expects the two split operations")
    rels = []
    for rel in q.relations:
        terms = []
        for m, c in rel.terms.items():
            single = _tree_to_monomial(_to_single_op(_mono_tree(m), ">"), SINGLE)
            terms.append((single, c))
        rels.append(Arity3Element(SINGLE, terms))
    rels = [r for r in rels if not r.is_zero()]
    return OperadPresentation(f"{q.name}/sym", SINGLE, tuple(rels))


def two_outside_subspace(v: OpSpace) -> Subspace:
    """Span of the basis monomials whose outside argument is x1 or x3.

    These are the cosets (V (x) V) + (13)(V (x) V): with x3 or x1 as the lone
    argument on either side of the inner product.  Dimension 2 * (dim V)^2.
    """
    basis = basis3(v)
    vecs = []
    for i, m in enumerate(basis):
        if m.outside_leaf in (1, 3):
            row = [Fraction(0)] * len(basis)
            row[i] = Fraction(1)
            vecs.append(row)
    return span(vecs, len(basis))


def compute_F(p: OperadPresentation) -> Subspace:
    from .exactlin import intersect
    basis = basis3(p.opspace)
    R = p.relation_space()
    inter = intersect(R, two_outside_subspace(p.opspace))
    gens = [from_vector(r, basis, p.opspace) for r in inter.basis]
    return s3_closure(gens, p.opspace)


def admits_nonsymmetric(p: OperadPresentation) -> CriterionReport:
    from .exactlin import intersect
    basis = basis3(p.opspace)
    R = p.relation_space()
    inter = intersect(R, two_outside_subspace(p.opspace))
    gens = tuple(from_vector(r, basis, p.opspace) for r in inter.basis)
    F = s3_closure(gens, p.opspace)
    return CriterionReport(
        operad_name=p.name,
        dim_R=R.dim,
        dim_F=F.dim,
        dim_P3=len(basis) - R.dim,
        admits=F.dim == R.dim,
        F_generators=gens,
    )

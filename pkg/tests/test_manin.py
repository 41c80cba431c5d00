"""White product with As, symmetrized quotient, and the admissibility test."""

import json

import pytest

from operad_forge.arity3 import (DOUBLE, catalog, parse_element, s3_closure,
                                 quotient_dim3)
from operad_forge.exactlin import intersect, span
from operad_forge.manin import (admits_nonsymmetric, compute_F,
                                symmetrize_quotient, two_outside_subspace,
                                white_product_as)


def closure(texts):
    return s3_closure([parse_element(t, DOUBLE) for t in texts], DOUBLE)


def test_white_product_zin_matches_transcribed_relations():
    # the three dendriform-style identities of the noncommutative Zinbiel operad
    want = closure([
        "+1*(x1>x2)>x3-1*x1>(x2>x3)-1*x1>(x2<x3)",
        "+1*(x1<x2)>x3-1*x1<(x2>x3)",
        "+1*x1<(x2<x3)-1*(x1>x2)<x3-1*(x1<x2)<x3",
    ])
    got = white_product_as(catalog("Zin")).relation_space()
    assert got.dim == 18
    assert got == want


def test_white_product_nov_matches_transcribed_relations():
    want = closure([
        "+1*x1>(x2<x3)-1*(x1>x2)<x3",
        "+1*(x1<x2)>x3-1*x1>(x2>x3)-1*x1<(x2>x3)+1*(x1<x2)<x3",
    ])
    got = white_product_as(catalog("Nov")).relation_space()
    assert got.dim == 12
    assert got == want


def test_white_product_bicom_matches_transcribed_relations():
    want = closure([
        "+1*x1>(x2<x3)-1*(x1>x2)<x3",
        "+1*x1<(x2>x3)-1*(x1<x2)>x3",
    ])
    got = white_product_as(catalog("Bicom")).relation_space()
    assert got.dim == 12
    assert got == want


@pytest.mark.parametrize("name", ["As", "Zin", "Bicom", "Nov"])
def test_symmetrized_quotient_recovers_operad(name):
    sym = symmetrize_quotient(white_product_as(catalog(name)))
    assert sym.relation_space() == catalog(name).relation_space()


def test_symmetrized_quotient_of_alt_is_flex():
    sym = symmetrize_quotient(white_product_as(catalog("Alt")))
    assert sym.relation_space() == catalog("Flex").relation_space()
    assert quotient_dim3(sym) == 9


def test_alt_arity3_dimension():
    assert quotient_dim3(catalog("Alt")) == 7


def test_two_outside_subspace_contains_both_comb_shapes():
    from operad_forge.arity3 import SINGLE, basis3, to_vector
    u = two_outside_subspace(SINGLE)
    b = basis3(SINGLE)
    left = parse_element("+1*(x1*x2)*x3", SINGLE)
    right = parse_element("+1*x1*(x2*x3)", SINGLE)
    mid = parse_element("+1*(x1*x3)*x2", SINGLE)
    assert u.contains(to_vector(left, b))
    assert u.contains(to_vector(right, b))
    assert not u.contains(to_vector(mid, b))
    assert u.dim == 8


def test_criterion_classification():
    admit = ("Nov", "Zin", "Bicom", "Flex", "AntiFlex")
    reject = ("Alt", "Assosym", "Leib", "PreLie")
    for name in admit:
        assert admits_nonsymmetric(catalog(name)).admits, name
    for name in reject:
        assert not admits_nonsymmetric(catalog(name)).admits, name


def test_criterion_report_fields():
    r = admits_nonsymmetric(catalog("Leib"))
    assert (r.dim_R, r.dim_F) == (6, 3)
    payload = json.loads(r.to_json())
    assert payload["name"] == "Leib"
    assert payload["admits"] is False
    assert len(payload["F_generators"]) == 2


def test_leibniz_internals():
    from operad_forge.arity3 import SINGLE, basis3, to_vector
    leib = catalog("Leib")
    b = basis3(SINGLE)
    assert leib.relation_space().dim == 6
    f = compute_F(leib)
    assert f.dim == 3
    sums = ["+1*(x1*x2)*x3+1*(x2*x1)*x3",
            "+1*(x1*x3)*x2+1*(x3*x1)*x2",
            "+1*(x2*x3)*x1+1*(x3*x2)*x1"]
    vecs = [to_vector(parse_element(s, SINGLE), b) for s in sums]
    assert f == span(vecs, 12)
    inter = intersect(leib.relation_space(), two_outside_subspace(SINGLE))
    assert inter.dim == 2
    assert inter == span([vecs[0], vecs[2]], 12)

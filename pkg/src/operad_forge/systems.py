"""The concrete rewriting systems and their normal-form combinatorics.

Systems: "Zin", "Bicom" (an infinite rule family, instantiated up to an
arity cap), "Flex", "AntiFlex" and the auxiliary "L" system over operations
z, t.  For each system the module provides the normal-form grammar, closed
dimension formulas and the arity-3 presentation over the two operations
"<" and ">" (with the tree labels x = "<" and y = ">").

The second AntiFlex rule is not written down anywhere; it is derived
mechanically from the self-overlap of the first rule (the same computation
that produces the nine-term second Flex rule) and certified downstream by
the brute-force oracle.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .arity3 import DOUBLE, Arity3Element, Monomial3, OperadPresentation
from .treeterm import (LEAF, NsElement, RewriteRule, RewriteSystem, Tree,
                       apply_rule_at, arity, normalize, overlaps, parse_tree,
                       rule, tree_key)

SYSTEM_NAMES = ("Zin", "Bicom", "Flex", "AntiFlex", "L")


def _zin_rules() -> tuple[RewriteRule, ...]:
    return (
        rule("zin1", "x(1,y(1,1))", "y(x(1,1),1)"),
        rule("zin2", "x(1,x(1,1))", [(1, "x(y(1,1),1)"), (1, "x(x(1,1),1)")]),
        rule("zin3", "y(1,y(1,1))", [(-1, "y(1,x(1,1))"), (1, "y(y(1,1),1)")]),
    )


def _bicom_rule(n: int, outer: str) -> RewriteRule:
    """Rule family member of arity n+3; outer = "x" gives f_n, "y" gives g_n."""
    inner = "y" if outer == "x" else "x"
    lhs_core: Tree = (inner, LEAF, LEAF)
    rhs_core: Tree = (inner, (outer, LEAF, LEAF), LEAF)
    for _ in range(n):
        lhs_core = (outer, lhs_core, LEAF)
        rhs_core = (outer, rhs_core, LEAF)
    name = f"{'f' if outer == 'x' else 'g'}{n}"
    return RewriteRule(name, (outer, LEAF, lhs_core), ((Fraction(1), rhs_core),))


def _flex_rule1(sign: int) -> RewriteRule:
    # sign +1: flexible; sign -1: anti-flexible (defining identity negated)
    return RewriteRule(
        "flex1" if sign > 0 else "aflex1",
        parse_tree("y(1,y(1,1))"),
        ((Fraction(sign), parse_tree("x(1,x(1,1))")),
         (Fraction(1), parse_tree("y(y(1,1),1)")),
         (Fraction(-sign), parse_tree("x(x(1,1),1)"))))


def _derive_flex_rule2(rule1: RewriteRule, name: str) -> RewriteRule:
    """Orient the S-polynomial of rule1's self-overlap into a second rule.

    The self-overlap of y(*,y(*,*)) is y(*,y(*,y(*,*))); its two one-step
    reducts are normalized with rule1 alone and the difference is solved for
    the monomial y(*,x(*,x(*,*))), the only non-normal term remaining.
    """
    one_rule = RewriteSystem("partial", (rule1,))
    ovs = overlaps(one_rule, 4)
    assert len(ovs) == 1
    ov = ovs[0]
    left = normalize(apply_rule_at(ov.tree, rule1, ov.addrs[0]), one_rule)
    right = normalize(apply_rule_at(ov.tree, rule1, ov.addrs[1]), one_rule)
    diff = NsElement(left.items())
    for t, c in right.items():
        diff.add(t, -c)
    lhs = parse_tree("y(1,x(1,x(1,1)))")
    assert lhs in diff, "expected leading monomial missing from S-polynomial"
    lead = diff.pop(lhs)
    rhs = tuple((-c / lead, t) for t, c in sorted(diff.items(), key=lambda tc: tree_key(tc[0])))
    return RewriteRule(name, lhs, rhs)


@lru_cache(maxsize=None)
def system(name: str, max_arity: int | None = None) -> RewriteSystem:
    if name == "Zin":
        return RewriteSystem("Zin", _zin_rules())
    if name == "Bicom":
        cap = 10 if max_arity is None else max_arity
        if cap < 3:
            raise ValueError("Bicom needs an arity cap of at least 3")
        rules = []
        for n in range(cap - 2):
            rules.append(_bicom_rule(n, "x"))
            rules.append(_bicom_rule(n, "y"))
        return RewriteSystem("Bicom", tuple(rules), arity_cap=cap)
    if name in ("Flex", "AntiFlex"):
        sign = 1 if name == "Flex" else -1
        r1 = _flex_rule1(sign)
        r2 = _derive_flex_rule2(r1, "flex2" if sign > 0 else "aflex2")
        return RewriteSystem(name, (r1, r2))
    if name == "L":
        return RewriteSystem("L", (rule("L", "t(1,z(1,1))", "z(t(1,1),1)"),))
    raise KeyError(f"unknown system {name!r}")


# --- normal-form grammars --------------------------------------------------

# Each grammar class is a list of productions; a production is either the
# leaf or (op, class_left, class_right).  "leaf" admits the arity-1 tree.

_GRAMMARS: dict[str, dict[str, list]] = {
    "Zin": {
        "N": ["leaf", ("x", "N", "one"), ("y", "N", "one"), ("y", "N", "X1")],
        "X1": [("x", "N", "one")],          # x(N, 1)
        "one": ["unit"],                    # exactly the leaf, as a subtree
    },
    "Bicom": {
        "N": ["leaf", ("x", "N", "X"), ("y", "N", "Y")],
        "X": ["leaf", ("x", "X", "X")],
        "Y": ["leaf", ("y", "Y", "Y")],
    },
    "Flex": {
        "N": ["leaf", ("x", "N", "N"), ("y", "N", "R")],
        "R": ["leaf", ("x", "N", "Q")],
        "Q": ["leaf", ("y", "N", "R")],
    },
    "L": {
        "S": ["leaf", ("z", "S", "S"), ("t", "S", "U")],
        "U": ["leaf", ("t", "S", "U")],
    },
}
_GRAMMARS["AntiFlex"] = _GRAMMARS["Flex"]

_ROOT = {"Zin": "N", "Bicom": "N", "Flex": "N", "AntiFlex": "N", "L": "S"}


@lru_cache(maxsize=None)
def _generate(name: str, cls: str, n: int) -> tuple[Tree, ...]:
    grammar = _GRAMMARS[name]
    out: list[Tree] = []
    for prod in grammar[cls]:
        if prod in ("leaf", "unit"):
            if n == 1:
                out.append(LEAF)
            continue
        op, lc, rc = prod
        for k in range(1, n):
            for left in _generate(name, lc, k):
                for right in _generate(name, rc, n - k):
                    out.append((op, left, right))
    return tuple(out)


def normal_forms(name: str, n: int) -> list[Tree]:
    """All arity-n trees generated by the system's normal-form grammar."""
    if name not in _ROOT:
        raise KeyError(f"unknown system {name!r}")
    if n < 1:
        raise ValueError("arity must be at least 1")
    return list(_generate(name, _ROOT[name], n))


def dim_formula(name: str, n: int) -> int:
    if n < 1:
        raise ValueError("arity must be at least 1")
    if name == "Zin":
        return math.comb(2 * n, n) // (n + 1)
    if name == "Bicom":
        return math.comb(2 * n - 2, n - 1)
    if name in ("Flex", "AntiFlex", "L"):
        return math.comb(3 * n - 2, n - 1) // n
    raise KeyError(f"unknown system {name!r}")


def ternary_pair_count(n: int) -> int:
    """sum over i+j = n-1 of T_i * T_j, with T_m the ternary tree numbers."""
    T = lambda m: math.comb(3 * m, m) // (2 * m + 1)
    return sum(T(i) * T(n - 1 - i) for i in range(n))


# --- arity-3 presentations over {<, >} ------------------------------------

_TREE_OP = {"x": "<", "y": ">"}


def tree_to_monomial(t: Tree) -> Monomial3:
    """An arity-3 tree over x,y as a canonical monomial with leaves 1,2,3."""
    if t == LEAF or arity(t) != 3:
        raise ValueError("expected an arity-3 tree")
    op, l, r = t
    if l != LEAF:
        return Monomial3("L", (1, 2, 3), _TREE_OP[l[0]], _TREE_OP[op])
    return Monomial3("R", (1, 2, 3), _TREE_OP[r[0]], _TREE_OP[op])


def _ns_to_arity3(e: NsElement) -> Arity3Element:
    return Arity3Element(DOUBLE, [(tree_to_monomial(t), c) for t, c in e.items()])


def _el(terms: list[tuple[int, str]]) -> NsElement:
    return NsElement((parse_tree(t), Fraction(c)) for c, t in terms)


def nc_relations(name: str) -> list[NsElement]:
    """Defining arity-3 relations as planar tree elements (x = <, y = >)."""
    if name == "NcNov":
        return [
            _el([(1, "y(1,x(1,1))"), (-1, "x(y(1,1),1)")]),
            _el([(1, "y(x(1,1),1)"), (-1, "y(1,y(1,1))"),
                 (-1, "x(1,y(1,1))"), (1, "x(x(1,1),1)")]),
        ]
    sysname = {"NcZin": "Zin", "NcBicom": "Bicom",
               "NcFlex": "Flex", "NcAntiFlex": "AntiFlex"}.get(name)
    if sysname is None:
        raise KeyError(f"unknown nonsymmetric presentation {name!r}")
    return [r.as_element() for r in system(sysname).rules if r.arity == 3]


def nc_presentation(name: str) -> OperadPresentation:
    rels = tuple(_ns_to_arity3(e) for e in nc_relations(name))
    return OperadPresentation(name, DOUBLE, rels)

"""Planar tree monomials, pattern matching and oriented rewriting.

A planar tree is either the leaf (the integer 1) or a tuple (op, left, right)
with op a one-letter label, usually "x" and "y".  Leaves are anonymous: the
argument order is the left-to-right leaf order.  Rule left-hand sides are
trees whose leaves act as wildcards; rules are linear and never permute
arguments, so matching binds wildcards positionally.

Text grammar (bit-exact for golden files):
    tree := "1" | op "(" tree "," tree ")"
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

Tree = object  # 1 | (op, Tree, Tree)
LEAF: Tree = 1
Addr = tuple[int, ...]


class StepCapExceeded(RuntimeError):
    """Raised when normalization does not reach a fixed point within the cap."""


def node(op: str, left: Tree, right: Tree) -> Tree:
    return (op, left, right)


def is_leaf(t: Tree) -> bool:
    return t == LEAF


def arity(t: Tree) -> int:
    if t == LEAF:
        return 1
    return arity(t[1]) + arity(t[2])


def tree_key(t: Tree):
    """Total order key: leaves first, then by op and subtrees."""
    if t == LEAF:
        return (0,)
    return (1, t[0], tree_key(t[1]), tree_key(t[2]))


def format_tree(t: Tree) -> str:
    if t == LEAF:
        return "1"
    return f"{t[0]}({format_tree(t[1])},{format_tree(t[2])})"


def parse_tree(text: str) -> Tree:
    t, rest = _parse(text.replace(" ", ""))
    if rest:
        raise ValueError(f"trailing input {rest!r}")
    return t


def _parse(s: str) -> tuple[Tree, str]:
    if not s:
        raise ValueError("empty tree")
    if s[0] == "1":
        return LEAF, s[1:]
    op = s[0]
    if len(s) < 2 or s[1] != "(":
        raise ValueError(f"expected '(' after operation in {s!r}")
    left, s = _parse(s[2:])
    if not s.startswith(","):
        raise ValueError("expected ','")
    right, s = _parse(s[1:])
    if not s.startswith(")"):
        raise ValueError("expected ')'")
    return (op, left, right), s[1:]


def positions(t: Tree) -> list[Addr]:
    """Preorder addresses of internal nodes; 0 = left child, 1 = right."""
    out: list[Addr] = []

    def walk(u: Tree, addr: Addr):
        if u == LEAF:
            return
        out.append(addr)
        walk(u[1], addr + (0,))
        walk(u[2], addr + (1,))

    walk(t, ())
    return out


def subtree(t: Tree, addr: Addr) -> Tree:
    for step in addr:
        if t == LEAF:
            raise ValueError(f"invalid address {addr}")
        t = t[1 + step]
    return t


def replace(t: Tree, addr: Addr, new: Tree) -> Tree:
    if not addr:
        return new
    if t == LEAF:
        raise ValueError(f"invalid address {addr}")
    op, l, r = t
    if addr[0] == 0:
        return (op, replace(l, addr[1:], new), r)
    return (op, l, replace(r, addr[1:], new))


def _graft_index(t: Tree, subs: list[Tree], i: int) -> tuple[Tree, int]:
    if t == LEAF:
        return subs[i], i + 1
    l, i = _graft_index(t[1], subs, i)
    r, i = _graft_index(t[2], subs, i)
    return (t[0], l, r), i


def graft(pattern: Tree, subs: list[Tree]) -> Tree:
    """Substitute subs into the leaves of pattern, left to right."""
    out, used = _graft_index(pattern, subs, 0)
    if used != len(subs):
        raise ValueError("wrong number of subtrees")
    return out


class NsElement(dict):
    """Rational combination of planar trees: dict Tree -> Fraction, no zeros."""

    def __init__(self, terms: Iterable[tuple[Tree, Fraction]] = ()):
        super().__init__()
        for t, c in terms:
            self.add(t, c)

    def add(self, t: Tree, c) -> None:
        c = self.get(t, Fraction(0)) + Fraction(c)
        if c == 0:
            self.pop(t, None)
        else:
            self[t] = c

    def scaled(self, f) -> "NsElement":
        return NsElement((t, c * Fraction(f)) for t, c in self.items())

    def __repr__(self):
        return f"NsElement({format_element(self)!r})"


def format_element(e: NsElement) -> str:
    if not e:
        return "0"
    parts = []
    for t in sorted(e, key=tree_key):
        c = e[t]
        sign = "+" if c > 0 else "-"
        parts.append(f"{sign}{abs(c)}*{format_tree(t)}")
    return "".join(parts)


@dataclass(frozen=True)
class RewriteRule:
    name: str
    lhs: Tree
    rhs: tuple[tuple[Fraction, Tree], ...]

    def __post_init__(self):
        n = arity(self.lhs)
        if self.lhs == LEAF:
            raise ValueError("left-hand side must be an internal tree")
        for _, p in self.rhs:
            if arity(p) != n:
                raise ValueError(f"rule {self.name}: rhs arity mismatch")

    @property
    def arity(self) -> int:
        return arity(self.lhs)

    def as_element(self) -> NsElement:
        """lhs - rhs with all wildcards instantiated by leaves."""
        e = NsElement([(self.lhs, Fraction(1))])
        for c, p in self.rhs:
            e.add(p, -c)
        return e


def rule(name: str, lhs: str, rhs: list[tuple[int, str]] | str) -> RewriteRule:
    if isinstance(rhs, str):
        rhs = [(1, rhs)]
    return RewriteRule(name, parse_tree(lhs),
                       tuple((Fraction(c), parse_tree(p)) for c, p in rhs))


@dataclass(frozen=True)
class RewriteSystem:
    name: str
    rules: tuple[RewriteRule, ...]
    arity_cap: Optional[int] = None  # set when an infinite family was truncated

    def ops(self) -> tuple[str, ...]:
        seen: list[str] = []

        def walk(t):
            if t != LEAF:
                if t[0] not in seen:
                    seen.append(t[0])
                walk(t[1])
                walk(t[2])

        for r in self.rules:
            walk(r.lhs)
            for _, p in r.rhs:
                walk(p)
        return tuple(sorted(seen))


def match_at(t: Tree, r: RewriteRule, addr: Addr) -> Optional[list[Tree]]:
    """Bindings of r.lhs wildcards against the subtree at addr, or None."""
    return _match(subtree(t, addr), r.lhs)


def _match(t: Tree, pattern: Tree) -> Optional[list[Tree]]:
    if pattern == LEAF:
        return [t]
    if t == LEAF or t[0] != pattern[0]:
        return None
    left = _match(t[1], pattern[1])
    if left is None:
        return None
    right = _match(t[2], pattern[2])
    if right is None:
        return None
    return left + right


def apply_rule_at(t: Tree, r: RewriteRule, addr: Addr) -> NsElement:
    subs = match_at(t, r, addr)
    if subs is None:
        raise ValueError(f"rule {r.name} does not match at {addr}")
    out = NsElement()
    for c, p in r.rhs:
        out.add(replace(t, addr, graft(p, subs)), c)
    return out


def rewrite_once(t: Tree, sys: RewriteSystem) -> Optional[NsElement]:
    """First match in rule order, then preorder position; None iff t is normal."""
    for r in sys.rules:
        for addr in positions(t):
            if match_at(t, r, addr) is not None:
                return apply_rule_at(t, r, addr)
    return None


def is_normal(t: Tree, sys: RewriteSystem) -> bool:
    return rewrite_once(t, sys) is None


def normalize(e: NsElement, sys: RewriteSystem, step_cap: int = 10_000) -> NsElement:
    if step_cap <= 0:
        raise ValueError("step_cap must be positive")
    work = NsElement(e.items())
    steps = 0
    while True:
        pending = None
        for t in sorted(work, key=tree_key):
            step = rewrite_once(t, sys)
            if step is not None:
                pending = (t, step)
                break
        if pending is None:
            return work
        steps += 1
        if steps > step_cap:
            raise StepCapExceeded(
                f"no fixed point within {step_cap} steps in system {sys.name}")
        t, step = pending
        c = work.pop(t)
        for u, d in step.items():
            work.add(u, c * d)


# --- overlaps and confluence ----------------------------------------------


def _unify(p: Tree, q: Tree) -> Optional[Tree]:
    """Least common refinement of two linear patterns, or None."""
    if p == LEAF:
        return q
    if q == LEAF:
        return p
    if p[0] != q[0]:
        return None
    l = _unify(p[1], q[1])
    r = _unify(p[2], q[2])
    if l is None or r is None:
        return None
    return (p[0], l, r)


@dataclass(frozen=True)
class Overlap:
    rule_i: RewriteRule  # matches at the root
    rule_j: RewriteRule  # matches at addr
    tree: Tree
    addrs: tuple[Addr, Addr]


def overlaps(sys: RewriteSystem, max_arity: int) -> list[Overlap]:
    """All minimal trees of arity <= max_arity where two lhs patterns overlap."""
    if max_arity < 3:
        raise ValueError("max_arity must be at least 3")
    out = []
    for i, ri in enumerate(sys.rules):
        for j, rj in enumerate(sys.rules):
            for addr in positions(ri.lhs):
                if addr == () and not (i < j):
                    continue  # same-root pairs once; trivial self-overlap never
                sup = _unify(subtree(ri.lhs, addr), rj.lhs)
                if sup is None:
                    continue
                w = replace(ri.lhs, addr, sup)
                if arity(w) <= max_arity:
                    out.append(Overlap(ri, rj, w, ((), addr)))
    return out


@dataclass(frozen=True)
class OverlapCheck:
    overlap: Overlap
    joinable: bool
    difference: tuple  # normalized S-polynomial terms, empty iff joinable


@dataclass(frozen=True)
class ConfluenceReport:
    system: str
    max_arity: int
    checks: tuple[OverlapCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.joinable for c in self.checks)


def check_confluence(sys: RewriteSystem, max_arity: int,
                     step_cap: int = 10_000) -> ConfluenceReport:
    checks = []
    for ov in overlaps(sys, max_arity):
        left = normalize(apply_rule_at(ov.tree, ov.rule_i, ov.addrs[0]), sys, step_cap)
        right = normalize(apply_rule_at(ov.tree, ov.rule_j, ov.addrs[1]), sys, step_cap)
        diff = NsElement(left.items())
        for t, c in right.items():
            diff.add(t, -c)
        checks.append(OverlapCheck(ov, not diff, tuple(sorted(diff.items(), key=lambda tc: tree_key(tc[0])))))
    return ConfluenceReport(sys.name, max_arity, tuple(checks))

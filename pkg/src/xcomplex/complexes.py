"""Finite reduced crossed complexes.

A complex of length L is a tower of table groups A_1 .. A_L with boundary
homs d_n: A_n -> A_{n-1} (n = 2..L) and A_1-actions on every A_n (n >= 2),
subject to the crossed-module axioms at the bottom and chain-complex,
equivariance, abelianness and factoring axioms above.  `validate` sweeps
every axiom exhaustively; everything downstream assumes a validated complex
and does not re-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidComplex,
    ValidationReport,
)
from .groups import (
    FiniteGroup,
    GroupAction,
    GroupHom,
    Subgroup,
    action_violation,
    hom_violation,
    image_of,
    quotient,
    subgroup,
    subgroup_as_group,
)


@dataclass(frozen=True)
class FiniteCrossedComplex:
    """Tower (A_1..A_L, d_2..d_L, act_2..act_L); boundaries[k] is d_{k+2}."""

    groups: tuple[FiniteGroup, ...]
    boundaries: tuple[GroupHom, ...]
    actions: tuple[GroupAction, ...]
    name: str = field(default="", compare=False)

    @property
    def length(self) -> int:
        return len(self.groups)

    def group(self, n: int) -> FiniteGroup:
        if not 1 <= n <= self.length:
            raise IndexOutOfRange(f"no group in degree {n}")
        return self.groups[n - 1]

    def boundary(self, n: int) -> GroupHom:
        if not 2 <= n <= self.length:
            raise IndexOutOfRange(f"no boundary in degree {n}")
        return self.boundaries[n - 2]

    def action(self, n: int) -> GroupAction:
        if not 2 <= n <= self.length:
            raise IndexOutOfRange(f"no action in degree {n}")
        return self.actions[n - 2]

    def __repr__(self) -> str:
        orders = ",".join(str(g.order) for g in self.groups)
        return f"FiniteCrossedComplex({self.name or '?'}, orders=[{orders}])"


def size_at(cx: FiniteCrossedComplex, k: int) -> int:
    """|A_k| for k <= L, and 1 beyond the truncation degree."""
    if k < 1:
        raise IndexOutOfRange(f"degree {k} < 1")
    if k <= cx.length:
        return cx.groups[k - 1].order
    return 1


def from_group(g: FiniteGroup) -> FiniteCrossedComplex:
    """Length-1 complex concentrated in degree 1."""
    return FiniteCrossedComplex((g,), (), (), name=g.name)


def from_crossed_module(
    g: FiniteGroup,
    e: FiniteGroup,
    bd: GroupHom,
    act: GroupAction,
    name: str = "",
) -> FiniteCrossedComplex:
    """Length-2 complex from crossed-module data; validates before returning."""
    cx = FiniteCrossedComplex(
        (g, e), (bd,), (act,), name=name or f"({g.name},{e.name})")
    report = validate(cx)
    if not report.ok:
        raise InvalidComplex(report)
    return cx


def _check_shape(cx: FiniteCrossedComplex) -> None:
    l = cx.length
    if l < 1:
        raise DimensionMismatch("complex needs at least degree 1")
    if len(cx.boundaries) != l - 1 or len(cx.actions) != l - 1:
        raise DimensionMismatch(
            f"length {l} complex needs {l - 1} boundaries and actions, "
            f"got {len(cx.boundaries)} and {len(cx.actions)}")
    for n in range(2, l + 1):
        bd = cx.boundary(n)
        if bd.source.order != cx.groups[n - 1].order or len(bd.image) != bd.source.order:
            raise DimensionMismatch(f"boundary {n} source shape mismatch")
        if bd.target.order != cx.groups[n - 2].order:
            raise DimensionMismatch(f"boundary {n} target shape mismatch")
        act = cx.action(n)
        if act.actor.order != cx.groups[0].order or act.space.order != cx.groups[n - 1].order:
            raise DimensionMismatch(f"action {n} shape mismatch")
        if len(act.act) != act.actor.order or any(len(r) != act.space.order for r in act.act):
            raise DimensionMismatch(f"action {n} table shape mismatch")


def _group_violations(g: FiniteGroup, n: int) -> Iterator[tuple[str, tuple]]:
    """Re-check the group axioms on raw tables; first witness per axiom.

    Needed because mutated complexes are built around the validating
    constructor on purpose (fuzz tests, hostile documents).
    """
    order, mul, inv = g.order, g.mul, g.inv
    for x in range(order):
        if mul[0][x] != x or mul[x][0] != x:
            yield ("group-identity", (n, x))
            break
    for x in range(order):
        y = inv[x]
        if not 0 <= y < order or mul[x][y] != 0 or mul[y][x] != 0:
            yield ("group-inverse", (n, x))
            break
    done = False
    for a in range(order):
        if done:
            break
        for b in range(order):
            if done:
                break
            for c in range(order):
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    yield ("group-associativity", (n, a, b, c))
                    done = True
                    break


def validate(cx: FiniteCrossedComplex) -> ValidationReport:
    """Exhaustive axiom sweep over a complex.

    Shape problems raise DimensionMismatch; axiom failures are collected
    into the report, one entry per failing check site (the first witness
    found there).  Axiom names are listed on ValidationReport.
    """
    _check_shape(cx)
    length = cx.length
    violations: list[tuple[str, tuple]] = []

    for n in range(1, length + 1):
        violations.extend(_group_violations(cx.groups[n - 1], n))

    for n in range(2, length + 1):
        w = hom_violation(cx.boundary(n))
        if w is not None:
            violations.append(("boundary-hom", (n,) + w))
        aw = action_violation(cx.action(n))
        if aw is not None:
            violations.append((aw[0], (n,) + aw[1]))

    if length >= 2:
        a1, a2 = cx.groups[0], cx.groups[1]
        bd2, act2 = cx.boundary(2).image, cx.action(2).act
        # CM1: d2(x |> e) = x d2(e) x^-1
        found = False
        for x in range(a1.order):
            if found:
                break
            for e in range(a2.order):
                lhs = bd2[act2[x][e]]
                rhs = a1.mul[a1.mul[x][bd2[e]]][a1.inv[x]]
                if lhs != rhs:
                    violations.append(("CM1", (x, e)))
                    found = True
                    break
        # Peiffer: d2(e) |> f = e f e^-1
        found = False
        for e in range(a2.order):
            if found:
                break
            for f in range(a2.order):
                lhs = act2[bd2[e]][f]
                rhs = a2.mul[a2.mul[e][f]][a2.inv[e]]
                if lhs != rhs:
                    violations.append(("Peiffer", (e, f)))
                    found = True
                    break

    for n in range(3, length + 1):
        a1 = cx.groups[0]
        an, an1 = cx.groups[n - 1], cx.groups[n - 2]
        bdn = cx.boundary(n).image
        actn, actn1 = cx.action(n).act, cx.action(n - 1).act
        # equivariance: d_n(x |> a) = x |> d_n(a)
        found = False
        for x in range(a1.order):
            if found:
                break
            for a in range(an.order):
                if bdn[actn[x][a]] != actn1[x][bdn[a]]:
                    violations.append(("equivariance", (n, x, a)))
                    found = True
                    break
        # complex: d_{n-1} d_n = 1
        bdn1 = cx.boundary(n - 1).image
        for a in range(an.order):
            if bdn1[bdn[a]] != 0:
                violations.append(("complex", (n, a)))
                break
        # abelian above degree 2
        found = False
        for a in range(an.order):
            if found:
                break
            for b in range(an.order):
                if an.mul[a][b] != an.mul[b][a]:
                    violations.append(("abelian", (n, a, b)))
                    found = True
                    break
        # action factors through coker d2: im d2 acts trivially
        if length >= 2:
            found = False
            for x in sorted(set(cx.boundary(2).image)):
                if found:
                    break
                for a in range(an.order):
                    if actn[x][a] != a:
                        violations.append(("factoring", (n, x, a)))
                        found = True
                        break

    return ValidationReport.from_violations(violations)


def pi1(cx: FiniteCrossedComplex) -> FiniteGroup:
    """Fundamental group: A_1 for length 1, else A_1 / im d_2."""
    if cx.length == 1:
        return cx.groups[0]
    img = image_of(cx.boundary(2))
    q, _ = quotient(cx.groups[0], img)
    return q


def homology(cx: FiniteCrossedComplex, n: int) -> FiniteGroup:
    """ker d_n / im d_{n+1} for 2 <= n <= L (d_{L+1} is trivial)."""
    if not 2 <= n <= cx.length:
        raise IndexOutOfRange(f"homology degree {n} outside 2..{cx.length}")
    bdn = cx.boundary(n)
    ker_members = [x for x, v in enumerate(bdn.image) if v == 0]
    k, pos = subgroup_as_group(cx.groups[n - 1], ker_members)
    if n < cx.length:
        img = set(cx.boundary(n + 1).image)
    else:
        img = {0}
    try:
        img_in_k = [pos[x] for x in img]
    except KeyError as exc:
        raise InvalidComplex(ValidationReport.from_violations(
            [("complex", (n + 1, exc.args[0]))])) from exc
    q, _ = quotient(k, subgroup(k, img_in_k))
    return q


def kernel_subgroup(cx: FiniteCrossedComplex, n: int) -> Subgroup:
    """ker d_n as a subgroup of A_n; convenience for fiber reasoning."""
    bd = cx.boundary(n)
    return subgroup(bd.source, (x for x, v in enumerate(bd.image) if v == 0))

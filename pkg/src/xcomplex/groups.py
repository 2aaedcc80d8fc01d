"""Finite groups given by multiplication tables, with dense 0-based elements.

Conventions used everywhere in the package:

  * the elements of a group of order n are the integers 0 .. n-1;
  * index 0 is always the identity;
  * tables are tuples of tuples and never change after construction.

`make_group` is the only validating constructor; the dataclass constructor
itself is dumb on purpose, so tests can build deliberately broken tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    MissingInverse,
    NoIdentityAtZero,
    NotAssociative,
    NotNormal,
)


@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication-table group; build through make_group or the factories."""

    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def make_group(mul_table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Validate a multiplication table and return the group it defines.

    The table must be square over 0..n-1 with the identity at index 0.
    Raises NoIdentityAtZero / MissingInverse / NotAssociative naming the
    first violating tuple, DimensionMismatch for shape problems.
    """
    mul = tuple(tuple(int(v) for v in row) for row in mul_table)
    n = len(mul)
    if n == 0:
        raise DimensionMismatch("empty multiplication table")
    for a, row in enumerate(mul):
        if len(row) != n:
            raise DimensionMismatch(f"row {a} has length {len(row)}, expected {n}", (a,))
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise DimensionMismatch(f"mul entry ({a},{b}) = {v} out of range", (a, b))
    for x in range(n):
        if mul[0][x] != x or mul[x][0] != x:
            raise NoIdentityAtZero(f"index 0 is not a two-sided identity at x={x}", (x,))
    inv = []
    for x in range(n):
        y = next((y for y in range(n) if mul[x][y] == 0 and mul[y][x] == 0), None)
        if y is None:
            raise MissingInverse(f"element {x} has no two-sided inverse", (x,))
        inv.append(y)
    for a in range(n):
        ma = mul[a]
        for b in range(n):
            mab = mul[ma[b]]
            mb = mul[b]
            for c in range(n):
                if mab[c] != ma[mb[c]]:
                    raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c))
    return FiniteGroup(n, mul, tuple(inv), name)


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n written additively, identity 0."""
    if n < 1:
        raise ValueError("cyclic_group needs n >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return make_group(table, name=f"Z/{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product on index pairs packed as a*|H| + b."""
    m = h.order
    size = g.order * m
    table = [[0] * size for _ in range(size)]
    for a in range(g.order):
        for b in range(m):
            for c in range(g.order):
                for d in range(m):
                    table[a * m + b][c * m + d] = g.mul[a][c] * m + h.mul[b][d]
    return make_group(table, name=f"{g.name}x{h.name}")


def symmetric_group_3() -> FiniteGroup:
    """S3 acting on {0,1,2}.

    Elements are the six permutation tuples in lexicographic order, so the
    identity (0,1,2) sits at index 0; the product p*q composes as
    x -> p[q[x]] (q first).
    """
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(3))] for q in perms]
        for p in perms
    ]
    return make_group(table, name="S3")


@dataclass(frozen=True)
class GroupHom:
    """Map between table groups, stored as the image array over the source."""

    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]


def hom_violation(h: GroupHom) -> Optional[tuple[int, int]]:
    """First pair (x, y) with image(x*y) != image(x)*image(y), or None.

    image(0) = 0 is implied: the sweep hits (0, 0) where the equation forces
    the identity by cancellation.
    """
    if len(h.image) != h.source.order:
        raise DimensionMismatch(
            f"image array has length {len(h.image)}, expected {h.source.order}")
    for v in h.image:
        if not 0 <= v < h.target.order:
            raise DimensionMismatch(f"image value {v} out of target range")
    smul, tmul, im = h.source.mul, h.target.mul, h.image
    for x in range(h.source.order):
        for y in range(h.source.order):
            if im[smul[x][y]] != tmul[im[x]][im[y]]:
                return (x, y)
    return None


def check_hom(h: GroupHom) -> bool:
    return hom_violation(h) is None


def zero_hom(source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    return GroupHom(source, target, (0,) * source.order)


@dataclass(frozen=True)
class GroupAction:
    """Left action of `actor` on `space` by automorphisms: act[g][e]."""

    actor: FiniteGroup
    space: FiniteGroup
    act: tuple[tuple[int, ...], ...]


def action_violation(a: GroupAction) -> Optional[tuple[str, tuple]]:
    """First failing action axiom as (kind, witness), or None.

    Kinds, in check order: action-bijective (some act[g] is not a
    permutation), action-hom (act[g] does not preserve multiplication),
    action-identity (act[0] is not the identity map), action-composition
    (act[g1*g2] != act[g1] after act[g2]).
    """
    n, m = a.actor.order, a.space.order
    if len(a.act) != n:
        raise DimensionMismatch(f"action has {len(a.act)} rows, expected {n}")
    for g, row in enumerate(a.act):
        if len(row) != m:
            raise DimensionMismatch(f"action row {g} has length {len(row)}, expected {m}")
        for v in row:
            if not 0 <= v < m:
                raise DimensionMismatch(f"action value {v} out of range in row {g}")
    smul = a.space.mul
    for g in range(n):
        row = a.act[g]
        if sorted(row) != list(range(m)):
            return ("action-bijective", (g,))
        for e in range(m):
            for f in range(m):
                if row[smul[e][f]] != smul[row[e]][row[f]]:
                    return ("action-hom", (g, e, f))
    for e in range(m):
        if a.act[0][e] != e:
            return ("action-identity", (e,))
    amul = a.actor.mul
    for g1 in range(n):
        for g2 in range(n):
            row12, row1, row2 = a.act[amul[g1][g2]], a.act[g1], a.act[g2]
            for e in range(m):
                if row12[e] != row1[row2[e]]:
                    return ("action-composition", (g1, g2, e))
    return None


def check_action(a: GroupAction) -> bool:
    return action_violation(a) is None


def trivial_action(actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    row = tuple(range(space.order))
    return GroupAction(actor, space, (row,) * actor.order)


@dataclass(frozen=True)
class Subgroup:
    """Subset of a parent group with a computed (never assumed) normality flag."""

    parent: FiniteGroup
    members: tuple[int, ...]
    normal: bool


def subgroup(parent: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Validate closure under mul/inv and record whether conjugation-stable."""
    mem = tuple(sorted(set(int(x) for x in members)))
    memset = set(mem)
    if 0 not in memset:
        raise ValueError("subgroup must contain the identity 0")
    for x in mem:
        if not 0 <= x < parent.order:
            raise IndexError(f"member {x} out of range")
        if parent.inv[x] not in memset:
            raise ValueError(f"subgroup not closed under inverse at {x}")
        for y in mem:
            if parent.mul[x][y] not in memset:
                raise ValueError(f"subgroup not closed under product at ({x},{y})")
    mul, inv = parent.mul, parent.inv
    normal = all(
        mul[mul[g][x]][inv[g]] in memset
        for g in range(parent.order)
        for x in mem
    )
    return Subgroup(parent, mem, normal)


def fibers_of(h: GroupHom) -> tuple[tuple[int, ...], ...]:
    """Partition of the source by image value, indexed by target element.

    Fiber sizes sum to the source order; fibers over the image all have the
    kernel's size; fibers off the image are empty.
    """
    buckets: list[list[int]] = [[] for _ in range(h.target.order)]
    for x, v in enumerate(h.image):
        buckets[v].append(x)
    return tuple(tuple(b) for b in buckets)


def kernel_of(h: GroupHom) -> Subgroup:
    return subgroup(h.source, (x for x, v in enumerate(h.image) if v == 0))


def image_of(h: GroupHom) -> Subgroup:
    return subgroup(h.target, set(h.image))


def subgroup_as_group(parent: FiniteGroup, members: Iterable[int]) -> tuple[FiniteGroup, dict[int, int]]:
    """Reindex a closed subset as a group of its own; returns (group, old->new)."""
    mem = tuple(sorted(set(members)))
    pos = {x: i for i, x in enumerate(mem)}
    try:
        table = [[pos[parent.mul[a][b]] for b in mem] for a in mem]
    except KeyError as exc:
        raise ValueError(f"subset not closed under product (escapes at {exc})") from exc
    return make_group(table, name=f"{parent.name}[{len(mem)}]"), pos


def quotient(g: FiniteGroup, n: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """Quotient by a normal subgroup, cosets indexed by their least member.

    The identity coset contains 0, so it gets index 0.  Returns the quotient
    group and the projection hom.  Raises NotNormal when the flag is false.
    """
    if n.parent != g:
        raise DimensionMismatch("subgroup belongs to a different parent group")
    if not n.normal:
        raise NotNormal(f"subgroup of order {len(n.members)} is not normal in {g.name or 'G'}")
    rep = [min(g.mul[x][m] for m in n.members) for x in range(g.order)]
    reps = sorted(set(rep))
    pos = {r: i for i, r in enumerate(reps)}
    table = [[pos[rep[g.mul[a][b]]] for b in reps] for a in reps]
    q = make_group(table, name=f"{g.name}/{len(n.members)}")
    proj = GroupHom(g, q, tuple(pos[rep[x]] for x in range(g.order)))
    return q, proj

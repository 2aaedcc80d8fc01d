"""1-fold homotopies between morphisms and the class decomposition they induce.

A 1-fold homotopy out of a morphism f is a free choice of values
H_n: C_n -> A_{n+1} for n = 1 .. L-1; there are no compatibility equations,
so the number of homotopies out of f is a plain product of coefficient
sizes.  The target morphism is computed from f and H by

    g_1(x) = f_1(x) * d2(H_1(x))
    g_n(c) = f_n(c) * H_{n-1}(attach(c)) * d_{n+1}(H_n(c))   (2 <= n <= L)

where H_{n-1} extends to attaching data as a derivation (n = 2) or an
action-twisted morphism (n >= 3), and the last factor is dropped for n = L.
Every computed target is verified; a failure raises TargetNotMorphism.

Homotopy classes are the connected components of the graph whose edges are
(f, target of some H out of f), with symmetric closure, computed by
union-find.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .complexes import FiniteCrossedComplex, size_at
from .errors import DimensionMismatch, IndexOutOfRange, ResultTooLarge, TargetNotMorphism
from .enumeration import (
    Colouring,
    Morphism,
    enumerate_homs,
    eval_word,
    morphism_violation,
)
from .presentations import CrossedWord, CWPresentation, ModuleElt, Word

DEFAULT_EDGE_CAP = 10**7


@dataclass(frozen=True)
class Homotopy1:
    """Source morphism plus value tables; values[n-1] maps C_n into A_{n+1}."""

    source: Morphism
    values: tuple[tuple[int, ...], ...]


def eval_derivation(
    cx: FiniteCrossedComplex,
    f1: tuple[int, ...],
    h1: tuple[int, ...],
    w: Word,
) -> int:
    """Extend H_1 to a word by the derivation rule s(Xy) = (f1(y)^-1 |> s(X)) s(y).

    On a negative letter x^-1 the value is f1(x) |> H_1(x)^-1, the unique
    choice with s(x x^-1) = 1.  The result only depends on the free
    reduction of w.
    """
    if cx.length < 2:
        raise DimensionMismatch("derivations need a complex of length >= 2")
    a1, a2 = cx.groups[0], cx.groups[1]
    act = cx.actions[0].act
    s = 0
    for g, e in w:
        if e == 1:
            phi = f1[g]
            sv = h1[g]
        else:
            phi = a1.inv[f1[g]]
            sv = act[f1[g]][a2.inv[h1[g]]]
        s = a2.mul[act[a1.inv[phi]][s]][sv]
    return s


def eval_h2_on_crossed(
    cx: FiniteCrossedComplex,
    f1: tuple[int, ...],
    h2: tuple[int, ...],
    cw: CrossedWord,
) -> int:
    """Extend H_2 to a crossed word; lands in A_3."""
    if cx.length < 3:
        raise DimensionMismatch("H_2 values need a complex of length >= 3")
    a3 = cx.groups[2]
    act = cx.actions[1].act
    acc = 0
    for conj, gen, exp in cw:
        x = eval_word(cx, f1, conj)
        v = act[x][h2[gen]]
        acc = a3.mul[acc][v if exp == 1 else a3.inv[v]]
    return acc


def eval_hk_on_module(
    cx: FiniteCrossedComplex,
    f1: tuple[int, ...],
    hk: tuple[int, ...],
    m: ModuleElt,
    k: int,
) -> int:
    """Extend H_k (k >= 3) to a ModuleElt of degree k; lands in A_{k+1}."""
    if k < 3:
        raise IndexOutOfRange(f"H_k degree {k} < 3")
    if cx.length < k + 1:
        raise DimensionMismatch(f"complex of length {cx.length} has no A_{k + 1}")
    ak1 = cx.groups[k]
    act = cx.actions[k - 1].act
    acc = 0
    for coef, twist, gen in m:
        x = eval_word(cx, f1, twist)
        v = act[x][hk[gen]]
        c = coef % ak1.order
        for _ in range(c):
            acc = ak1.mul[acc][v]
    return acc


def homotopy_target(k: Homotopy1, verify: bool = True) -> Morphism:
    """Morphism at the far end of a homotopy; raises TargetNotMorphism if the
    computed colouring fails verification."""
    f = k.source
    p, cx = f.presentation, f.coefficients
    length = cx.length
    h = k.values
    if len(h) != max(length - 1, 0):
        raise DimensionMismatch(
            f"homotopy needs {length - 1} value tables, got {len(h)}")
    out: list[tuple[int, ...]] = []

    a1 = cx.groups[0]
    if length >= 2:
        bd2 = cx.boundary(2).image
        out.append(tuple(
            a1.mul[f.colours[0][c]][bd2[h[0][c]]]
            for c in range(p.count(1))))
    else:
        out.append(f.colours[0])

    if length >= 2:
        a2 = cx.groups[1]
        bd3 = cx.boundary(3).image if length >= 3 else None
        layer = []
        for c in range(p.count(2)):
            val = a2.mul[f.colours[1][c]][
                eval_derivation(cx, f.colours[0], h[0], p.attach2[c])]
            if bd3 is not None:
                val = a2.mul[val][bd3[h[1][c]]]
            layer.append(val)
        out.append(tuple(layer))

    for n in range(3, length + 1):
        an = cx.groups[n - 1]
        bdn1 = cx.boundary(n + 1).image if length >= n + 1 else None
        layer = []
        for c in range(p.count(n)):
            if n == 3:
                step = eval_h2_on_crossed(cx, f.colours[0], h[1], p.attach3[c])
            else:
                step = eval_hk_on_module(
                    cx, f.colours[0], h[n - 2], p.attach_module(n)[c], n - 1)
            val = an.mul[f.colours[n - 1][c]][step]
            if bdn1 is not None:
                val = an.mul[val][bdn1[h[n - 1][c]]]
            layer.append(val)
        out.append(tuple(layer))

    target = Morphism(p, cx, tuple(out))
    if verify:
        w = morphism_violation(p, cx, target.colours)
        if w is not None:
            raise TargetNotMorphism(f"homotopy target violates {w}", w)
    return target


def count_homotopies_from(f: Morphism, fold: int = 1) -> int:
    """Number of fold-step homotopies out of f: prod_k |A_{k+fold}|^{l_k}.

    The count does not depend on f; sizes above the truncation degree
    contribute 1, so the product is finite and equals 1 when fold >= L.
    """
    if fold < 1:
        raise IndexOutOfRange(f"fold {fold} < 1")
    p, cx = f.presentation, f.coefficients
    out = 1
    for k in range(1, p.dim + 1):
        out *= size_at(cx, k + fold) ** p.count(k)
    return out


def homotopy_value_space(
    p: CWPresentation,
    cx: FiniteCrossedComplex,
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All 1-fold homotopy value tables, lexicographic by (layer, cell, value).

    Yields exactly one empty table when L = 1 (the identity homotopy).
    """
    length = cx.length
    shapes = [(p.count(n), cx.groups[n].order) for n in range(1, length)]
    ranges = []
    for ln, order in shapes:
        ranges.extend([range(order)] * ln)
    for flat in itertools.product(*ranges):
        values = []
        at = 0
        for ln, _ in shapes:
            values.append(tuple(flat[at:at + ln]))
            at += ln
        yield tuple(values)


@dataclass(frozen=True)
class ClassDecomposition:
    """Partition of the morphism set into homotopy classes.

    Representatives are the least-index morphisms of their classes, listed
    in index order; sizes align with representatives and sum to the number
    of morphisms.
    """

    count: int
    representatives: tuple[Morphism, ...]
    sizes: tuple[int, ...]


def homotopy_classes(
    p: CWPresentation,
    cx: FiniteCrossedComplex,
    cap: int = DEFAULT_EDGE_CAP,
    threads: int = 1,
) -> ClassDecomposition:
    """Connected components of the 1-fold homotopy graph on Hom(P, A).

    Raises ResultTooLarge when morphisms times homotopies per morphism
    exceeds `cap`.  The partition does not depend on `threads`.
    """
    homs = enumerate_homs(p, cx, cap=cap, threads=threads)
    if not homs:
        return ClassDecomposition(0, (), ())
    per = count_homotopies_from(homs[0])
    if per * len(homs) > cap:
        raise ResultTooLarge(
            f"{len(homs)} morphisms x {per} homotopies exceeds edge cap {cap}")
    index: dict[Colouring, int] = {m.colours: i for i, m in enumerate(homs)}

    def targets_for(i: int) -> list[int]:
        f = homs[i]
        out = []
        for values in homotopy_value_space(p, cx):
            g = homotopy_target(Homotopy1(f, values))
            out.append(index[g.colours])
        return out

    if threads <= 1:
        all_targets = [targets_for(i) for i in range(len(homs))]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            all_targets = list(ex.map(targets_for, range(len(homs))))

    parent = list(range(len(homs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, targets in enumerate(all_targets):
        for j in targets:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    members: dict[int, list[int]] = {}
    for i in range(len(homs)):
        members.setdefault(find(i), []).append(i)
    roots = sorted(members)
    return ClassDecomposition(
        count=len(roots),
        representatives=tuple(homs[r] for r in roots),
        sizes=tuple(len(members[r]) for r in roots),
    )


def enumerate_homotopies_from(f: Morphism) -> Iterator[Homotopy1]:
    """All 1-fold homotopies out of f, in value-table order."""
    for values in homotopy_value_space(f.presentation, f.coefficients):
        yield Homotopy1(f, values)

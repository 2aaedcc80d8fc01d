"""Combinatorial presentations of CW-complexes with a single 0-cell.

A presentation records cell counts per dimension and attaching data:

  * a 2-cell carries a Word in the 1-cells, letters (gen, +-1);
  * a 3-cell carries a CrossedWord, terms (conjugating Word, 2-cell, +-1);
  * a cell of dimension n >= 4 carries a ModuleElt, terms
    (integer coefficient, twisting Word, (n-1)-cell).

Attaching data is raw syntax: no normal form in the free algebra is ever
computed, and equality of attaching data is plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ValidationReport

Word = tuple[tuple[int, int], ...]
CrossedWord = tuple[tuple[Word, int, int], ...]
ModuleElt = tuple[tuple[int, Word, int], ...]


@dataclass(frozen=True)
class CWPresentation:
    """Cell counts l_0..l_D plus attaching data per positive dimension.

    attach_high[k] holds the ModuleElts for dimension k+4, one per cell.
    """

    cells: tuple[int, ...]
    attach2: tuple[Word, ...] = ()
    attach3: tuple[CrossedWord, ...] = ()
    attach_high: tuple[tuple[ModuleElt, ...], ...] = ()
    name: str = field(default="", compare=False)

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def count(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"negative dimension {n}")
        return self.cells[n] if n <= self.dim else 0

    def attach_module(self, n: int) -> tuple[ModuleElt, ...]:
        if n < 4:
            raise ValueError(f"no ModuleElt data below dimension 4 (asked {n})")
        k = n - 4
        return self.attach_high[k] if k < len(self.attach_high) else ()

    def __repr__(self) -> str:
        return f"CWPresentation({self.name or '?'}, cells={list(self.cells)})"


def free_reduce(w: Word) -> Word:
    """Cancel adjacent (g,e)(g,-e) pairs until none remain."""
    out: list[tuple[int, int]] = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def word_inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def validate_presentation(p: CWPresentation) -> ValidationReport:
    """Structural sweep; see ValidationReport for the axiom names used."""
    violations: list[tuple[str, tuple]] = []
    if p.dim < 0 or p.cells[0] != 1:
        violations.append(("base-cells", (p.cells[0] if p.cells else None,)))
    for n, l in enumerate(p.cells):
        if l < 0:
            violations.append(("cell-count", (n, l)))

    def check_word(w: Word, bound: int, where: tuple) -> bool:
        ok = True
        for i, (g, e) in enumerate(w):
            if not 0 <= g < bound:
                violations.append(("generator-range", where + (i, g)))
                ok = False
            if e not in (1, -1):
                violations.append(("exponent", where + (i, e)))
                ok = False
        return ok

    l1 = p.count(1)
    ranges_ok = True
    if len(p.attach2) != p.count(2):
        violations.append(("attach-arity", (2, len(p.attach2), p.count(2))))
        ranges_ok = False
    for c, w in enumerate(p.attach2):
        ranges_ok &= check_word(w, l1, (2, c))

    if len(p.attach3) != p.count(3):
        violations.append(("attach-arity", (3, len(p.attach3), p.count(3))))
        ranges_ok = False
    l2 = p.count(2)
    for c, cw in enumerate(p.attach3):
        for i, (conj, gen, exp) in enumerate(cw):
            ranges_ok &= check_word(conj, l1, (3, c, i))
            if not 0 <= gen < l2:
                violations.append(("generator-range", (3, c, i, gen)))
                ranges_ok = False
            if exp not in (1, -1):
                violations.append(("exponent", (3, c, i, exp)))
                ranges_ok = False

    for n in range(4, p.dim + 1):
        data = p.attach_module(n)
        if len(data) != p.count(n):
            violations.append(("attach-arity", (n, len(data), p.count(n))))
        ln1 = p.count(n - 1)
        for c, elt in enumerate(data):
            for i, (coef, twist, gen) in enumerate(elt):
                check_word(twist, l1, (n, c, i))
                if not 0 <= gen < ln1:
                    violations.append(("generator-range", (n, c, i, gen)))
                if not isinstance(coef, int):
                    violations.append(("exponent", (n, c, i, coef)))

    # boundary-of-boundary at dimension 3: the image word of each CrossedWord
    # must reduce freely to the empty word.  Skipped when ranges are broken.
    if ranges_ok:
        for c, cw in enumerate(p.attach3):
            parts: list[tuple[int, int]] = []
            for conj, gen, exp in cw:
                inner = p.attach2[gen] if exp == 1 else word_inverse(p.attach2[gen])
                parts.extend(conj)
                parts.extend(inner)
                parts.extend(word_inverse(conj))
            reduced = free_reduce(tuple(parts))
            if reduced:
                violations.append(("boundary-boundary", (c, reduced)))

    return ValidationReport.from_violations(violations)


def _shift_word(w: Word, by: int) -> Word:
    return tuple((g + by, e) for g, e in w)


def wedge(p: CWPresentation, q: CWPresentation) -> CWPresentation:
    """One-point union: cell counts add, q's cells are shifted past p's."""
    d = max(p.dim, q.dim)
    cells = (1,) + tuple(p.count(n) + q.count(n) for n in range(1, d + 1))
    s1, s2 = p.count(1), p.count(2)
    attach2 = p.attach2 + tuple(_shift_word(w, s1) for w in q.attach2)
    attach3 = p.attach3 + tuple(
        tuple((_shift_word(conj, s1), gen + s2, exp) for conj, gen, exp in cw)
        for cw in q.attach3
    )
    high = []
    for n in range(4, d + 1):
        sn1 = p.count(n - 1)
        shifted = tuple(
            tuple((coef, _shift_word(tw, s1), gen + sn1) for coef, tw, gen in elt)
            for elt in q.attach_module(n)
        )
        high.append(p.attach_module(n) + shifted)
    return CWPresentation(
        cells, attach2, attach3, tuple(high),
        name=f"{p.name} v {q.name}" if p.name and q.name else "")


def relabel_cells(p: CWPresentation, perms: Mapping[int, Sequence[int]]) -> CWPresentation:
    """Renumber cells dimension-wise; perms[n][old] = new index.

    Dimensions absent from `perms` keep their numbering.  Used to check that
    results do not depend on cell order.
    """
    def perm(n: int) -> Sequence[int]:
        return perms.get(n, tuple(range(p.count(n))))

    def reword(w: Word) -> Word:
        p1 = perm(1)
        return tuple((p1[g], e) for g, e in w)

    def place(items, n):
        out = [None] * p.count(n)
        pn = perm(n)
        for old, item in enumerate(items):
            out[pn[old]] = item
        return tuple(out)

    attach2 = place(tuple(reword(w) for w in p.attach2), 2)
    p2 = perm(2)
    attach3 = place(
        tuple(tuple((reword(conj), p2[gen], exp) for conj, gen, exp in cw)
              for cw in p.attach3), 3)
    high = []
    for n in range(4, p.dim + 1):
        pn1 = perm(n - 1)
        data = tuple(
            tuple((coef, reword(tw), pn1[gen]) for coef, tw, gen in elt)
            for elt in p.attach_module(n)
        )
        high.append(place(data, n))
    return CWPresentation(p.cells, attach2, attach3, tuple(high), name=p.name)


def point() -> CWPresentation:
    return CWPresentation((1,), name="point")


def sphere(n: int) -> CWPresentation:
    """One 0-cell and one n-cell, attached trivially."""
    if n < 1:
        raise ValueError("sphere needs n >= 1")
    cells = (1,) + (0,) * (n - 1) + (1,)
    if n == 1:
        return CWPresentation(cells, name="sphere:1")
    if n == 2:
        return CWPresentation(cells, attach2=((),), name="sphere:2")
    if n == 3:
        return CWPresentation(cells, attach3=((),), name="sphere:3")
    high = tuple(() for _ in range(4, n)) + (((),),)
    return CWPresentation(cells, attach_high=high, name=f"sphere:{n}")


def disk(n: int) -> CWPresentation:
    """One 0-cell, one (n-1)-cell and one n-cell that fills it."""
    if n < 2:
        raise ValueError("disk needs n >= 2")
    if n == 2:
        return CWPresentation((1, 1, 1), attach2=(((0, 1),),), name="disk:2")
    if n == 3:
        return CWPresentation(
            (1, 0, 1, 1), attach2=((),), attach3=((((), 0, 1),),), name="disk:3")
    cells = (1,) + (0,) * (n - 3) + (0, 1, 1)
    if n == 4:
        return CWPresentation(
            cells, attach3=((),), attach_high=((((1, (), 0),),),), name="disk:4")
    high = [() for _ in range(4, n - 1)]
    high.append(((),))
    high.append((((1, (), 0),),))
    return CWPresentation(cells, attach_high=tuple(high), name=f"disk:{n}")


def torus() -> CWPresentation:
    return CWPresentation(
        (1, 2, 1),
        attach2=(((0, 1), (1, 1), (0, -1), (1, -1)),),
        name="torus")


def genus_surface(g: int) -> CWPresentation:
    """Closed orientable surface: 2g 1-cells, one 2-cell, commutator word."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    w: list[tuple[int, int]] = []
    for i in range(g):
        a, b = 2 * i, 2 * i + 1
        w += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return CWPresentation((1, 2 * g, 1), attach2=(tuple(w),), name=f"genus:{g}")


def rp2() -> CWPresentation:
    return CWPresentation((1, 1, 1), attach2=(((0, 1), (0, 1)),), name="rp2")


def sphere2_two_cells() -> CWPresentation:
    """The 2-sphere built from one 1-cell and two 2-cells glued along it."""
    return CWPresentation(
        (1, 1, 2),
        attach2=(((0, 1),), ((0, -1),)),
        name="sphere2-two-cells")

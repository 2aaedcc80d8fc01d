"""Builtin spaces and coefficient complexes, addressable by name.

Space names: point, sphere:N (N >= 1), disk:N (N >= 2), torus, genus:G,
rp2, sphere2-two-cells.  Coefficient names: zN (cyclic), s3, z2xz2,
cm-z2-z2-zero, cm-z4-z2-incl, cm-z2-z3-flip, l3-z2.  Dashes and
underscores are interchangeable.
"""

from __future__ import annotations

import re
from typing import Callable

from .complexes import FiniteCrossedComplex, from_crossed_module, from_group
from .errors import ParseError
from .groups import (
    GroupAction,
    GroupHom,
    cyclic_group,
    direct_product,
    symmetric_group_3,
    trivial_action,
    zero_hom,
)
from .presentations import (
    CWPresentation,
    disk,
    genus_surface,
    point,
    rp2,
    sphere,
    sphere2_two_cells,
    torus,
)


def _cm_z2_z2_zero() -> FiniteCrossedComplex:
    g = cyclic_group(2)
    e = cyclic_group(2)
    return from_crossed_module(g, e, zero_hom(e, g), trivial_action(g, e),
                               name="cm-z2-z2-zero")


def _cm_z4_z2_incl() -> FiniteCrossedComplex:
    g = cyclic_group(4)
    e = cyclic_group(2)
    incl = GroupHom(e, g, (0, 2))
    return from_crossed_module(g, e, incl, trivial_action(g, e),
                               name="cm-z4-z2-incl")


def _cm_z2_z3_flip() -> FiniteCrossedComplex:
    """Z/2 acting on Z/3 by negation, zero boundary; the nontrivial action
    makes crossed-word evaluation order matter."""
    g = cyclic_group(2)
    e = cyclic_group(3)
    act = GroupAction(g, e, ((0, 1, 2), (0, 2, 1)))
    return from_crossed_module(g, e, zero_hom(e, g), act, name="cm-z2-z3-flip")


def _l3_z2() -> FiniteCrossedComplex:
    """Length-3 tower of Z/2's with zero boundaries and trivial actions."""
    z2 = cyclic_group(2)
    cx = FiniteCrossedComplex(
        (z2, z2, z2),
        (zero_hom(z2, z2), zero_hom(z2, z2)),
        (trivial_action(z2, z2), trivial_action(z2, z2)),
        name="l3-z2")
    return cx


_SPACES: dict[str, Callable[[], CWPresentation]] = {
    "point": point,
    "torus": torus,
    "rp2": rp2,
    "sphere2-two-cells": sphere2_two_cells,
}

_COEFFICIENTS: dict[str, Callable[[], FiniteCrossedComplex]] = {
    "s3": lambda: from_group(symmetric_group_3()),
    "z2xz2": lambda: from_group(direct_product(cyclic_group(2), cyclic_group(2))),
    "cm-z2-z2-zero": _cm_z2_z2_zero,
    "cm-z4-z2-incl": _cm_z4_z2_incl,
    "cm-z2-z3-flip": _cm_z2_z3_flip,
    "l3-z2": _l3_z2,
}


def _norm(name: str) -> str:
    return name.strip().lower().replace("_", "-")


def resolve_space(name: str) -> CWPresentation:
    """Builtin space by name; ParseError when unknown."""
    key = _norm(name)
    if key in _SPACES:
        return _SPACES[key]()
    m = re.fullmatch(r"sphere:?(\d+)", key)
    if m:
        return sphere(int(m.group(1)))
    m = re.fullmatch(r"disk:?(\d+)", key)
    if m:
        return disk(int(m.group(1)))
    m = re.fullmatch(r"genus:?(\d+)", key)
    if m:
        return genus_surface(int(m.group(1)))
    raise ParseError(f"unknown builtin space '{name}'")


def resolve_coefficients(name: str) -> FiniteCrossedComplex:
    """Builtin coefficient complex by name; ParseError when unknown."""
    key = _norm(name)
    if key in _COEFFICIENTS:
        return _COEFFICIENTS[key]()
    m = re.fullmatch(r"z:?(\d+)", key)
    if m:
        return from_group(cyclic_group(int(m.group(1))))
    raise ParseError(f"unknown builtin coefficients '{name}'")


def standard_spaces() -> list[CWPresentation]:
    """The showcase spaces listed by the library command."""
    return [
        point(),
        sphere(1), sphere(2), sphere(3),
        disk(2), disk(3), disk(4),
        torus(),
        genus_surface(2),
        rp2(),
        sphere2_two_cells(),
    ]


def standard_coefficients() -> list[FiniteCrossedComplex]:
    """The coefficient suite used by the acceptance checks."""
    return [
        from_group(cyclic_group(2)),
        from_group(cyclic_group(3)),
        from_group(symmetric_group_3()),
        _cm_z2_z2_zero(),
        _cm_z4_z2_incl(),
        _l3_z2(),
    ]

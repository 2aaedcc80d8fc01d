"""Self-contained acceptance checks, runnable from the CLI and the tests.

Each criterion is a function returning a CheckResult; `run_all` runs the
nine of them in order.  The suite is deterministic (fixed seeds) and sized
to finish in well under a minute on a laptop.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import FiniteCrossedComplex, pi1, size_at, validate
from .enumeration import count_homs, count_homs_bruteforce, enumerate_homs
from .errors import TargetNotMorphism
from .groups import FiniteGroup, GroupAction, GroupHom, hom_violation
from .homotopies import (
    Homotopy1,
    count_homotopies_from,
    homotopy_classes,
    homotopy_target,
    homotopy_value_space,
)
from .invariant import euler_char_mapping_space, format_rational, invariant_ia
from .library import resolve_coefficients, resolve_space, standard_coefficients, standard_spaces
from .presentations import disk, point, rp2, sphere, torus, wedge
from .randomgen import random_instances

SEED = 20260819
RANDOM_INSTANCES = 24
MUTATIONS = 100
EDGE_BUDGET = 10_000


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    details: str


def _suite_pairs():
    return [(p, cx) for p in standard_spaces() for cx in standard_coefficients()]


def check_oracle_equivalence() -> CheckResult:
    """Layered count equals brute-force count on random and builtin instances."""
    bad = []
    tried = 0
    for p, cx in random_instances(SEED, RANDOM_INSTANCES):
        tried += 1
        fast, slow = count_homs(p, cx), count_homs_bruteforce(p, cx)
        if fast != slow:
            bad.append(f"random #{tried}: {fast} != {slow}")
    for p, cx in _suite_pairs():
        tried += 1
        fast, slow = count_homs(p, cx), count_homs_bruteforce(p, cx)
        if fast != slow:
            bad.append(f"{p.name} x {cx.name}: {fast} != {slow}")
    details = f"{tried} instances" + (f"; mismatches: {'; '.join(bad)}" if bad else "")
    return CheckResult(1, "oracle equivalence", not bad, details)


def check_decomposition_invariance() -> CheckResult:
    """Invariant agrees across different cell decompositions of one space."""
    families = [
        [point(), disk(2)],
        [point(), disk(3)],
        [sphere(2), resolve_space("sphere2-two-cells")],
    ]
    for base in (torus(), rp2(), sphere(2)):
        for n in (2, 3):
            families.append([base, wedge(base, disk(n))])
    bad = []
    checked = 0
    for cx in standard_coefficients():
        for family in families:
            vals = [invariant_ia(p, cx) for p in family]
            checked += 1
            if len(set(vals)) != 1:
                names = ", ".join(p.name for p in family)
                bad.append(f"{{{names}}} x {cx.name}: "
                           + ", ".join(format_rational(v) for v in vals))
    details = f"{checked} family/coefficient combinations"
    if bad:
        details += "; disagreements: " + "; ".join(bad)
    return CheckResult(2, "decomposition invariance", not bad, details)


def check_disk_wedge_counts() -> CheckResult:
    """#Hom(P v disk(n)) = #Hom(P) * |A_n| for every suite pair and n."""
    bad = []
    checked = 0
    for p, cx in _suite_pairs():
        base = count_homs(p, cx)
        for n in (2, 3, 4):
            lhs = count_homs(wedge(p, disk(n)), cx)
            rhs = base * size_at(cx, n)
            checked += 1
            if lhs != rhs:
                bad.append(f"{p.name} v disk:{n} x {cx.name}: {lhs} != {rhs}")
    details = f"{checked} identities"
    if bad:
        details += "; failures: " + "; ".join(bad)
    return CheckResult(3, "disk-wedge count identity", not bad, details)


def check_euler_identity() -> CheckResult:
    """Mapping-space Euler characteristic equals the invariant, with the
    fold-1 homotopy count established by direct enumeration."""
    bad = []
    checked = 0
    for p, cx in _suite_pairs():
        inv = invariant_ia(p, cx)
        eul = euler_char_mapping_space(p, cx, verify_homotopy_count=True)
        checked += 1
        if inv != eul:
            bad.append(f"{p.name} x {cx.name}: invariant {format_rational(inv)}"
                       f" != euler {format_rational(eul)}")
    details = f"{checked} instances"
    if bad:
        details += "; mismatches: " + "; ".join(bad)
    return CheckResult(4, "euler characteristic identity", not bad, details)


def check_named_values() -> CheckResult:
    """Frozen reference values."""
    cases = [
        ("torus x s3", torus(), resolve_coefficients("s3"), "18"),
        ("rp2 x z2", rp2(), resolve_coefficients("z2"), "2"),
        ("rp2 x z3", rp2(), resolve_coefficients("z3"), "1"),
    ]
    for cx in standard_coefficients():
        cases.append((f"point x {cx.name}", point(), cx, "1"))
    bad = []
    for label, p, cx, want in cases:
        got = format_rational(invariant_ia(p, cx))
        if got != want:
            bad.append(f"{label}: got {got}, want {want}")
    details = f"{len(cases)} named values"
    if bad:
        details += "; wrong: " + "; ".join(bad)
    return CheckResult(5, "named invariant values", not bad, details)


def check_class_counts() -> CheckResult:
    """Homotopy classes of maps out of the circle biject with pi1."""
    bad = []
    circle = sphere(1)
    for cx in standard_coefficients():
        want = pi1(cx).order
        got = homotopy_classes(circle, cx).count
        if got != want:
            bad.append(f"{cx.name}: {got} classes, |pi1| = {want}")
    details = f"{len(standard_coefficients())} coefficient complexes"
    if bad:
        details += "; mismatches: " + "; ".join(bad)
    return CheckResult(6, "circle classes count pi1", not bad, details)


def check_connection_validity() -> CheckResult:
    """Every homotopy target on small suite instances verifies as a morphism."""
    failures = []
    edges = 0
    for p, cx in _suite_pairs():
        homs = enumerate_homs(p, cx)
        if not homs:
            continue
        per = count_homotopies_from(homs[0])
        if per * len(homs) > EDGE_BUDGET:
            continue
        for f in homs:
            for values in homotopy_value_space(p, cx):
                edges += 1
                try:
                    homotopy_target(Homotopy1(f, values))
                except TargetNotMorphism as exc:
                    failures.append(f"{p.name} x {cx.name}: {exc}")
    details = f"{edges} homotopy targets verified"
    if failures:
        details += "; failures: " + "; ".join(failures[:5])
    return CheckResult(7, "homotopy targets are morphisms", not failures, details)


def _rewire(groups: tuple[FiniteGroup, ...], cx: FiniteCrossedComplex) -> FiniteCrossedComplex:
    """Rebuild a complex on replacement group objects, keeping all tables."""
    boundaries = tuple(
        GroupHom(groups[i + 1], groups[i], bd.image)
        for i, bd in enumerate(cx.boundaries))
    actions = tuple(
        GroupAction(groups[0], groups[i + 1], a.act)
        for i, a in enumerate(cx.actions))
    return FiniteCrossedComplex(groups, boundaries, actions, name=cx.name)


def _mutation_sites(cx: FiniteCrossedComplex) -> list[tuple]:
    sites: list[tuple] = []
    for n, g in enumerate(cx.groups, start=1):
        if g.order < 2:
            continue
        sites.extend(("mul", n, a, b) for a in range(g.order) for b in range(g.order))
        sites.extend(("inv", n, x) for x in range(g.order))
    for n in range(2, cx.length + 1):
        if cx.boundary(n).target.order >= 2:
            sites.extend(("bd", n, x) for x in range(cx.boundary(n).source.order))
        if cx.action(n).space.order >= 2:
            sites.extend(
                ("act", n, g, e)
                for g in range(cx.groups[0].order)
                for e in range(cx.action(n).space.order))
    return sites


def _mutate(cx: FiniteCrossedComplex, site: tuple, rng: random.Random):
    """Apply a single-entry mutation; returns (complex, expected axiom names)."""
    kind = site[0]
    groups = list(cx.groups)
    if kind == "mul":
        _, n, a, b = site
        g = groups[n - 1]
        old = g.mul[a][b]
        new = rng.choice([v for v in range(g.order) if v != old])
        mul = tuple(
            tuple(new if (i, j) == (a, b) else v for j, v in enumerate(row))
            for i, row in enumerate(g.mul))
        groups[n - 1] = FiniteGroup(g.order, mul, g.inv, g.name)
        return _rewire(tuple(groups), cx), {
            "group-identity", "group-inverse", "group-associativity"}
    if kind == "inv":
        _, n, x = site
        g = groups[n - 1]
        old = g.inv[x]
        new = rng.choice([v for v in range(g.order) if v != old])
        inv = tuple(new if i == x else v for i, v in enumerate(g.inv))
        groups[n - 1] = FiniteGroup(g.order, g.mul, inv, g.name)
        return _rewire(tuple(groups), cx), {"group-inverse"}
    if kind == "bd":
        _, n, x = site
        bd = cx.boundary(n)
        old = bd.image[x]
        # a changed entry can occasionally leave the map a homomorphism
        # (zero vs identity on Z/2), and even a valid complex; only plant
        # values that provably break the hom property
        candidates = [v for v in range(bd.target.order) if v != old]
        rng.shuffle(candidates)
        for new in candidates:
            image = tuple(new if i == x else v for i, v in enumerate(bd.image))
            if hom_violation(GroupHom(bd.source, bd.target, image)) is None:
                continue
            boundaries = tuple(
                GroupHom(b.source, b.target, image if i == n - 2 else b.image)
                for i, b in enumerate(cx.boundaries))
            return (FiniteCrossedComplex(cx.groups, boundaries, cx.actions,
                                         name=cx.name),
                    {"boundary-hom"})
        return None
    _, n, g_idx, e = site
    act = cx.action(n)
    old = act.act[g_idx][e]
    new = rng.choice([v for v in range(act.space.order) if v != old])
    table = tuple(
        tuple(new if (i, j) == (g_idx, e) else v for j, v in enumerate(row))
        for i, row in enumerate(act.act))
    actions = tuple(
        GroupAction(a.actor, a.space, table if i == n - 2 else a.act)
        for i, a in enumerate(cx.actions))
    return FiniteCrossedComplex(cx.groups, cx.boundaries, actions, name=cx.name), {
        "action-bijective"}


def check_mutation_fuzzing() -> CheckResult:
    """Planted single-entry defects are flagged with the right axiom name."""
    rng = random.Random(SEED + 8)
    complexes = [cx for cx in standard_coefficients() if _mutation_sites(cx)]
    bad = []
    for i in range(MUTATIONS):
        cx = complexes[i % len(complexes)]
        planted = None
        while planted is None:
            site = rng.choice(_mutation_sites(cx))
            planted = _mutate(cx, site, rng)
        mutated, expected = planted
        report = validate(mutated)
        if report.ok:
            bad.append(f"#{i} {cx.name} {site}: mutation not detected")
        elif not (report.names() & expected):
            bad.append(f"#{i} {cx.name} {site}: reported {sorted(report.names())}, "
                       f"expected one of {sorted(expected)}")
    details = f"{MUTATIONS} mutations"
    if bad:
        details += "; failures: " + "; ".join(bad[:5])
    return CheckResult(8, "mutation fuzzing names axioms", not bad, details)


def check_thread_determinism() -> CheckResult:
    """Counts, invariants and class partitions agree for 1 and 8 threads."""
    bad = []
    for p, cx in _suite_pairs():
        c1, c8 = count_homs(p, cx, threads=1), count_homs(p, cx, threads=8)
        if c1 != c8:
            bad.append(f"count {p.name} x {cx.name}: {c1} != {c8}")
        i1, i8 = invariant_ia(p, cx, threads=1), invariant_ia(p, cx, threads=8)
        if i1 != i8:
            bad.append(f"invariant {p.name} x {cx.name}")
        homs = enumerate_homs(p, cx)
        if homs and count_homotopies_from(homs[0]) * len(homs) <= EDGE_BUDGET:
            d1 = homotopy_classes(p, cx, threads=1)
            d8 = homotopy_classes(p, cx, threads=8)
            if (d1.sizes != d8.sizes
                    or [m.colours for m in d1.representatives]
                    != [m.colours for m in d8.representatives]):
                bad.append(f"classes {p.name} x {cx.name}")
    details = f"{len(_suite_pairs())} instances"
    if bad:
        details += "; nondeterminism: " + "; ".join(bad)
    return CheckResult(9, "thread-count determinism", not bad, details)


def run_all() -> list[CheckResult]:
    return [
        check_oracle_equivalence(),
        check_decomposition_invariance(),
        check_disk_wedge_counts(),
        check_euler_identity(),
        check_named_values(),
        check_class_counts(),
        check_connection_validity(),
        check_mutation_fuzzing(),
        check_thread_determinism(),
    ]

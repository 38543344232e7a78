"""Acceptance criteria, one PASS/FAIL line each.

Tolerances are pinned here: every comparison is exact integer or tuple
equality, and the runtime ceilings are RUNTIME_LIMITS (seconds).
Run with ``python tests/test_acceptance.py`` to print the lines directly;
under pytest they appear in the terminal summary.
"""

from __future__ import annotations

import random
import time
from collections import Counter

import pytest

from polycrystal import bicrystal as bc
from polycrystal.cartan import CartanType, WeightVector
from polycrystal.diamond import diamond_sum
from polycrystal.extended import (
    E_hat,
    ExtendedElement,
    F_hat,
    eps_hat,
    extended_family,
    select_hat,
    sigma_hat,
    weight_hat,
)
from polycrystal.lattice import make_element, weight
from polycrystal.pbw import extended_pbw_to_polyhedral, parse_pbw, pbw_to_polyhedral, polyhedral_to_pbw
from polycrystal.tableaux import Partition, partial, partial_star
from polycrystal.verify import EnumerationSpec, enumerate_elements, kostant_count, random_extended, run_suite

RUNTIME_LIMITS = {1: 1.0, 6: 120.0, 8: 30.0}
DEPTHS = {"A2": 6, "A3": 5, "B2": 5, "B3": 4, "D4": 4}
CORE_SUITES = ("axioms", "axioms_star", "bicrystal", "diamond_equiv", "membership_dual", "lemmas_A")
EXTENDED_SAMPLES = 200
EXTENDED_PAIRS = 20

RESULTS: dict[int, tuple[bool, str]] = {}

A3 = CartanType.parse("A3")
D4 = CartanType.parse("D4")
B_A3 = (2, 4, 0, 5, 1, 3)
B_D4 = (0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 0)


def P(*parts):
    return Partition(parts)


def _values(x):
    return None if x is None else x.values


def _mismatches(expected: dict, actual) -> list[str]:
    return [f"{k}: want {v}, got {actual(k)}" for k, v in expected.items() if actual(k) != v]


def _record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")


def criterion_1() -> tuple[bool, str]:
    start = time.perf_counter()
    b = make_element(A3, B_A3)
    ops = {
        ("e", 1, False): (1, 4, 0, 5, 1, 3), ("f", 1, False): (2, 4, 0, 5, 1, 4),
        ("e", 2, False): (2, 3, 0, 5, 1, 3), ("f", 2, False): (2, 4, 0, 5, 2, 3),
        ("e", 3, False): (2, 4, 0, 4, 1, 3), ("f", 3, False): (2, 4, 0, 6, 1, 3),
        ("e", 1, True): (2, 4, 0, 5, 1, 2), ("f", 1, True): (2, 4, 0, 5, 1, 4),
        ("e", 2, True): None, ("f", 2, True): (2, 4, 1, 5, 2, 2),
        ("e", 3, True): (2, 3, 0, 4, 2, 3), ("f", 3, True): (2, 4, 0, 6, 1, 3),
    }
    bad = _mismatches(ops, lambda k: _values((bc.f if k[0] == "f" else bc.e)(b, k[1], k[2])))
    bad += _mismatches({"eps_1": 2, "eps*_3": 4}, lambda k: bc.epsilon(b, 1) if k == "eps_1" else bc.epsilon_star(b, 3))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < RUNTIME_LIMITS[1]
    return ok, f"{len(ops) + 2 - len(bad)}/{len(ops) + 2} exact, {elapsed:.3f}s < {RUNTIME_LIMITS[1]}s" + (
        "; " + "; ".join(bad) if bad else ""
    )


def criterion_2() -> tuple[bool, str]:
    b = make_element(D4, B_D4)
    want = {
        ("partial*", 1, 3): 1, ("partial*", 2, 2): 0, ("partial*", 3, 1): -1,
        ("partial*", 2, 4): -1, ("partial*", 3, 2): 0, ("partial*", 3, 3): 1,
        ("partial", 1, 1): 0, ("partial", 2, 1): -1, ("partial", 3, 1): 2,
    }
    bad = _mismatches(want, lambda k: (partial_star if k[0] == "partial*" else partial)(b, k[1], k[2]))
    sums_star = {P(1): 1, P(2): 1, P(3): 0, P(2, 1): 0, P(3, 1): -1, P(3, 2): -1, P(3, 2, 1): 0}
    if bc.sums(b, 3, True) != sums_star:
        bad.append(f"Sigma*_3 = {bc.sums(b, 3, True)}")
    if bc.sums(b, 1, False) != {P(1): 1, P(2): 1, P(3): 2}:
        bad.append(f"Sigma_1 = {bc.sums(b, 1, False)}")
    sel = {(1, False): (P(3), P(3)), (3, True): (P(1), P(2))}
    for (i, star), mm in sel.items():
        r = bc.select(b, i, star)
        if (r.argmin, r.argmax) != mm:
            bad.append(f"selector {i},{star}: {r}")
    ops = {
        ("e", 1, False): (0, 0, 0, 1, 0, 1, 3, 0, 2, 1, 0, 0), ("f", 1, False): (0, 0, 0, 3, 0, 1, 3, 0, 2, 1, 0, 0),
        ("e", 2, False): None, ("f", 2, False): (0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 1, 0),
        ("e", 3, False): (0, 0, 0, 2, 0, 0, 3, 0, 2, 1, 0, 0), ("f", 3, False): (0, 0, 0, 2, 0, 2, 3, 0, 2, 1, 0, 0),
        ("e", 4, False): None, ("f", 4, False): (0, 0, 0, 2, 1, 1, 3, 0, 2, 1, 0, 0),
        ("e", 1, True): None, ("f", 1, True): (0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 0, 1),
        ("e", 2, True): None, ("f", 2, True): (0, 0, 0, 2, 0, 1, 3, 0, 2, 1, 1, 0),
        ("e", 3, True): (0, 0, 0, 2, 0, 1, 2, 0, 2, 0, 1, 0), ("f", 3, True): (0, 0, 0, 2, 0, 1, 3, 0, 2, 2, 0, 0),
        ("e", 4, True): (0, 0, 0, 2, 0, 1, 2, 0, 1, 1, 1, 0), ("f", 4, True): (0, 0, 0, 2, 0, 1, 3, 0, 3, 1, 0, 0),
    }
    bad += _mismatches(ops, lambda k: _values((bc.f if k[0] == "f" else bc.e)(b, k[1], k[2])))
    return not bad, "all D4 values exact" if not bad else "; ".join(bad)


def criterion_3() -> tuple[bool, str]:
    a, d = make_element(A3, B_A3), make_element(D4, B_D4)
    checks = {
        ("A3", (1, 1), False): 2, ("A3", (2, 1), False): -2, ("A3", (3, 1), False): 2,
        ("A3", (1, 3), True): 4, ("A3", (2, 2), True): 0, ("A3", (3, 1), True): -2,
        ("D4", (1, 3), True): 1, ("D4", (2, 2), True): 0, ("D4", (3, 1), True): -1,
        ("D4", (2, 4), True): -1, ("D4", (3, 2), True): 0, ("D4", (3, 3), True): 1,
    }
    bad = []
    for (name, st, star), want in checks.items():
        b = a if name == "A3" else d
        via_diamond = diamond_sum(b, *st, star)
        via_forms = (partial_star if star else partial)(b, *st)
        if not via_diamond == via_forms == want:
            bad.append(f"{name} {st} star={star}: diamond {via_diamond}, forms {via_forms}, want {want}")
    return not bad, f"{len(checks) - len(bad)}/{len(checks)} diamond sums exact" + ("; " + "; ".join(bad) if bad else "")


def criterion_4() -> tuple[bool, str]:
    bad = []
    x = ExtendedElement.of(A3, {0: make_element(A3, B_A3), 1: make_element(A3, (0, 2, 1, 3, 1, 2))})
    sig = [sigma_hat(x, 1, 0, g) for g in extended_family(A3, 1)]
    sel = select_hat(x, 1, 0)
    if sig != [2, 0, 2, 2]:
        bad.append(f"A3 sigma_hat {sig}")
    if (str(sel.least), str(sel.greatest)) != ("(1)", "(1)*"):
        bad.append(f"A3 selection {sel}")
    if E_hat(x, 1, 0) != x.replaced(1, make_element(A3, (0, 2, 1, 3, 1, 3))):
        bad.append("A3 E_hat")
    if F_hat(x, 1, 0) != x.replaced(0, make_element(A3, (2, 4, 0, 5, 1, 4))):
        bad.append("A3 F_hat")
    y = ExtendedElement.of(D4, {0: make_element(D4, B_D4), 1: make_element(D4, (0, 0, 0, 2, 0, 0, 2, 1, 2, 1, 1, 0))})
    sig = [sigma_hat(y, 1, 0, g) for g in extended_family(D4, 1)]
    sel = select_hat(y, 1, 0)
    if sig != [1, 1, 2, 0]:
        bad.append(f"D4 sigma_hat {sig}")
    if (str(sel.least), str(sel.greatest)) != ("(3)", "(3)"):
        bad.append(f"D4 selection {sel}")
    if E_hat(y, 1, 0) != y.replaced(0, make_element(D4, (0, 0, 0, 1, 0, 1, 3, 0, 2, 1, 0, 0))):
        bad.append("D4 E_hat")
    if F_hat(y, 1, 0) != y.replaced(0, make_element(D4, (0, 0, 0, 3, 0, 1, 3, 0, 2, 1, 0, 0))):
        bad.append("D4 F_hat")
    return not bad, "A3 and D4 extended values exact" if not bad else "; ".join(bad)


def criterion_5() -> tuple[bool, str]:
    bad = []
    pairs = [((1, 2, 2, 1, 0, 3), (2, 4, 0, 5, 1, 3)), ((1, 2, 0, 0, 1, 2), (0, 2, 1, 3, 1, 2))]
    for c, b in pairs:
        if pbw_to_polyhedral(parse_pbw(A3, c)).values != b:
            bad.append(f"phi{c}")
        if polyhedral_to_pbw(make_element(A3, b)).printed() != c:
            bad.append(f"phi^-1{b}")
    data = {0: parse_pbw(A3, (1, 2, 2, 1, 0, 3)), 1: parse_pbw(A3, (1, 2, 0, 0, 1, 2))}
    moved = {0: parse_pbw(A3, (1, 2, 2, 1, 0, 4)), 1: data[1]}
    if F_hat(extended_pbw_to_polyhedral(A3, data), 1, 0) != extended_pbw_to_polyhedral(A3, moved):
        bad.append("F_hat does not commute with the slot-wise bijection")
    return not bad, "both directions and commutation exact" if not bad else "; ".join(bad)


def criterion_6() -> tuple[bool, str]:
    start = time.perf_counter()
    failed, cases = [], 0
    for name, depth in DEPTHS.items():
        spec = EnumerationSpec(CartanType.parse(name), depth)
        suites = CORE_SUITES + (("lemmas_BD",) if name in ("B3", "D4") else ())
        for suite in suites:
            report = run_suite(suite, spec, seed=0)
            cases += report.cases
            if not report.passed:
                failed.append(f"{suite}@{name}: {report.violations[0]}")
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed <= RUNTIME_LIMITS[6]
    return ok, f"{cases} checks, {len(failed)} failing suites, {elapsed:.1f}s <= {RUNTIME_LIMITS[6]}s" + (
        "; " + "; ".join(failed) if failed else ""
    )


def criterion_7() -> tuple[bool, str]:
    bad, weights = [], 0
    for name, depth in DEPTHS.items():
        c = CartanType.parse(name)
        counts = Counter(tuple(-v for v in weight(b).coeffs) for b in enumerate_elements(EnumerationSpec(c, depth)))
        for mu in _weights_up_to(c.rank, depth):
            weights += 1
            if counts.get(mu, 0) != kostant_count(c, mu):
                bad.append(f"{name} {mu}: {counts.get(mu, 0)} vs {kostant_count(c, mu)}")
    return not bad, f"{weights - len(bad)}/{weights} weights exact" + ("; " + "; ".join(bad[:5]) if bad else "")


def _weights_up_to(rank: int, depth: int):
    if rank == 0:
        yield ()
        return
    for first in range(depth + 1):
        for rest in _weights_up_to(rank - 1, depth - first):
            yield (first,) + rest


def criterion_8() -> tuple[bool, str]:
    start = time.perf_counter()
    bad, checks = [], 0
    for name in ("A3", "B3", "D4"):
        c = CartanType.parse(name)
        rng = random.Random(2024)
        for _ in range(EXTENDED_SAMPLES):
            x = random_extended(c, rng)
            for _ in range(EXTENDED_PAIRS):
                i, k = rng.randint(1, c.rank), rng.randint(-2, 2)
                fx, ex = F_hat(x, i, k), E_hat(x, i, k)
                shift = WeightVector.simple(c.rank, i).scaled(1 if k % 2 == 0 else -1)
                conds = (
                    E_hat(fx, i, k) == x,
                    F_hat(ex, i, k) == x,
                    eps_hat(fx, i, k) == eps_hat(x, i, k) + 1,
                    (weight_hat(fx) - weight_hat(x)) == -shift,
                )
                checks += len(conds)
                if not all(conds):
                    bad.append(f"{name} {x.display(False)} (i,k)=({i},{k}) {conds}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= RUNTIME_LIMITS[8]
    return ok, f"{checks} checks, {len(bad)} violations, {elapsed:.1f}s <= {RUNTIME_LIMITS[8]}s" + (
        "; " + "; ".join(bad[:3]) if bad else ""
    )


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_acceptance_criterion(n):
    ok, detail = CRITERIA[n]()
    _record(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    import sys

    results = [CRITERIA[n]() for n in sorted(CRITERIA)]
    for n, (ok, detail) in zip(sorted(CRITERIA), results):
        _record(n, ok, detail)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

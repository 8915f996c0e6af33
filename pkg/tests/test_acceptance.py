"""Acceptance criteria 1-10; each test records one PASS/FAIL line in the terminal summary."""

import functools
import math
import random

import numpy as np
import pytest

from mindeg.degeneration import (
    Case,
    _box_dominant,
    bruteforce_covers,
    classify_pair,
    enumerate_minimal_degenerations_below,
    levi_reduce,
)
from mindeg.roots import build_root_datum, dual_type, orbit_size, type_tables
from mindeg.singularity import (
    TORSION_PRIMES,
    codimension,
    conjecture_audit,
    decomposition_profile,
    equivalence_obstruction,
    ic_polynomial,
    minimal_orbit_torsion_primes,
    nonsmoothness_certificate,
    standard_singularity,
)
from mindeg.smith import primes_upto, smith_normal_form
from mindeg.weyl_module import (
    ac_basis_monomials,
    ac_weights,
    decomposition_number_ac,
    elementary_divisors,
    freudenthal_multiplicity,
    gram_matrix,
    linkage_bound,
    shapovalov_pair,
    weyl_character_support,
    weyl_dimension,
)

from conftest import ORACLE_TYPES, dominant_box, poincare_ic_oracle

pytestmark = pytest.mark.acceptance

PRIMES_100 = primes_upto(100)


def prime_factors(n):
    return {p for p in PRIMES_100 if n % p == 0}


@functools.lru_cache(maxsize=None)
def oracle_degenerations():
    """Every degeneration found in criterion 3's sweep."""
    out = []
    for label in ORACLE_TYPES:
        datum = build_root_datum(label)
        for lam in dominant_box(datum, 2):
            out.extend(enumerate_minimal_degenerations_below(lam))
    return tuple(out)


def test_criterion_01_ac_reproduction(acceptance_report):
    bad = []
    for n in range(2, 9):
        lam, _ = ac_weights(n)
        g = gram_matrix(lam, ac_basis_monomials(n))
        expected = tuple(tuple(3 if i == j == n - 1 else 2 if i == j else int(abs(i - j) == 1)
                               for j in range(n)) for i in range(n))
        if g.entries != expected:
            bad.append((n, "matrix"))
        if elementary_divisors(g).divisors != (1,) * (n - 1) + (2 * n + 1,):
            bad.append((n, "divisors"))
        for ell in PRIMES_100:
            if decomposition_number_ac(n, ell) != int((2 * n + 1) % ell == 0):
                bad.append((n, ell))
    assert acceptance_report(1, "ac_n Gram matrix, divisors, decomposition numbers", not bad, f"n=2..8, {bad or 'exact'}")
    assert not bad


def test_criterion_02_orbits_and_multiplicities(acceptance_report):
    bad = []
    for n in range(2, 9):
        lam, mu = ac_weights(n)
        if orbit_size(lam) != n * 2**n or orbit_size(mu) != 2**n:
            bad.append((n, "orbit"))
        if freudenthal_multiplicity(lam, mu) != n:
            bad.append((n, "mult"))
        _, dim = weyl_character_support(lam)
        if dim != weyl_dimension(lam):
            bad.append((n, "dim"))
    assert acceptance_report(2, "orbit sizes, multiplicity n, Weyl dimension", not bad, "n=2..8")
    assert not bad


def test_criterion_03_stembridge_oracle(acceptance_report):
    pairs = disagreements = 0
    for label in ORACLE_TYPES:
        datum = build_root_datum(label)
        cartan = np.array(datum.cartan, dtype=np.int64)
        for lam in dominant_box(datum, 2):
            covers = bruteforce_covers(lam)
            below = {tuple(int(x) for x in v) for v in np.array(lam.coeffs) - _box_dominant(lam) @ cartan}
            # also dominant weights not below lam (incomparable or above)
            others = {mu.coeffs for mu in dominant_box(datum, 2)}
            for mu in sorted(below | others):
                pairs += 1
                got = classify_pair(lam, datum.weight(*mu)) is not None
                if got != (mu in covers):
                    disagreements += 1
    ok = disagreements == 0
    assert acceptance_report(3, "Stembridge classifier vs brute-force poset", ok,
                             f"{pairs} pairs, {disagreements} disagreements")
    assert ok


def _expected_ic(d):
    if d.case is Case.SIMPLE or d.case is Case.CG2:
        return (1,)
    if d.case is Case.SHORT_DOMINANT:
        letter, r = dual_type(d.levi_type[0], int(d.levi_type[1:]))
        return poincare_ic_oracle(f"{letter}{r}")
    if d.case is Case.AC:
        # "as for the minimal singularity a_n"
        return poincare_ic_oracle(f"A{d.n}")
    return (1, 1)


def _expected_codim(d):
    if d.case is Case.SIMPLE:
        return 2
    if d.case is Case.SHORT_DOMINANT:
        letter, r = dual_type(d.levi_type[0], int(d.levi_type[1:]))
        return 2 * type_tables(f"{letter}{r}").dual_coxeter - 2
    if d.case is Case.AC:
        return 2 * d.n
    return 4


def test_criterion_04_invariant_table(acceptance_report):
    degs = oracle_degenerations()
    bad = [d for d in degs
           if codimension(d) != _expected_codim(d) or 2 * d.beta.height != _expected_codim(d)
           or ic_polynomial(d).coeffs != _expected_ic(d)]
    cases = sorted({d.case.value for d in degs})
    ok = not bad and len(cases) == 5
    assert acceptance_report(4, "codimension and IC polynomial per case", ok,
                             f"{len(degs)} degenerations, cases {cases}, {len(bad)} mismatches")
    assert ok


def _profile_matches(inv, modulus):
    return all(inv.profile(p) == int(modulus % p == 0) for p in PRIMES_100)


def test_criterion_05_profiles(acceptance_report):
    bad = []
    for n in range(1, 9):
        if not _profile_matches(standard_singularity(f"a{n}"), n + 1):
            bad.append(f"a{n}")
    for n in range(2, 9):
        if not _profile_matches(standard_singularity(f"ac{n}"), 2 * n + 1):
            bad.append(f"ac{n}")
    g2 = build_root_datum("G2")
    g2_min = decomposition_profile(classify_pair(g2.weight(1, 0), g2.zero))
    if [p for p in PRIMES_100 if g2_min(p)] != [2]:
        bad.append("min G2")
    for name, primes in (("ag2", [7]), ("cg2", [3]), ("c2", [2])):
        if [p for p in PRIMES_100 if standard_singularity(name).profile(p)] != primes:
            bad.append(name)
    assert acceptance_report(5, "decomposition profiles of named singularities", not bad, f"mismatches {bad}")
    assert not bad


def test_criterion_06_nonequivalence(acceptance_report):
    bad = []
    for n in range(2, 9):
        ob = equivalence_obstruction(standard_singularity(f"a{n}"), standard_singularity(f"ac{n}"))
        if math.gcd(n + 1, 2 * n + 1) != 1:
            bad.append(("coprime", n))
        if ob is None or ob.kind != "modular" or not prime_factors(n + 1) <= set(ob.differing_primes) \
                or set(ob.differing_primes) != prime_factors(n + 1) | prime_factors(2 * n + 1):
            bad.append(("a/ac", n))
    expected = {("a2", "ac2"): {3, 5}, ("a2", "ag2"): {3, 7}, ("ac2", "ag2"): {5, 7}, ("c2", "cg2"): {2, 3}}
    for (left, right), primes in expected.items():
        ob = equivalence_obstruction(standard_singularity(left), standard_singularity(right))
        if ob is None or ob.kind != "modular" or set(ob.differing_primes) != primes or ob.prime != min(primes):
            bad.append((left, right))
    assert acceptance_report(6, "modular non-equivalence obstructions", not bad, f"failures {bad}")
    assert not bad


def test_criterion_07_nonsmooth_totality(acceptance_report):
    degs = oracle_degenerations()
    failures = 0
    for d in degs:
        try:
            w = nonsmoothness_certificate(d)
            if w.kind == "modular" and decomposition_profile(d)(w.prime) == 0:
                failures += 1
        except AssertionError:
            failures += 1
    e8 = build_root_datum("E8")
    theta = e8.weight(*e8.root_to_weight(e8.positive_roots[-1]))
    e8_w = nonsmoothness_certificate(classify_pair(theta, e8.zero))
    ok = failures == 0 and e8_w.kind == "rational" and theta.coeffs == (0,) * 7 + (1,)
    assert acceptance_report(7, "non-smoothness certificates", ok,
                             f"{len(degs) - failures}/{len(degs)} certified, E8 witness {e8_w.kind}")
    assert ok


def test_criterion_08_linkage(acceptance_report):
    degs = oracle_degenerations()
    bad = [d for d in degs for p in primes_upto(50)
           if decomposition_profile(d)(p) and linkage_bound(d.lam, d.mu) % p]
    ac = [linkage_bound(*ac_weights(n)) == 2 * n + 1 for n in range(2, 9)]
    ac += [linkage_bound(d.lam, d.mu) == 2 * d.n + 1 for d in degs if d.case is Case.AC]
    ok = not bad and all(ac)
    assert acceptance_report(8, "strong-linkage divisibility", ok, f"{len(degs)} degenerations, {len(bad)} violations")
    assert ok


def test_criterion_09_torsion_audit(acceptance_report):
    verbatim = {"A": set(), "B": {2}, "C": {2}, "D": {2}, "F4": {2},
                "E6": {2, 3}, "E7": {2, 3}, "E8": {2, 3, 5}, "G2": {3}}
    labels = [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)] \
        + [f"C{n}" for n in range(2, 9)] + [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8", "F4", "G2"]
    table_ok = {k: set(v) for k, v in TORSION_PRIMES.items()} == verbatim
    audit = {label: conjecture_audit(label) and minimal_orbit_torsion_primes(label) <= type_tables(label).bad_primes
             for label in labels}
    ok = table_ok and all(audit.values())
    assert acceptance_report(9, "torsion table contained in bad primes", ok, f"{len(labels)} types")
    assert ok


def test_criterion_10_property_suites(acceptance_report):
    rng = random.Random(10)
    failures = []
    # Shapovalov symmetry and weight orthogonality
    types = [build_root_datum(t) for t in ("A3", "B3", "C3", "G2", "B4")]
    for _ in range(500):
        datum = rng.choice(types)
        lam = datum.weight(*(rng.randint(0, 3) for _ in range(datum.rank)))
        left = tuple(rng.randrange(datum.rank) for _ in range(rng.randint(0, 6)))
        if rng.random() < 0.5:
            right = tuple(rng.sample(left, len(left)))
        else:
            right = tuple(rng.randrange(datum.rank) for _ in range(rng.randint(0, 6)))
        a, b = shapovalov_pair(left, right, lam), shapovalov_pair(right, left, lam)
        if a != b or (sorted(left) != sorted(right) and a != 0):
            failures.append(("shapovalov", left, right))
    # Smith form under unimodular changes of basis
    for _ in range(200):
        m = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        u = np.eye(4, dtype=np.int64)
        v = np.eye(4, dtype=np.int64)
        for _ in range(8):
            i, j = rng.sample(range(4), 2)
            k = rng.randint(-2, 2)
            u[i] += k * u[j]
            v[:, i] += rng.randint(-2, 2) * v[:, j]
        moved = (u @ np.array(m) @ v).tolist()
        if smith_normal_form(moved) != smith_normal_form(m):
            failures.append(("smith", m))
    # Levi invariance on degenerations with proper support
    proper = [d for d in oracle_degenerations() if len(d.support) < d.datum.rank]
    for d in proper:
        _, lam_i, mu_i = levi_reduce(d)
        dd = classify_pair(lam_i, mu_i)
        if dd is None or dd.case is not d.case or decomposition_profile(dd) != decomposition_profile(d):
            failures.append(("levi", str(d)))
    ok = not failures
    assert acceptance_report(10, "property suites", ok,
                             f"500 pairings, 200 matrices, {len(proper)} Levi reductions, {len(failures)} failures")
    assert ok

import json
import pytest

from mindeg.degeneration import classify_pair, enumerate_minimal_degenerations_below
from mindeg.roots import DomainError, build_root_datum, dual_type, type_tables
from mindeg.singularity import (
    TORSION_PRIMES,
    DecompositionProfile,
    ICPolynomial,
    Kind,
    classify_singularity,
    codimension,
    conjecture_audit,
    decomposition_profile,
    equivalence_obstruction,
    ic_polynomial,
    invariants,
    minimal_orbit_torsion_primes,
    nonsmoothness_certificate,
    standard_singularity,
    table_codimension,
)

from conftest import dominant_box, poincare_ic_oracle

IRREDUCIBLE = [f"A{n}" for n in range(1, 6)] + [f"B{n}" for n in range(2, 6)] \
    + [f"C{n}" for n in range(3, 6)] + [f"D{n}" for n in range(4, 7)] + ["E6", "E7", "E8", "F4", "G2"]


def minimal_pair(label):
    """Case-2 pair on full support: lam = short dominant root, mu = 0."""
    datum = build_root_datum(label)
    from mindeg.degeneration import short_dominant_root

    beta = short_dominant_root(datum, range(datum.rank))
    d = classify_pair(datum.weight(*datum.root_to_weight(beta.coeffs)), datum.zero)
    assert d is not None
    return d


@pytest.mark.parametrize("label", IRREDUCIBLE)
def test_minimal_ic_against_poincare_oracle(label):
    d = minimal_pair(label)
    letter, r = dual_type(label[0], int(label[1:]))
    assert ic_polynomial(d).coeffs == poincare_ic_oracle(f"{letter}{r}")


@pytest.mark.parametrize("label", IRREDUCIBLE)
def test_minimal_codimension(label):
    d = minimal_pair(label)
    letter, r = dual_type(label[0], int(label[1:]))
    assert codimension(d) == 2 * type_tables(f"{letter}{r}").dual_coxeter - 2
    assert ic_polynomial(d).degree < codimension(d) // 2


def test_classify_singularity_examples():
    a1 = build_root_datum("A1")
    s = classify_singularity(classify_pair(a1.weight(3), a1.weight(1)))
    assert s.kind is Kind.KLEINIAN and s.m == 2 and s.name == "A_2"
    s = classify_singularity(minimal_pair("G2"))
    assert s.kind is Kind.MINIMAL and s.type_label == "G2"
    s = classify_singularity(minimal_pair("B3"))
    assert s.type_label == "C3" and s.name == "c_3"
    b4 = build_root_datum("B4")
    s = classify_singularity(classify_pair(b4.weight(1, 0, 0, 1), b4.weight(0, 0, 0, 1)))
    assert s.kind is Kind.AC and s.n == 4
    assert json.loads(json.dumps(s.to_json())) == {"kind": "quasi_minimal_ac", "name": "ac_4", "n": 4}


def test_codimension_examples():
    a1 = build_root_datum("A1")
    assert codimension(classify_pair(a1.weight(3), a1.weight(1))) == 2
    for n in range(2, 9):
        datum = build_root_datum(f"B{n}")
        d = classify_pair(datum.fundamental(0) + datum.fundamental(n - 1), datum.fundamental(n - 1))
        assert codimension(d) == 2 * n == table_codimension(d)
    assert codimension(minimal_pair("G2")) == 6


def test_ic_examples():
    g2 = build_root_datum("G2")
    assert ic_polynomial(classify_pair(g2.weight(1, 1), g2.weight(2, 0))).coeffs == (1, 1)
    assert ic_polynomial(classify_pair(g2.weight(0, 1), g2.weight(1, 0))).coeffs == (1,)
    for n in range(1, 7):
        assert ic_polynomial(minimal_pair(f"A{n}")).coeffs == (1,) * n
    # ac_n shares the stalk of a_n
    for n in range(2, 7):
        b = build_root_datum(f"B{n}")
        d = classify_pair(b.fundamental(0) + b.fundamental(n - 1), b.fundamental(n - 1))
        assert ic_polynomial(d) == ic_polynomial(minimal_pair(f"A{n}"))
    assert ic_polynomial(minimal_pair("B2")).coeffs == (1,)
    assert str(ICPolynomial((1, 1, 0, 2))) == "1 + q + 2q^3"


def test_profile_examples():
    a1 = build_root_datum("A1")
    p = decomposition_profile(classify_pair(a1.weight(3), a1.weight(1)))
    assert p.nonzero_primes(100) == [3]
    assert decomposition_profile(minimal_pair("G2")).nonzero_primes(100) == [2]
    b2 = build_root_datum("B2")
    p = decomposition_profile(classify_pair(b2.weight(1, 1), b2.weight(0, 1)))
    assert p.nonzero_primes(100) == [5]
    assert decomposition_profile(minimal_pair("E8")).is_zero()
    d4 = decomposition_profile(minimal_pair("D4"))
    assert d4(2) == 2 and d4(3) == 0


def test_profile_semantics():
    p = DecompositionProfile((1, 12, 4))
    assert p.moduli == (4, 12)
    assert p(2) == 2 and p(3) == 1 and p(5) == 0
    assert p.support_primes() == [2, 3]
    assert DecompositionProfile(()).is_zero() and DecompositionProfile((1,)).is_zero()
    with pytest.raises(DomainError):
        DecompositionProfile((0,))


def test_certificates():
    for n in range(2, 9):
        b = build_root_datum(f"B{n}")
        d = classify_pair(b.fundamental(0) + b.fundamental(n - 1), b.fundamental(n - 1))
        w = nonsmoothness_certificate(d)
        smallest = min(p for p in range(2, 2 * n + 2) if (2 * n + 1) % p == 0)
        assert w.kind == "modular" and w.prime == smallest
    g2 = build_root_datum("G2")
    assert nonsmoothness_certificate(classify_pair(g2.weight(1, 1), g2.weight(2, 0))).prime == 7
    w = nonsmoothness_certificate(minimal_pair("E8"))
    assert w.kind == "rational" and w.prime is None
    assert len([c for c in ic_polynomial(minimal_pair("E8")).coeffs if c]) == 8
    assert w.to_json() == {"witness_kind": "rational"}


def test_obstructions():
    for n in range(2, 9):
        ob = equivalence_obstruction(standard_singularity(f"a{n}"), standard_singularity(f"ac{n}"))
        assert ob.kind == "modular"
        expected = sorted({p for p in range(2, 2 * n + 2)
                           if all(p % k for k in range(2, p)) and ((n + 1) % p == 0 or (2 * n + 1) % p == 0)})
        assert list(ob.differing_primes) == expected
    ob = equivalence_obstruction(standard_singularity("c2"), standard_singularity("cg2"))
    assert ob.kind == "modular" and ob.prime == 2 and ob.differing_primes == (2, 3)
    assert equivalence_obstruction(standard_singularity("a2"), standard_singularity("a2")) is None
    ob = equivalence_obstruction(standard_singularity("a3"), standard_singularity("a2"))
    assert ob.kind == "rational"


def test_standard_singularity_names():
    assert standard_singularity("an:4") == standard_singularity("a4")
    assert standard_singularity("acn:3") == standard_singularity("ac3")
    assert standard_singularity("a1").singularity.name == "A_1"
    assert standard_singularity("c2").singularity.name == "c_2"
    for bad in ["x3", "ac1", "a0", "an:x", "zz:3"]:
        with pytest.raises(DomainError):
            standard_singularity(bad)


def test_torsion_table():
    assert TORSION_PRIMES == {
        "A": frozenset(), "B": {2}, "C": {2}, "D": {2}, "E6": {2, 3}, "E7": {2, 3},
        "E8": {2, 3, 5}, "F4": {2}, "G2": {3},
    }
    assert minimal_orbit_torsion_primes("E8") == {2, 3, 5}
    assert minimal_orbit_torsion_primes("A5") == frozenset()
    assert minimal_orbit_torsion_primes("G2") == {3} <= type_tables("G2").bad_primes
    for label in IRREDUCIBLE:
        assert conjecture_audit(label)


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2", "F4", "B4", "C4", "A5", "D5", "E6"])
def test_enumerated_properties(label):
    datum = build_root_datum(label)
    top = 2 if datum.rank <= 4 else 1
    for lam in dominant_box(datum, top):
        for d in enumerate_minimal_degenerations_below(lam):
            inv = invariants(d)
            ic = inv.ic
            assert ic.coeffs[0] == 1 and ic(1) == sum(ic.coeffs)
            assert ic.degree < codimension(d) // 2
            for p in range(2, 101):
                if inv.profile(p):
                    assert any(m % p == 0 for m in inv.profile.moduli)
            nonsmoothness_certificate(d)

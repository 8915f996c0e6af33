"""Invariants of minimal degenerations in the affine Grassmannian.

Each degeneration gets a singularity class, a codimension, the rational stalk
polynomial ``m_mu(lam, q)`` and a mod-``ell`` decomposition-number profile.
Profiles are symbolic: ``d(ell) = #{N in moduli : ell | N}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .degeneration import Case, MinimalDegeneration, levi_datum
from .roots import (
    DomainError,
    RootDatum,
    build_root_datum,
    dual_type,
    identify_subsystem,
    type_tables,
)
from .smith import is_prime, primes_upto, smith_normal_form

__all__ = [
    "Kind",
    "SingularityClass",
    "ICPolynomial",
    "DecompositionProfile",
    "NonSmoothnessWitness",
    "Obstruction",
    "Invariants",
    "classify_singularity",
    "codimension",
    "table_codimension",
    "ic_polynomial",
    "decomposition_profile",
    "nonsmoothness_certificate",
    "equivalence_obstruction",
    "invariants",
    "standard_singularity",
    "TORSION_PRIMES",
    "minimal_orbit_torsion_primes",
    "conjecture_audit",
]


class Kind(enum.Enum):
    KLEINIAN = "kleinian"
    MINIMAL = "minimal"
    AC = "quasi_minimal_ac"
    AG2 = "quasi_minimal_ag2"
    CG2 = "quasi_minimal_cg2"


@dataclass(frozen=True)
class SingularityClass:
    kind: Kind
    m: int | None = None  # Kleinian A_m
    type_label: str | None = None  # Minimal: type of Phi_I^vee
    n: int | None = None  # ac_n

    @property
    def name(self) -> str:
        if self.kind is Kind.KLEINIAN:
            return f"A_{self.m}"
        if self.kind is Kind.MINIMAL:
            return f"{self.type_label[0].lower()}_{self.type_label[1:]}"
        if self.kind is Kind.AC:
            return f"ac_{self.n}"
        return "ag_2" if self.kind is Kind.AG2 else "cg_2"

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "name": self.name}
        if self.m is not None:
            out["m"] = self.m
        if self.type_label is not None:
            out["type"] = self.type_label
        if self.n is not None:
            out["n"] = self.n
        return out


@dataclass(frozen=True)
class ICPolynomial:
    """Coefficients of ``m_mu(lam, q)``, constant term first."""

    coeffs: tuple[int, ...]

    @classmethod
    def from_exponents(cls, powers) -> "ICPolynomial":
        powers = list(powers)
        c = [0] * (max(powers) + 1)
        for p in powers:
            c[p] += 1
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        return sum(c * q**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mon = "1" if i == 0 else ("q" if i == 1 else f"q^{i}")
                terms.append(mon if c == 1 else f"{c}{mon if i else ''}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class DecompositionProfile:
    """``ell -> d_{lam mu}`` encoded by moduli: ``d(ell) = #{N : ell | N}``.

    The empty tuple (or all moduli equal to 1) is the identically-zero profile.
    """

    moduli: tuple[int, ...]

    def __post_init__(self):
        mods = tuple(sorted(int(m) for m in self.moduli if m != 1))
        if any(m <= 0 for m in mods):
            raise DomainError(f"profile moduli must be positive, got {self.moduli}")
        object.__setattr__(self, "moduli", mods)

    def __call__(self, ell: int) -> int:
        return sum(1 for n in self.moduli if n % ell == 0)

    def is_zero(self) -> bool:
        return not self.moduli

    def support_primes(self) -> list[int]:
        """Primes with ``d(ell) != 0``."""
        out = set()
        for n in self.moduli:
            p = 2
            while n > 1:
                if n % p == 0:
                    out.add(p)
                    n //= p
                else:
                    p += 1
        return sorted(out)

    def nonzero_primes(self, upto: int) -> list[int]:
        return [p for p in primes_upto(upto) if self(p)]


@dataclass(frozen=True)
class NonSmoothnessWitness:
    kind: str  # "modular" or "rational"
    prime: int | None = None

    def to_json(self) -> dict:
        out = {"witness_kind": self.kind}
        if self.prime is not None:
            out["prime"] = self.prime
        return out


@dataclass(frozen=True)
class Obstruction:
    kind: str  # "rational" or "modular"
    prime: int | None = None
    differing_primes: tuple[int, ...] = field(default=())


@dataclass(frozen=True)
class Invariants:
    singularity: SingularityClass
    ic: ICPolynomial
    profile: DecompositionProfile


# ---------------------------------------------------------------------------

def _levi_type(d: MinimalDegeneration) -> tuple[str, int]:
    ((letter, r, _),) = identify_subsystem(d.datum, d.support)
    return letter, r


def classify_singularity(d: MinimalDegeneration) -> SingularityClass:
    if d.case is Case.SIMPLE:
        (i,) = d.support
        return SingularityClass(Kind.KLEINIAN, m=d.lam.coeffs[i] - 1)
    if d.case is Case.SHORT_DOMINANT:
        letter, r = dual_type(*_levi_type(d))
        return SingularityClass(Kind.MINIMAL, type_label=f"{letter}{r}")
    if d.case is Case.AC:
        return SingularityClass(Kind.AC, n=d.n)
    return SingularityClass(Kind.AG2 if d.case is Case.AG2 else Kind.CG2)


def table_codimension(d: MinimalDegeneration) -> int:
    """Per-case codimension: 2, ``2 h^vee(Phi_I^vee) - 2``, ``2n``, 4, 4."""
    if d.case is Case.SIMPLE:
        return 2
    if d.case is Case.SHORT_DOMINANT:
        letter, r = dual_type(*_levi_type(d))
        return 2 * type_tables(f"{letter}{r}").dual_coxeter - 2
    if d.case is Case.AC:
        return 2 * d.n
    return 4


def codimension(d: MinimalDegeneration) -> int:
    """``2 <beta, rho^vee>``, checked against :func:`table_codimension`."""
    value = 2 * d.beta.height
    expected = table_codimension(d)
    if value != expected:
        raise AssertionError(f"codimension mismatch for {d}: 2<beta,rho^vee>={value}, table={expected}")
    return value


def _minimal_ic(letter: str, r: int, datum: RootDatum, support) -> ICPolynomial:
    exps = type_tables(f"{letter}{r}").exponents
    lengths = {datum.symmetrizers[i] for i in support}
    if len(lengths) == 1:
        t = r
    else:
        # long simple roots of Phi_I^vee = short simple roots of Phi_I
        lo = min(lengths)
        t = sum(1 for i in support if datum.symmetrizers[i] == lo)
    return ICPolynomial.from_exponents(e - 1 for e in sorted(exps)[:t])


def ic_polynomial(d: MinimalDegeneration) -> ICPolynomial:
    if d.case is Case.SHORT_DOMINANT:
        return _minimal_ic(*_levi_type(d), d.datum, d.support)
    if d.case is Case.AC:
        return ICPolynomial((1,) * d.n)
    if d.case is Case.AG2:
        return ICPolynomial((1, 1))
    return ICPolynomial((1,))


def decomposition_profile(d: MinimalDegeneration) -> DecompositionProfile:
    if d.case is Case.SIMPLE:
        (i,) = d.support
        return DecompositionProfile((d.lam.coeffs[i],))
    if d.case is Case.SHORT_DOMINANT:
        lengths = [d.datum.symmetrizers[i] for i in d.support]
        short = [i for i, l in zip(d.support, lengths) if l == min(lengths)]
        sub, _ = levi_datum(d.datum, short)
        return DecompositionProfile(smith_normal_form(sub.cartan).divisors)
    if d.case is Case.AC:
        return DecompositionProfile((2 * d.n + 1,))
    if d.case is Case.AG2:
        return DecompositionProfile((7,))
    return DecompositionProfile((3,))


def invariants(d: MinimalDegeneration) -> Invariants:
    return Invariants(classify_singularity(d), ic_polynomial(d), decomposition_profile(d))


def nonsmoothness_certificate(d: MinimalDegeneration) -> NonSmoothnessWitness:
    """A prime with nonzero decomposition number, or the rational stalk as fallback."""
    prof = decomposition_profile(d)
    primes = prof.support_primes()
    if primes:
        return NonSmoothnessWitness("modular", primes[0])
    ic = ic_polynomial(d)
    if ic.coeffs == (1,):
        raise AssertionError(f"{d}: zero profile and trivial stalk, no witness of non-smoothness")
    return NonSmoothnessWitness("rational")


def equivalence_obstruction(a: Invariants, b: Invariants) -> Obstruction | None:
    """Invariant that differs between two singularities; ``None`` proves nothing."""
    if a.ic != b.ic:
        return Obstruction("rational")
    cands = sorted(set(a.profile.support_primes()) | set(b.profile.support_primes()))
    diff = tuple(p for p in cands if a.profile(p) != b.profile(p))
    if diff:
        return Obstruction("modular", diff[0], diff)
    return None


# ---------------------------------------------------------------------------
# Named singularities

def _realise(spec: str, lam: tuple[int, ...], mu: tuple[int, ...]) -> Invariants:
    from .degeneration import classify_pair

    datum = build_root_datum(spec)
    d = classify_pair(datum.weight(lam), datum.weight(mu))
    assert d is not None, (spec, lam, mu)
    return invariants(d)


def standard_singularity(name: str) -> Invariants:
    """Invariants of ``a2``, ``ac2``, ``ag2``, ``c2``, ``cg2``, ``an:<n>``, ``acn:<n>``.

    Each is realised by a concrete degeneration and run through the pipeline.
    """
    key = name.strip().lower()
    if ":" in key:
        head, _, tail = key.partition(":")
        try:
            n = int(tail)
        except ValueError as exc:
            raise DomainError(f"bad rank in {name!r}") from exc
        if head == "an":
            key = f"a{n}"
        elif head == "acn":
            key = f"ac{n}"
        else:
            raise DomainError(f"unknown singularity family {head!r}")
    if key == "ag2":
        return _realise("G2", (1, 1), (2, 0))
    if key == "cg2":
        return _realise("G2", (0, 1), (1, 0))
    if key == "c2":
        return _realise("B2", (1, 0), (0, 0))
    if key.startswith("ac") and key[2:].isdigit():
        n = int(key[2:])
        if n < 2:
            raise DomainError("ac_n needs n >= 2")
        return _realise(f"B{n}", (1,) + (0,) * (n - 2) + (1,), (0,) * (n - 1) + (1,))
    if key.startswith("a") and key[1:].isdigit():
        n = int(key[1:])
        if n < 1:
            raise DomainError("a_n needs n >= 1")
        if n == 1:
            return _realise("A1", (2,), (0,))
        return _realise(f"A{n}", (1,) + (0,) * (n - 2) + (1,), (0,) * n)
    raise DomainError(f"unknown singularity name {name!r}")


# ---------------------------------------------------------------------------
# Torsion in the stalks of minimal singularities (imported table)

TORSION_PRIMES: dict[str, frozenset[int]] = {
    "A": frozenset(),
    "B": frozenset({2}),
    "C": frozenset({2}),
    "D": frozenset({2}),
    "E6": frozenset({2, 3}),
    "E7": frozenset({2, 3}),
    "E8": frozenset({2, 3, 5}),
    "F4": frozenset({2}),
    "G2": frozenset({3}),
}


def minimal_orbit_torsion_primes(label: str) -> frozenset[int]:
    t = type_tables(label)
    key = t.letter if t.letter in "ABCD" else f"{t.letter}{t.rank}"
    return TORSION_PRIMES[key]


def conjecture_audit(label: str) -> bool:
    """Torsion primes of the minimal singularity are all bad for the type."""
    torsion = minimal_orbit_torsion_primes(label)
    assert all(is_prime(p) for p in torsion)
    return torsion <= type_tables(label).bad_primes

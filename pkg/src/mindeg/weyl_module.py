"""Weyl modules: Freudenthal multiplicities, contravariant forms, Gram matrices.

Monomials are tuples of 0-based simple-root indices ``(i_1, ..., i_k)`` standing
for ``f_{i_1} ... f_{i_k} v`` with ``v`` the highest weight vector, ``(v|v) = 1``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .roots import (
    DomainError,
    RootDatum,
    Weight,
    build_root_datum,
    dominance_leq,
    dominant_weights_below,
    dominate,
    orbit_size,
    pairing,
)
from .smith import SmithForm, is_prime, rank_mod_p, rank_over_q, smith_normal_form

__all__ = [
    "Monomial",
    "GramMatrix",
    "SpanError",
    "freudenthal_multiplicity",
    "weyl_character_support",
    "weyl_dimension",
    "shapovalov_pair",
    "ac_basis_monomials",
    "ac_weights",
    "gram_matrix",
    "elementary_divisors",
    "decomposition_number_ac",
    "linkage_bound",
]

Monomial = tuple[int, ...]


class SpanError(DomainError):
    """The monomials do not span the weight space."""


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[int, ...], ...]
    lam: Weight
    mu: Weight
    monomials: tuple[Monomial, ...]

    @property
    def size(self) -> int:
        return len(self.entries)


# ---------------------------------------------------------------------------
# Freudenthal

@lru_cache(maxsize=256)
def _multiplicities(datum: RootDatum, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Dominant weight multiplicities of ``V(lam)``, filled from the top down."""
    top = Weight(lam, datum)
    rho = (1,) * datum.rank
    lam_rho = tuple(a + 1 for a in lam)
    norm_top = datum.weight_form(lam_rho, lam_rho)
    roots = [(r, datum.root_to_weight(r)) for r in datum.positive_roots]
    mult: dict[tuple[int, ...], int] = {}
    # dominant_weights_below sorts by depth, so all higher weights come first
    for nu in dominant_weights_below(top):
        w = nu.coeffs
        if w == lam:
            mult[w] = 1
            continue
        total = Fraction(0)
        for r, rw in roots:
            k = 1
            while True:
                x = tuple(a + k * b for a, b in zip(w, rw))
                m = mult.get(dominate(x, datum), 0)
                if m == 0:
                    break  # alpha-strings through weights are unbroken
                total += datum.weight_root_form(x, r) * m
                k += 1
        w_rho = tuple(a + b for a, b in zip(w, rho))
        val = 2 * total / (norm_top - datum.weight_form(w_rho, w_rho))
        assert val.denominator == 1, (lam, w, val)
        mult[w] = int(val)
    return mult


def freudenthal_multiplicity(lam: Weight, mu: Weight) -> int:
    """``dim V(lam)_mu`` (0 if ``mu`` is not a weight of ``V(lam)``)."""
    if not lam.dominant():
        raise DomainError(f"{lam} is not dominant")
    if lam.datum != mu.datum:
        raise DomainError("weights belong to different root data")
    table = _multiplicities(lam.datum, lam.coeffs)
    return table.get(dominate(mu.coeffs, lam.datum), 0)


def weyl_dimension(lam: Weight) -> int:
    datum = lam.datum
    lam_rho = tuple(a + 1 for a in lam.coeffs)
    rho = (1,) * datum.rank
    num = den = Fraction(1)
    for r in datum.positive_roots:
        num *= datum.weight_root_form(lam_rho, r)
        den *= datum.weight_root_form(rho, r)
    val = num / den
    assert val.denominator == 1
    return int(val)


def weyl_character_support(lam: Weight) -> tuple[dict[Weight, int], int]:
    """Dominant multiplicities of ``V(lam)`` and its dimension (checked against Weyl)."""
    table = _multiplicities(lam.datum, lam.coeffs)
    mults = {Weight(w, lam.datum): m for w, m in table.items() if m}
    dim = sum(m * orbit_size(w) for w, m in mults.items())
    expected = weyl_dimension(lam)
    if dim != expected:
        raise AssertionError(f"V({lam}): orbit-sum dimension {dim} != Weyl dimension {expected}")
    return mults, dim


# ---------------------------------------------------------------------------
# Contravariant form

def _apply_e(i: int, vec: dict[Monomial, int], lam: Sequence[int], datum: RootDatum):
    out: dict[Monomial, int] = defaultdict(int)
    cartan = datum.cartan
    for mono, coeff in vec.items():
        wt = list(lam)  # weight of f_{mono[t+1:]} v
        for t in range(len(mono) - 1, -1, -1):
            j = mono[t]
            if j == i and wt[i]:
                out[mono[:t] + mono[t + 1:]] += coeff * wt[i]
            row = cartan[j]
            wt = [a - b for a, b in zip(wt, row)]
    return {m: c for m, c in out.items() if c}


def _drop(mono: Monomial, n: int) -> tuple[int, ...]:
    c = [0] * n
    for i in mono:
        c[i] += 1
    return tuple(c)


def shapovalov_pair(left: Monomial, right: Monomial, lam: Weight) -> int:
    """``(f_left v | f_right v)`` via ``(f_i u | w) = (u | e_i w)``."""
    datum = lam.datum
    n = datum.rank
    if any(not 0 <= i < n for i in (*left, *right)):
        raise DomainError(f"monomial index out of range for {datum}")
    if _drop(left, n) != _drop(right, n):
        return 0
    vec = {tuple(right): 1}
    for i in left:
        vec = _apply_e(i, vec, lam.coeffs, datum)
        if not vec:
            return 0
    return vec.get((), 0)


def ac_weights(n: int) -> tuple[Weight, Weight]:
    """``(varpi_1 + varpi_n, varpi_n)`` in type ``B_n``."""
    if n < 2:
        raise DomainError("the ac_n configuration needs n >= 2")
    datum = build_root_datum(f"B{n}")
    return datum.fundamental(0) + datum.fundamental(n - 1), datum.fundamental(n - 1)


def ac_basis_monomials(n: int) -> list[Monomial]:
    """``v_i = f_i f_{i+1} ... f_n f_{i-1} ... f_1 v`` for ``i = 1..n`` (0-based output)."""
    if n < 2:
        raise DomainError("the ac_n configuration needs n >= 2")
    out = []
    for i in range(n):
        out.append(tuple(range(i, n)) + tuple(range(i - 1, -1, -1)))
    return out


def gram_matrix(lam: Weight, monomials: Sequence[Monomial]) -> GramMatrix:
    """Pairwise contravariant form; asserts the monomials span ``V(lam)_mu``."""
    if not monomials:
        raise DomainError("need at least one monomial")
    datum = lam.datum
    drops = {_drop(m, datum.rank) for m in monomials}
    if len(drops) != 1:
        raise DomainError("monomials have different weights")
    (drop,) = drops
    mu = lam - Weight(datum.root_to_weight(drop), datum)
    monos = tuple(tuple(m) for m in monomials)
    k = len(monos)
    g = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            g[a][b] = g[b][a] = shapovalov_pair(monos[a], monos[b], lam)
    dim = freudenthal_multiplicity(lam, mu)
    rk = rank_over_q(g)
    if rk != dim:
        raise SpanError(f"monomial list does not span V({lam})_{mu}: rank {rk}, dimension {dim}")
    return GramMatrix(tuple(tuple(r) for r in g), lam, mu, monos)


def elementary_divisors(gram: GramMatrix) -> SmithForm:
    return smith_normal_form(gram.entries)


def decomposition_number_ac(n: int, ell: int) -> int:
    """``[V(varpi_1+varpi_n) : L(varpi_n)]`` for ``B_n`` in characteristic ``ell``.

    ``varpi_n`` is minuscule, so this is the corank of the form mod ``ell``.
    """
    if not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    lam, _ = ac_weights(n)
    gram = gram_matrix(lam, ac_basis_monomials(n))
    return gram.size - rank_mod_p(gram.entries, ell)


def linkage_bound(lam: Weight, mu: Weight) -> int:
    """``<lam + rho, beta^vee> - 1`` with ``beta = lam - mu`` a root."""
    beta = dominance_leq(mu, lam)
    if beta is None or beta.height == 0:
        raise DomainError(f"need lam > mu, got {lam}, {mu}")
    datum = lam.datum
    if not datum.is_root(beta.coeffs):
        raise DomainError(f"lam - mu = {beta} is not a root")
    return pairing(lam + datum.rho, beta) - 1

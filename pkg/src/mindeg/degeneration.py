"""Adjacent pairs of dominant weights (minimal degenerations).

:func:`classify_pair` decides adjacency through Stembridge's five cases.
:func:`bruteforce_covers` decides it independently by enumerating every
dominant weight in the box ``0 <= lam - nu <= lam`` (simple-root coordinates).
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .roots import (
    DomainError,
    RootDatum,
    RootVector,
    Weight,
    dominance_leq,
    identify_subsystem,
    is_connected,
)

__all__ = [
    "Case",
    "MinimalDegeneration",
    "Support",
    "support",
    "levi_datum",
    "restrict_to_levi",
    "short_dominant_root",
    "classify_pair",
    "enumerate_minimal_degenerations_below",
    "levi_reduce",
    "bruteforce_covers",
    "is_adjacent_bruteforce",
]


class Case(enum.Enum):
    SIMPLE = "simple"
    SHORT_DOMINANT = "short_dominant"
    AC = "ac"
    AG2 = "ag2"
    CG2 = "cg2"


class Support(NamedTuple):
    indices: tuple[int, ...]
    connected: bool


@dataclass(frozen=True)
class MinimalDegeneration:
    lam: Weight
    mu: Weight
    beta: RootVector
    support: tuple[int, ...]
    case: Case

    @property
    def datum(self) -> RootDatum:
        return self.lam.datum

    @property
    def n(self) -> int:
        """Rank of ``Phi_I``."""
        return len(self.support)

    @property
    def levi_type(self) -> str:
        ((letter, r, _),) = identify_subsystem(self.datum, self.support)
        return f"{letter}{r}"

    @property
    def case_label(self) -> str:
        if self.case is Case.AC:
            return f"ac_{self.n}"
        if self.case is Case.AG2:
            return "ag_2"
        if self.case is Case.CG2:
            return "cg_2"
        return self.case.value

    def __str__(self) -> str:
        return f"{self.lam} ~> {self.mu} [{self.case_label}, beta={self.beta}]"


def support(beta: RootVector, datum: RootDatum | None = None) -> Support:
    """Indices with nonzero coefficient in ``beta``; ``connected`` needs ``datum``."""
    idx = tuple(i for i, c in enumerate(beta.coeffs) if c)
    if not idx:
        raise DomainError("support of the zero vector is undefined")
    if any(c < 0 for c in beta.coeffs):
        raise DomainError(f"{beta} has negative coefficients")
    conn = True if datum is None else is_connected(datum, idx)
    return Support(idx, conn)


def levi_datum(datum: RootDatum, indices: Iterable[int]) -> tuple[RootDatum, tuple[int, ...]]:
    """Root datum of ``Phi_I`` in Bourbaki numbering plus the index map Levi -> ``datum``."""
    pieces = identify_subsystem(datum, indices)
    if not pieces:
        raise DomainError("empty Levi subsystem")
    sub = RootDatum(tuple((l, r) for l, r, _ in pieces))
    order = tuple(i for _, _, o in pieces for i in o)
    return sub, order


def restrict_to_levi(lam: Weight, indices: Iterable[int]) -> Weight:
    """``lam_I`` as a weight of the Levi root datum on ``indices``."""
    sub, order = levi_datum(lam.datum, indices)
    return Weight(tuple(lam.coeffs[i] for i in order), sub)


def short_dominant_root(datum: RootDatum, indices: Iterable[int]) -> RootVector:
    """Dominant root of minimal length of the irreducible ``Phi_I`` (coordinates in ``datum``)."""
    idx = set(indices)
    if not idx or not is_connected(datum, idx):
        raise DomainError(f"{sorted(idx)} is not a connected subdiagram of {datum}")
    cands = [r for r in datum.positive_roots
             if all((c != 0) == (i in idx) for i, c in enumerate(r))]
    shortest = min(datum.root_form(r, r) for r in cands)
    dom = [r for r in cands
           if datum.root_form(r, r) == shortest
           and all(datum.coroot_pairing(datum.root_to_weight(r), _unit(j, datum.rank)) >= 0
                   for j in idx)]
    assert len(dom) == 1, (datum, idx, dom)
    return RootVector(dom[0])


def _unit(j: int, n: int) -> tuple[int, ...]:
    return tuple(int(i == j) for i in range(n))


def _short_simple(datum: RootDatum, idx: Iterable[int]) -> list[int]:
    idx = list(idx)
    lo = min(datum.symmetrizers[i] for i in idx)
    return [i for i in idx if datum.symmetrizers[i] == lo]


def classify_pair(lam: Weight, mu: Weight) -> MinimalDegeneration | None:
    """Stembridge test: the tagged degeneration if ``lam ~> mu``, else ``None``."""
    if lam.datum != mu.datum:
        raise DomainError("weights belong to different root data")
    if not lam.dominant() or not mu.dominant():
        raise DomainError(f"classify_pair needs dominant weights, got {lam}, {mu}")
    beta = dominance_leq(mu, lam)
    if beta is None or beta.height == 0:
        return None
    datum = lam.datum
    idx, connected = support(beta, datum)
    if not connected:
        return None

    matches = []
    if beta.height == 1:
        matches.append(Case.SIMPLE)
    else:
        ((letter, rank, order),) = identify_subsystem(datum, idx)
        is_sdr = beta == short_dominant_root(datum, idx)
        mu_I = [mu.coeffs[i] for i in order]
        lam_I = [lam.coeffs[i] for i in order]
        if is_sdr and not any(mu_I):
            matches.append(Case.SHORT_DOMINANT)
        if is_sdr and letter == "B":
            short = _short_simple(datum, idx)
            # a B_n diagram has exactly one short simple root
            if len(short) != 1:
                raise DomainError(f"malformed B-type subdiagram {idx} in {datum}")
            if mu_I == [int(order[k] == short[0]) for k in range(rank)]:
                matches.append(Case.AC)
        if letter == "G":
            # order is Bourbaki: order[0] short, order[1] long
            if lam_I == [1, 1] and mu_I == [2, 0]:
                matches.append(Case.AG2)
            if lam_I == [0, 1] and mu_I == [1, 0]:
                matches.append(Case.CG2)
    if len(matches) > 1:
        raise AssertionError(f"{lam}, {mu} match several cases: {matches}")
    if not matches:
        return None
    return MinimalDegeneration(lam, mu, beta, idx, matches[0])


def enumerate_minimal_degenerations_below(lam: Weight) -> list[MinimalDegeneration]:
    """Every ``mu`` with ``lam ~> mu``. In all five cases ``lam - mu`` is a positive root."""
    if not lam.dominant():
        raise DomainError(f"{lam} is not dominant")
    datum = lam.datum
    out = []
    for r in datum.positive_roots:
        mu = tuple(a - b for a, b in zip(lam.coeffs, datum.root_to_weight(r)))
        if all(c >= 0 for c in mu):
            d = classify_pair(lam, Weight(mu, datum))
            if d is not None:
                out.append(d)
    out.sort(key=lambda d: (d.beta.height, d.beta.coeffs, d.mu.coeffs))
    return out


def levi_reduce(d: MinimalDegeneration) -> tuple[RootDatum, Weight, Weight]:
    """Levi datum on ``supp(beta)`` with ``lam_I`` and ``mu_I``."""
    sub, order = levi_datum(d.datum, d.support)
    lam_I = Weight(tuple(d.lam.coeffs[i] for i in order), sub)
    mu_I = Weight(tuple(d.mu.coeffs[i] for i in order), sub)
    return sub, lam_I, mu_I


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _box_dominant(lam: Weight) -> np.ndarray:
    """Root-coordinate differences ``c = lam - nu`` of all dominant ``nu <= lam``."""
    datum = lam.datum
    if not lam.dominant():
        raise DomainError(f"{lam} is not dominant")
    upper = [math.floor(x) for x in datum.weight_to_root(lam.coeffs)]
    axes = [np.arange(u + 1, dtype=np.int64) for u in upper]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, datum.rank)
    cartan = np.array(datum.cartan, dtype=np.int64)
    nu = np.array(lam.coeffs, dtype=np.int64) - grid @ cartan
    return grid[(nu >= 0).all(axis=1)]


def bruteforce_covers(lam: Weight) -> set[tuple[int, ...]]:
    """Weight coordinates of all dominant ``mu`` covered by ``lam`` in dominance order."""
    datum = lam.datum
    box = _box_dominant(lam)
    box = box[box.any(axis=1)]
    if len(box) == 0:
        return set()
    # c is minimal iff no other nonzero c' <= c componentwise
    le = (box[:, None, :] <= box[None, :, :]).all(axis=2)
    below = le.sum(axis=0) - 1
    mins = box[below == 0]
    cartan = np.array(datum.cartan, dtype=np.int64)
    mus = np.array(lam.coeffs, dtype=np.int64) - mins @ cartan
    return {tuple(int(x) for x in m) for m in mus}


def is_adjacent_bruteforce(lam: Weight, mu: Weight) -> bool:
    """``lam > mu`` with no dominant weight strictly between (box enumeration over ``[0, lam - mu]``)."""
    if lam.datum != mu.datum:
        raise DomainError("weights belong to different root data")
    beta = dominance_leq(mu, lam)
    if beta is None or beta.height == 0:
        return False
    datum = lam.datum
    for c in itertools.product(*(range(b + 1) for b in beta.coeffs)):
        if 0 < sum(c) < beta.height:
            nu = [a - b for a, b in zip(lam.coeffs, datum.root_to_weight(c))]
            if all(x >= 0 for x in nu):
                return False
    return True

"""Finite root systems: Cartan data, roots, weights, Weyl orbits and type tables.

Conventions
-----------
* Simple roots are numbered as in Bourbaki, per component; internally indices
  are 0-based, the string forms (``"B5"``, ``"1,0,0,0,1"``) are 1-based only in
  the sense that they list coordinates in Bourbaki order.
* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` of the Cartan matrix is
  the simple root ``alpha_i`` written in the fundamental-weight basis.
* The invariant form is normalised so that long roots have squared length 2.
  ``symmetrizers[i] = (alpha_i | alpha_i) / 2``.
* The weight lattice is the full weight lattice P.

Everything is exact (``int`` / ``Fraction``).
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

__all__ = [
    "DomainError",
    "SpecParseError",
    "RootDatum",
    "Weight",
    "RootVector",
    "TypeTable",
    "build_root_datum",
    "positive_roots",
    "pairing",
    "dominance_leq",
    "orbit_size",
    "weyl_orbit",
    "dominant_weights_below",
    "dominate",
    "identify_subsystem",
    "type_tables",
    "langlands_dual",
    "dual_index_map",
    "parse_weight",
]


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class SpecParseError(ValueError):
    """A type string or weight literal could not be parsed."""


# ---------------------------------------------------------------------------
# Standard Cartan matrices
# ---------------------------------------------------------------------------

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


def _check_type(letter: str, rank: int) -> None:
    if letter in _MIN_RANK:
        if rank < _MIN_RANK[letter]:
            raise SpecParseError(f"type {letter}{rank}: rank must be >= {_MIN_RANK[letter]}")
    elif letter in "EFG":
        if (letter, rank) not in _EXCEPTIONAL:
            raise SpecParseError(f"no exceptional type {letter}{rank}")
    else:
        raise SpecParseError(f"unknown type letter {letter!r}")


def _edges(letter: str, n: int) -> list[tuple[int, int]]:
    if letter in "ABC":
        return [(i, i + 1) for i in range(n - 1)]
    if letter == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if letter == "E":
        return [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    if letter == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]  # G


@lru_cache(maxsize=None)
def standard_cartan(letter: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix of an irreducible type."""
    _check_type(letter, n)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(letter, n):
        a[i][j] = a[j][i] = -1
    if letter == "B":  # alpha_n short
        a[n - 2][n - 1] = -2
    elif letter == "C":  # alpha_n long
        a[n - 1][n - 2] = -2
    elif letter == "F":  # alpha_1, alpha_2 long
        a[1][2] = -2
    elif letter == "G":  # alpha_1 short
        a[1][0] = -3
    return tuple(tuple(r) for r in a)


_TYPE_RE = re.compile(r"([A-Za-z])(\d+)")


def _parse_type_spec(spec: str) -> tuple[tuple[str, int], ...]:
    if not isinstance(spec, str) or not spec.strip():
        raise SpecParseError("empty type spec")
    comps = []
    for part in spec.strip().split("x"):
        m = _TYPE_RE.fullmatch(part.strip())
        if m is None:
            raise SpecParseError(f"cannot parse type component {part!r} in {spec!r}")
        letter, rank = m.group(1).upper(), int(m.group(2))
        _check_type(letter, rank)
        comps.append((letter, rank))
    return tuple(comps)


# ---------------------------------------------------------------------------
# Exact linear algebra helpers (tiny, rational)
# ---------------------------------------------------------------------------

def _inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


# ---------------------------------------------------------------------------
# Root datum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootDatum:
    """Product of irreducible finite root systems in Bourbaki numbering."""

    components: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        return "x".join(f"{l}{r}" for l, r in self.components)

    def __repr__(self) -> str:
        return f"RootDatum({str(self)!r})"

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, k = [], 0
        for _, r in self.components:
            out.append(k)
            k += r
        return tuple(out)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        a = [[0] * n for _ in range(n)]
        for (letter, r), off in zip(self.components, self.offsets):
            block = standard_cartan(letter, r)
            for i in range(r):
                for j in range(r):
                    a[off + i][off + j] = block[i][j]
        return tuple(tuple(row) for row in a)

    @cached_property
    def symmetrizers(self) -> tuple[Fraction, ...]:
        """``(alpha_i|alpha_i)/2``; 1 on long roots of every component."""
        a = self.cartan
        d: list[Fraction | None] = [None] * self.rank
        for (_, r), off in zip(self.components, self.offsets):
            d[off] = Fraction(1)
            queue = deque([off])
            while queue:
                i = queue.popleft()
                for j in range(off, off + r):
                    if d[j] is None and a[i][j] != 0:
                        # a[i][j] d[j] = a[j][i] d[i]
                        d[j] = d[i] * Fraction(a[j][i], a[i][j])
                        queue.append(j)
            top = max(d[off:off + r])
            for j in range(off, off + r):
                d[j] = d[j] / top
        return tuple(d)  # type: ignore[arg-type]

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _inverse(self.cartan)

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """``(varpi_i | varpi_j)``."""
        inv, d = self.cartan_inverse, self.symmetrizers
        n = self.rank
        return tuple(tuple(inv[i][j] * d[j] for j in range(n)) for i in range(n))

    def component_of(self, i: int) -> int:
        for c, off in reversed(list(enumerate(self.offsets))):
            if i >= off:
                return c
        raise IndexError(i)

    def is_long(self, i: int) -> bool:
        return self.symmetrizers[i] == 1

    # -- coordinates --------------------------------------------------------

    def root_to_weight(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        a = self.cartan
        return tuple(sum(c * a[i][j] for i, c in enumerate(coeffs) if c)
                     for j in range(self.rank))

    def weight_to_root(self, coeffs: Sequence[int]) -> tuple[Fraction, ...]:
        inv = self.cartan_inverse
        return tuple(sum((c * inv[i][j] for i, c in enumerate(coeffs) if c), Fraction(0))
                     for j in range(self.rank))

    def root_form(self, x: Sequence, y: Sequence) -> Fraction:
        """``(x|y)`` for two vectors in simple-root coordinates."""
        a, d = self.cartan, self.symmetrizers
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj and a[i][j]:
                        total += xi * yj * a[i][j] * d[j]
        return total

    def weight_root_form(self, w: Sequence, c: Sequence) -> Fraction:
        """``(w|c)`` for ``w`` in weight coordinates and ``c`` in root coordinates."""
        d = self.symmetrizers
        return sum((wi * ci * d[i] for i, (wi, ci) in enumerate(zip(w, c)) if wi and ci),
                   Fraction(0))

    def weight_form(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.weight_gram
        return sum((xi * yj * g[i][j] for i, xi in enumerate(x) if xi
                    for j, yj in enumerate(y) if yj), Fraction(0))

    # -- roots --------------------------------------------------------------

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
        n, a = self.rank, self.cartan
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            g = queue.popleft()
            for i in range(n):
                # <g, alpha_i^vee> = sum_j g_j a[j][i]
                k = sum(g[j] * a[j][i] for j in range(n) if g[j])
                if k == 0:
                    continue
                h = list(g)
                h[i] -= k
                h = tuple(h)
                if all(x >= 0 for x in h) and h not in seen:
                    seen.add(h)
                    queue.append(h)
        return tuple(sorted(seen, key=lambda r: (sum(r), r)))

    @cached_property
    def _root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.positive_roots)

    def is_root(self, coeffs: Sequence[int]) -> bool:
        c = tuple(coeffs)
        if c in self._root_set:
            return True
        return tuple(-x for x in c) in self._root_set

    def coroot_pairing(self, w: Sequence[int], root: Sequence[int]) -> int:
        """``<w, root^vee>`` with ``w`` in weight and ``root`` in root coordinates."""
        d = self.symmetrizers
        num = sum((wi * ci * d[i] for i, (wi, ci) in enumerate(zip(w, root)) if wi and ci),
                  Fraction(0))
        half_norm = self.root_form(root, root) / 2
        val = num / half_norm
        assert val.denominator == 1, (w, root, val)
        return int(val)

    @cached_property
    def weyl_order(self) -> int:
        return math.prod(type_tables(f"{l}{r}").weyl_order for l, r in self.components)

    def weight(self, *coeffs: int) -> "Weight":
        if len(coeffs) == 1 and not isinstance(coeffs[0], int):
            coeffs = tuple(coeffs[0])
        return Weight(tuple(coeffs), self)

    def fundamental(self, i: int) -> "Weight":
        return Weight(tuple(int(j == i) for j in range(self.rank)), self)

    @property
    def zero(self) -> "Weight":
        return Weight((0,) * self.rank, self)

    @property
    def rho(self) -> "Weight":
        return Weight((1,) * self.rank, self)


def build_root_datum(spec: str) -> RootDatum:
    """Parse ``"B5"``, ``"A2xA1"`` etc. into a :class:`RootDatum`."""
    return RootDatum(_parse_type_spec(spec))


def positive_roots(datum: RootDatum) -> list["RootVector"]:
    return [RootVector(r) for r in datum.positive_roots]


# ---------------------------------------------------------------------------
# Weights and root vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootVector:
    """Integer vector in the simple-root basis."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def to_weight(self, datum: RootDatum) -> "Weight":
        if len(self.coeffs) != datum.rank:
            raise DomainError("root vector length does not match datum rank")
        return Weight(datum.root_to_weight(self.coeffs), datum)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{'' if c == 1 else c}a{i + 1}")
        return "+".join(terms) or "0"


@dataclass(frozen=True)
class Weight:
    """Weight in the fundamental-weight basis of ``datum``."""

    coeffs: tuple[int, ...]
    datum: RootDatum

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.datum.rank:
            raise DomainError(
                f"weight has {len(self.coeffs)} coordinates, {self.datum} has rank {self.datum.rank}")

    def dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def _same(self, other: "Weight") -> None:
        if not isinstance(other, Weight) or other.datum != self.datum:
            raise DomainError("weights belong to different root data")

    def __add__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.datum)

    def __sub__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.datum)

    def to_root(self) -> RootVector:
        """Simple-root coordinates; raises if not in the root lattice."""
        r = self.datum.weight_to_root(self.coeffs)
        if any(x.denominator != 1 for x in r):
            raise DomainError(f"{self} is not in the root lattice")
        return RootVector(tuple(int(x) for x in r))

    def literal(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{'' if c == 1 else c}w{i + 1}")
        return "+".join(terms) or "0"


def parse_weight(literal: str, datum: RootDatum) -> Weight:
    """Parse ``"1,0,0,0,1"`` against ``datum``."""
    try:
        coeffs = tuple(int(x) for x in literal.split(","))
    except (ValueError, AttributeError) as exc:
        raise SpecParseError(f"bad weight literal {literal!r}") from exc
    if len(coeffs) != datum.rank:
        raise SpecParseError(
            f"weight literal {literal!r} has {len(coeffs)} entries, {datum} has rank {datum.rank}")
    return Weight(coeffs, datum)


def pairing(lam: Weight, gamma: RootVector) -> int:
    """``<lam, gamma^vee>`` for a root ``gamma``."""
    datum = lam.datum
    if len(gamma.coeffs) != datum.rank or not datum.is_root(gamma.coeffs):
        raise DomainError(f"{gamma} is not a root of {datum}")
    return datum.coroot_pairing(lam.coeffs, gamma.coeffs)


def dominance_leq(mu: Weight, lam: Weight) -> RootVector | None:
    """Return ``lam - mu`` in simple-root coordinates if ``mu <= lam``, else ``None``."""
    mu._same(lam)
    diff = lam.datum.weight_to_root((lam - mu).coeffs)
    if all(x.denominator == 1 and x >= 0 for x in diff):
        return RootVector(tuple(int(x) for x in diff))
    return None


def simple_reflection(w: Sequence[int], i: int, datum: RootDatum) -> tuple[int, ...]:
    k = w[i]
    if k == 0:
        return tuple(w)
    row = datum.cartan[i]
    return tuple(x - k * a for x, a in zip(w, row))


def dominate(w: Sequence[int], datum: RootDatum) -> tuple[int, ...]:
    """Dominant representative of the Weyl orbit of ``w``."""
    w = tuple(w)
    while True:
        for i, c in enumerate(w):
            if c < 0:
                w = simple_reflection(w, i, datum)
                break
        else:
            return w


# ---------------------------------------------------------------------------
# Subdiagram identification
# ---------------------------------------------------------------------------

def _components(datum: RootDatum, indices: Iterable[int]) -> list[list[int]]:
    idx = sorted(set(indices))
    left, comps, a = set(idx), [], datum.cartan
    while left:
        start = min(left)
        comp, queue = {start}, [start]
        left.discard(start)
        while queue:
            i = queue.pop()
            for j in list(left):
                if a[i][j] != 0:
                    left.discard(j)
                    comp.add(j)
                    queue.append(j)
        comps.append(sorted(comp))
    return comps


def _match(sub: list[list[int]], target: tuple[tuple[int, ...], ...]) -> list[int] | None:
    """Find an ordering ``p`` with ``sub[p[i]][p[j]] == target[i][j]`` (backtracking)."""
    n = len(target)
    perm: list[int] = []
    used = [False] * n

    def extend() -> bool:
        k = len(perm)
        if k == n:
            return True
        for c in range(n):
            if used[c]:
                continue
            if all(sub[perm[t]][c] == target[t][k] and sub[c][perm[t]] == target[k][t]
                   for t in range(k)):
                perm.append(c)
                used[c] = True
                if extend():
                    return True
                perm.pop()
                used[c] = False
        return False

    return perm if extend() else None


def _candidate_types(n: int) -> list[tuple[str, int]]:
    out = [("A", n)]
    if n >= 2:
        out += [("B", n)]
    if n >= 3:
        out += [("C", n), ("D", n)]
    out += [t for t in sorted(_EXCEPTIONAL) if t[1] == n]
    return out


@lru_cache(maxsize=None)
def _identify(datum: RootDatum, comp: tuple[int, ...]) -> tuple[str, int, tuple[int, ...]]:
    a = datum.cartan
    sub = [[a[i][j] for j in comp] for i in comp]
    for letter, r in _candidate_types(len(comp)):
        perm = _match(sub, standard_cartan(letter, r))
        if perm is not None:
            return letter, r, tuple(comp[p] for p in perm)
    raise DomainError(f"subdiagram {comp} of {datum} is not of finite type")  # pragma: no cover


def identify_subsystem(datum: RootDatum, indices: Iterable[int]) -> list[tuple[str, int, tuple[int, ...]]]:
    """Split ``Phi_I`` into irreducible pieces.

    Returns ``(letter, rank, order)`` per component where ``order`` lists the
    indices of ``datum`` in Bourbaki order of that piece. Rank-2 doubly laced
    pieces are reported as ``B2``.
    """
    return [_identify(datum, tuple(c)) for c in _components(datum, indices)]


def is_connected(datum: RootDatum, indices: Iterable[int]) -> bool:
    return len(_components(datum, indices)) == 1


# ---------------------------------------------------------------------------
# Orbits
# ---------------------------------------------------------------------------

def orbit_size(lam: Weight) -> int:
    """``|W . lam|`` by the stabiliser formula; ``lam`` must be dominant."""
    if not lam.dominant():
        raise DomainError(f"orbit_size needs a dominant weight, got {lam}")
    datum = lam.datum
    zeros = [i for i, c in enumerate(lam.coeffs) if c == 0]
    stab = math.prod(type_tables(f"{l}{r}").weyl_order
                     for l, r, _ in identify_subsystem(datum, zeros))
    return datum.weyl_order // stab


def weyl_orbit(lam: Weight, limit: int = 10**6) -> set[tuple[int, ...]]:
    """Explicit orbit under simple reflections (desk-scale only)."""
    datum = lam.datum
    start = lam.coeffs
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(datum.rank):
            v = simple_reflection(w, i, datum)
            if v not in seen:
                seen.add(v)
                if len(seen) > limit:
                    raise DomainError(f"orbit of {lam} exceeds {limit} elements")
                queue.append(v)
    return seen


def dominant_weights_below(lam: Weight) -> list[Weight]:
    """All dominant ``mu <= lam``, reached by subtracting positive roots.

    Every dominant weight below ``lam`` is joined to it by a chain of dominant
    weights whose steps are positive roots.
    """
    if not lam.dominant():
        raise DomainError(f"{lam} is not dominant")
    datum = lam.datum
    roots_w = [datum.root_to_weight(r) for r in datum.positive_roots]
    seen = {lam.coeffs}
    queue = deque([lam.coeffs])
    while queue:
        w = queue.popleft()
        for r in roots_w:
            v = tuple(x - y for x, y in zip(w, r))
            if v not in seen and all(x >= 0 for x in v):
                seen.add(v)
                queue.append(v)
    out = [Weight(w, datum) for w in seen]
    out.sort(key=lambda m: (-sum(datum.weight_to_root(m.coeffs)), tuple(-c for c in m.coeffs)))
    return out


# ---------------------------------------------------------------------------
# Per-type tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TypeTable:
    letter: str
    rank: int
    exponents: tuple[int, ...]
    coxeter: int
    dual_coxeter: int
    weyl_order: int
    bad_primes: frozenset[int]

    def is_good(self, ell: int) -> bool:
        return ell not in self.bad_primes


_EXC_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}
_EXC_DUAL_COXETER = {("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 9, ("G", 2): 4}
_BAD = {"A": (), "B": (2,), "C": (2,), "D": (2,), "E6": (2, 3), "E7": (2, 3),
        "E8": (2, 3, 5), "F4": (2, 3), "G2": (2, 3)}


@lru_cache(maxsize=None)
def type_tables(label: str) -> TypeTable:
    """Exponents, Coxeter numbers, |W| and bad primes of an irreducible type."""
    ((letter, n),) = _parse_type_spec(label)
    if letter == "A":
        exps, hv = tuple(range(1, n + 1)), n + 1
    elif letter in "BC":
        exps = tuple(range(1, 2 * n, 2))
        hv = 2 * n - 1 if letter == "B" else n + 1
    elif letter == "D":
        exps, hv = tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])), 2 * n - 2
    else:
        exps, hv = _EXC_EXPONENTS[letter, n], _EXC_DUAL_COXETER[letter, n]
    bad = _BAD.get(letter) if letter in "ABCD" else _BAD[f"{letter}{n}"]
    return TypeTable(
        letter=letter,
        rank=n,
        exponents=exps,
        coxeter=max(exps) + 1,
        dual_coxeter=hv,
        weyl_order=math.prod(e + 1 for e in exps),
        bad_primes=frozenset(bad),
    )


_DUAL_LETTER = {"B": "C", "C": "B"}


def dual_type(letter: str, rank: int) -> tuple[str, int]:
    return _DUAL_LETTER.get(letter, letter), rank


def langlands_dual(datum: RootDatum) -> RootDatum:
    """Dual root datum (Cartan transpose), re-expressed in Bourbaki numbering.

    The transpose of ``F4`` and ``G2`` reverses which simple roots are long;
    :func:`dual_index_map` gives the renumbering.
    """
    return RootDatum(tuple(dual_type(l, r) for l, r in datum.components))


def dual_index_map(datum: RootDatum) -> tuple[int, ...]:
    """``p`` with ``transpose(cartan)[i][j] == dual.cartan[p[i]][p[j]]``."""
    out = []
    for (letter, r), off in zip(datum.components, datum.offsets):
        if letter in "FG":
            out.extend(off + r - 1 - i for i in range(r))
        else:
            out.extend(off + i for i in range(r))
    return tuple(out)

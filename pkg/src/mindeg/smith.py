"""Integer matrices: Smith normal form, determinants and ranks over Q and F_p."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "SmithForm",
    "smith_normal_form",
    "bareiss_determinant",
    "rank_over_q",
    "rank_mod_p",
    "is_prime",
    "primes_upto",
    "weight_lattice_quotient",
]

Matrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class SmithForm:
    """Diagonal of the Smith normal form, ``d_1 | d_2 | ...`` (zeros last)."""

    divisors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d != 0)

    def nonunit(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d != 1)

    def p_rank(self, p: int) -> int:
        """Rank of the matrix after reduction mod ``p``."""
        return sum(1 for d in self.divisors if d % p != 0)

    def quotient_dimension(self, p: int) -> int:
        """``dim_{F_p} F_p (x) coker``, counting square-matrix cokernel factors."""
        return sum(1 for d in self.divisors if d % p == 0)

    def torsion_order(self) -> int:
        return math.prod(d for d in self.divisors if d != 0)


def smith_normal_form(m: Matrix) -> SmithForm:
    """Elementary divisors of an integer matrix by unimodular row/column moves."""
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    k = min(rows, cols)
    for t in range(k):
        # pick the smallest nonzero entry in the trailing block as pivot
        while True:
            piv = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return SmithForm(_normalize([a[i][i] for i in range(k)]))
            i, j = piv
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                dirty |= a[t][j] != 0
            if dirty:
                continue
            # enforce divisibility of the trailing block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
    return SmithForm(_normalize([a[i][i] for i in range(k)]))


def _normalize(diag: list[int]) -> tuple[int, ...]:
    vals = [abs(x) for x in diag]
    # the elimination above already yields a divisibility chain; re-sort defensively
    nz = sorted(v for v in vals if v)
    for i in range(len(nz)):
        for j in range(i + 1, len(nz)):
            g = math.gcd(nz[i], nz[j])
            nz[i], nz[j] = g, nz[i] * nz[j] // g
    return tuple(nz) + (0,) * (len(vals) - len(nz))


def bareiss_determinant(m: Matrix) -> int:
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_over_q(m: Matrix) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    return _rank(a, lambda x, y: x / y)


def rank_mod_p(m: Matrix, p: int) -> int:
    a = [[x % p for x in row] for row in m]
    r = 0
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


def _rank(a, div) -> int:
    r = 0
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = div(a[i][c], a[r][c])
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def weight_lattice_quotient(datum) -> SmithForm:
    """``P/Q`` of a (possibly reducible) root system, as the Smith form of its Cartan matrix."""
    return smith_normal_form(datum.cartan)

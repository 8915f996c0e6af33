"""Gram matrices, elementary divisors and decomposition numbers for the ac_n pairs in B_n."""

from __future__ import annotations

import argparse

from mindeg.roots import orbit_size
from mindeg.smith import bareiss_determinant, primes_upto
from mindeg.weyl_module import (
    ac_basis_monomials,
    ac_weights,
    decomposition_number_ac,
    elementary_divisors,
    freudenthal_multiplicity,
    gram_matrix,
    linkage_bound,
    weyl_character_support,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-prime", type=int, default=100)
    ap.add_argument("--show-matrix", action="store_true")
    args = ap.parse_args()

    header = f"{'n':>2} {'|W.lam|':>8} {'|W.mu|':>7} {'mult':>4} {'dim':>6} {'det':>4} {'divisors':<22} {'link':>4}  d(ell)=1 at"
    print(header)
    print("-" * len(header))
    for n in range(2, args.max_n + 1):
        lam, mu = ac_weights(n)
        g = gram_matrix(lam, ac_basis_monomials(n))
        divs = elementary_divisors(g).divisors
        _, dim = weyl_character_support(lam)
        hits = [p for p in primes_upto(args.max_prime) if decomposition_number_ac(n, p)]
        print(f"{n:>2} {orbit_size(lam):>8} {orbit_size(mu):>7} {freudenthal_multiplicity(lam, mu):>4} "
              f"{dim:>6} {bareiss_determinant(g.entries):>4} {str(divs):<22} {linkage_bound(lam, mu):>4}  {hits}")
        if args.show_matrix:
            for row in g.entries:
                print("     " + " ".join(f"{x:>2}" for x in row))


if __name__ == "__main__":
    main()

"""Invariants of the named singularities and the obstructions separating them."""

from __future__ import annotations

import argparse
import itertools

from mindeg.singularity import equivalence_obstruction, standard_singularity


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    names = ["c2", "cg2", "ag2"] + [f"a{n}" for n in range(2, args.max_n + 1)] \
        + [f"ac{n}" for n in range(2, args.max_n + 1)]
    inv = {name: standard_singularity(name) for name in names}
    print(f"{'name':<6} {'class':<6} {'IC polynomial':<36} primes with d != 0")
    for name in names:
        i = inv[name]
        print(f"{name:<6} {i.singularity.name:<6} {str(i.ic):<36} {i.profile.support_primes()}")

    print()
    print("pairs with equal IC polynomial:")
    for a, b in itertools.combinations(names, 2):
        if inv[a].ic != inv[b].ic:
            continue
        ob = equivalence_obstruction(inv[a], inv[b])
        verdict = "no obstruction" if ob is None else f"{ob.kind} at {ob.prime}, differing {list(ob.differing_primes)}"
        print(f"  {a:<5} vs {b:<5} {verdict}")


if __name__ == "__main__":
    main()

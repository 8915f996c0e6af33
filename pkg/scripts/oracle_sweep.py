"""Compare the Stembridge classifier with brute-force dominance-poset covers.

Prints per-type pair counts, disagreements and the case distribution of the
degenerations found, along with linkage and certificate checks.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from mindeg.degeneration import _box_dominant, bruteforce_covers, classify_pair
from mindeg.roots import build_root_datum
from mindeg.singularity import decomposition_profile, nonsmoothness_certificate
from mindeg.smith import primes_upto
from mindeg.weyl_module import linkage_bound


@dataclass
class SweepConfig:
    types: list[str] = field(default_factory=lambda: ["A3", "B3", "C3", "D4", "G2", "F4"])
    max_coeff: int = 2
    linkage_primes: int = 50


def sweep(label: str, cfg: SweepConfig) -> dict:
    datum = build_root_datum(label)
    cartan = np.array(datum.cartan, dtype=np.int64)
    primes = primes_upto(cfg.linkage_primes)
    stats = Counter()
    cases = Counter()
    for c in np.ndindex(*(cfg.max_coeff + 1,) * datum.rank):
        lam = datum.weight(*c)
        covers = bruteforce_covers(lam)
        below = np.array(lam.coeffs) - _box_dominant(lam) @ cartan
        for mu in {tuple(int(x) for x in v) for v in below}:
            stats["pairs"] += 1
            d = classify_pair(lam, datum.weight(*mu))
            if (d is not None) != (mu in covers):
                stats["disagreements"] += 1
            if d is None:
                continue
            cases[d.case.value] += 1
            nonsmoothness_certificate(d)
            prof = decomposition_profile(d)
            bound = linkage_bound(d.lam, d.mu)
            stats["linkage_violations"] += sum(1 for p in primes if prof(p) and bound % p)
    return {"stats": stats, "cases": cases}


def main() -> None:
    cfg = SweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--types", nargs="+", default=cfg.types)
    ap.add_argument("--max-coeff", type=int, default=cfg.max_coeff)
    args = ap.parse_args()
    cfg = SweepConfig(types=args.types, max_coeff=args.max_coeff)

    for label in cfg.types:
        t0 = time.perf_counter()
        out = sweep(label, cfg)
        s = out["stats"]
        print(f"{label:>4}: {s['pairs']:>6} pairs, {s['disagreements']} disagreements, "
              f"{s['linkage_violations']} linkage violations, {time.perf_counter() - t0:5.2f}s  "
              f"cases {dict(sorted(out['cases'].items()))}")


if __name__ == "__main__":
    main()

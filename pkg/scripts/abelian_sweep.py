#!/usr/bin/env python3
"""Sweep diagonal abelian groups: character oracle, quadratic duality and self-injectivity checks."""
import argparse
import time

from mckaycone.sweeps import AbelianSweepConfig, character_oracle, stq_outcome


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cyclic-max", type=int, default=AbelianSweepConfig.cyclic_max)
    ap.add_argument("--pair-max", type=int, default=AbelianSweepConfig.pair_max)
    ap.add_argument("--cover-max", type=int, default=AbelianSweepConfig.cover_max)
    a = ap.parse_args()
    cfg = AbelianSweepConfig(a.cyclic_max, a.pair_max, a.cover_max)
    failures = 0
    print(f"{'orders':<12} {'weights':<28} {'oracle':>7} {'ortho':>6} {'stq':>5} {'sec':>6}")
    for spec in cfg.specs():
        t0 = time.perf_counter()
        outs = character_oracle(spec, cfg.cover_max) if spec.n <= 2 else []
        oracle = all(o.returning_matches and o.cover_matches for o in outs) if outs else None
        ortho = all(all(o.ortho.values()) for o in outs) if outs else None
        stq = stq_outcome(spec).ok
        failures += (oracle is False) + (ortho is False) + (not stq)
        print(f"{str(spec.orders):<12} {str(spec.weights):<28} {str(oracle):>7} {str(ortho):>6} "
              f"{str(stq):>5} {time.perf_counter() - t0:>6.2f}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()

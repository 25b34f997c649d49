#!/usr/bin/env python3
"""Verify T^{n+1}_s as a truncation of a McKay quiver cover for a grid of (s, n).

    python scripts/cone_chain.py --s-max 5 --n-max 3 --json chain.json
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from mckaycone.truncation import idempotent_quotient_check, t_algebra_chain


@dataclass(frozen=True)
class ChainConfig:
    s_max: int = 4
    n_max: int = 2
    group_order: int = 0   # 0 means s + 1
    check_dims: bool = True


def run(cfg: ChainConfig) -> list:
    rows = []
    for s in range(2, cfg.s_max + 1):
        for n in range(1, cfg.n_max + 1):
            t0 = time.perf_counter()
            steps = t_algebra_chain(s, n, cfg.group_order or None)
            last = steps[-1]
            dims_ok = None
            if cfg.check_dims and last.verdict:
                dims_ok = idempotent_quotient_check(last.embedding, last.cone, last.cover).ok
            rows.append({
                "s": s, "n": n, "verdict": all(r.verdict for r in steps) and len(steps) == n,
                "orders": list(last.extended_group.orders), "m": [r.m for r in steps],
                "cone_vertices": len(last.cone.quiver.vertices),
                "cover_vertices": len(last.cover.quiver.vertices),
                "graded_dims_match": dims_ok, "seconds": round(time.perf_counter() - t0, 3),
            })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--s-max", type=int, default=ChainConfig.s_max)
    ap.add_argument("--n-max", type=int, default=ChainConfig.n_max)
    ap.add_argument("--group-order", type=int, default=0)
    ap.add_argument("--no-dims", action="store_true")
    ap.add_argument("--json")
    a = ap.parse_args()
    cfg = ChainConfig(a.s_max, a.n_max, a.group_order, not a.no_dims)
    rows = run(cfg)
    print(f"{'s':>2} {'n':>2} {'ok':>5} {'m':>12} {'|cone|':>7} {'|cover|':>8} {'dims':>5} {'sec':>7}")
    for r in rows:
        print(f"{r['s']:>2} {r['n']:>2} {str(r['verdict']):>5} {str(r['m']):>12} {r['cone_vertices']:>7} "
              f"{r['cover_vertices']:>8} {str(r['graded_dims_match']):>5} {r['seconds']:>7}")
    if a.json:
        with open(a.json, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=1)
    raise SystemExit(0 if all(r["verdict"] for r in rows) else 1)


if __name__ == "__main__":
    main()

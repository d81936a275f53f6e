"""Run every verification suite over several seeds and tabulate the outcome.

    python3 scripts/run_suites.py --seeds 0 1 2 --trials 5 --out reports/

Each (seed, suite) report is written as JSON when ``--out`` is given.
"""

import argparse
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from awdaha.coeff import parse_params
from awdaha.verify import SUITES, VerifyConfig, run_suite


@dataclass
class SweepConfig:
    params: str = "1/2,2,3,5,7"
    N: int = 12
    trials: int = 5
    seeds: list[int] = field(default_factory=lambda: [0])
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    out: Path | None = None


def sweep(cfg: SweepConfig) -> bool:
    vcfg = VerifyConfig(N=cfg.N)
    P = parse_params(cfg.params, depth=max(cfg.N + 4, vcfg.family_max + 1))
    if cfg.out:
        cfg.out.mkdir(parents=True, exist_ok=True)
    ok = True
    for seed in cfg.seeds:
        for name in cfg.suites:
            t0 = time.perf_counter()
            report = run_suite(name, P, cfg.N, seed, cfg.trials, vcfg)
            dt = time.perf_counter() - t0
            bad = report.failures()
            ok = ok and not bad
            print(f"seed={seed:<3} {name:<24} {len(report.checks) - len(bad):>5}/{len(report.checks):<5}"
                  f" {'pass' if not bad else 'FAIL'}  {dt:6.1f}s")
            if cfg.out:
                path = cfg.out / f"{name}.seed{seed}.json"
                path.write_text(json.dumps(report.to_json_obj(), indent=1) + "\n")
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--params", default=SweepConfig.params)
    ap.add_argument("--N", type=int, default=SweepConfig.N)
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--suite", action="append", choices=SUITES)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    cfg = SweepConfig(args.params, args.N, args.trials, args.seeds,
                      args.suite or list(SUITES), args.out)
    raise SystemExit(0 if sweep(cfg) else 1)


if __name__ == "__main__":
    main()

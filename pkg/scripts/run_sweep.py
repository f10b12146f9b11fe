"""Cross-check every engine against the diagram oracle over a small grid.

    python3 scripts/run_sweep.py --nmax 4 --pmax 4 --out sweep.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from pretzel.cli import run_sweep
from pretzel.diagram_oracle import DEFAULT_JONES_BUDGET


@dataclass
class SweepConfig:
    nmax: int = 4
    pmax: int = 4
    jones: bool = False
    jones_budget: int = DEFAULT_JONES_BUDGET
    threads: int = 1
    out: Path | None = None


def parse_args(argv=None) -> SweepConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    ap.add_argument("--nmax", type=int, default=defaults.nmax)
    ap.add_argument("--pmax", type=int, default=defaults.pmax)
    ap.add_argument("--jones", action="store_true")
    ap.add_argument("--jones-budget", type=int, default=defaults.jones_budget)
    ap.add_argument("--threads", type=int, default=defaults.threads)
    ap.add_argument("--out", type=Path)
    return SweepConfig(**vars(ap.parse_args(argv)))


def main(argv=None) -> int:
    cfg = parse_args(argv)
    start = time.perf_counter()
    total = run_sweep(cfg.nmax, cfg.pmax, cfg.jones, cfg.jones_budget, cfg.threads)
    elapsed = time.perf_counter() - start
    print(f"{total['specs']} specs, {total['checked']} checks, {len(total['mismatches'])} mismatches, "
          f"{total['skipped']} skipped in {elapsed:.1f}s")
    if cfg.out:
        config = {k: str(v) if isinstance(v, Path) else v for k, v in asdict(cfg).items()}
        cfg.out.write_text(json.dumps({"config": config, "seconds": elapsed, **total}, indent=2))
    return 1 if total["mismatches"] else 0


if __name__ == "__main__":
    raise SystemExit(main())

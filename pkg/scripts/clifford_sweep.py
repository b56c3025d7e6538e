"""Run every Clifford law on a list of fixtures and print one row per check."""

import argparse
import time
from dataclasses import dataclass, field
from typing import List

from bce.cli import run
from bce.config import load_config


@dataclass
class SweepConfig:
    configs: List[str] = field(default_factory=lambda: ["fixtures/flip2.json", "fixtures/hecke2.json", "fixtures/neg-flip2.json"])


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("configs", nargs="*")
    a = p.parse_args()
    cfg = SweepConfig(a.configs) if a.configs else SweepConfig()
    for path in cfg.configs:
        t = time.perf_counter()
        doc = run("clifford", load_config(path))
        print(f"# {path}  ({time.perf_counter() - t:.2f} s)")
        for v in doc["verdicts"]:
            print(f"  {'ok  ' if v['passed'] else 'FAIL'} {v['name']}")


if __name__ == "__main__":
    main()

"""Poincare sequences (ranks of A_n) for the shipped braidings."""

import argparse
from dataclasses import dataclass

from bce import fixtures as fx
from bce.braid import BraidOperator, OperatorBank
from bce.exterior import ExteriorAlgebra


@dataclass
class TableConfig:
    max_dim: int = 4
    cap: int = 6
    q: str = "2"


def rows(cfg: TableConfig):
    for name in ("flip", "neg-flip", "hecke-q"):
        for n_dim in range(2, cfg.max_dim + 1):
            params = {"q": cfg.q} if name == "hecke-q" else {}
            b = BraidOperator(fx.expand_fixture(name, n_dim, params), n_dim)
            ext = ExteriorAlgebra(OperatorBank(b, min(cfg.cap, n_dim + 2)))
            yield name, n_dim, ext.dims, ext.exhausted


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--cap", type=int, default=6)
    p.add_argument("--q", default="2")
    a = p.parse_args()
    for name, n_dim, dims, done in rows(TableConfig(a.max_dim, a.cap, a.q)):
        print(f"{name:9s} dim={n_dim}  {dims}{'' if done else '  (truncated)'}")


if __name__ == "__main__":
    main()

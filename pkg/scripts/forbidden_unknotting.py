"""Unknot catalog knots with both forbidden moves and print the move sequences.

    python3 scripts/forbidden_unknotting.py --nodes 20000 virtual_trefoil kprime
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from vknot.catalog import load_catalog
from vknot.certificate import replay, write_certificate
from vknot.gauss import parse
from vknot.moves import MoveSet
from vknot.search import Proven, SearchBudget, unknot_with_forbidden


@dataclass
class Config:
    names: tuple = ("virtual_trefoil", "kprime", "trefoil", "kishino")
    max_nodes: int = 200_000
    max_arrows: int | None = None
    show_moves: bool = False


def run(cfg: Config) -> None:
    catalog = load_catalog()
    budget = SearchBudget(max_arrows=cfg.max_arrows, max_nodes=cfg.max_nodes)
    for name in cfg.names:
        d = parse(catalog.resolve(name))
        t = time.perf_counter()
        v = unknot_with_forbidden(d, budget)
        elapsed = time.perf_counter() - t
        if isinstance(v, Proven):
            cert = write_certificate(d, parse("@"), MoveSet.ALL_FORBIDDEN, budget, v.path)
            replay(cert)
            print(f"{name:16s} {len(v):3d} moves  {elapsed:6.2f} s  replayed")
            if cfg.show_moves:
                for m in v.path:
                    print(f"    {m.to_line()}")
        else:
            print(f"{name:16s} {type(v).__name__}: {v}  {elapsed:6.2f} s")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("names", nargs="*", default=list(Config.names))
    p.add_argument("--nodes", type=int, default=Config.max_nodes)
    p.add_argument("--max-arrows", type=int, default=None)
    p.add_argument("--moves", action="store_true", help="print every move")
    a = p.parse_args()
    run(Config(tuple(a.names), a.nodes, a.max_arrows, a.moves))


if __name__ == "__main__":
    main()

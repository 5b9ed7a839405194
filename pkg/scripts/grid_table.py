"""Table of m x n looped grids: controllability and monomer-dimer tiling parity."""

import argparse
from dataclasses import dataclass

from lamplight.gf2 import chebyshev2, poly_eval_shift, poly_gcd
from lamplight.matchings import grid_controllable, monomer_dimer_parity


@dataclass
class GridConfig:
    size: int = 20
    show_gcd: bool = False


def run(cfg: GridConfig):
    print("    " + "".join(f"{n:>3}" for n in range(1, cfg.size + 1)))
    for m in range(1, cfg.size + 1):
        cells = []
        for n in range(1, cfg.size + 1):
            ok = grid_controllable(m, n)
            assert ok == bool(monomer_dimer_parity(m, n)), (m, n)
            cells.append("  ." if ok else "  X")
        print(f"{m:>3} " + "".join(cells))
    if cfg.show_gcd:
        for m in range(1, cfg.size + 1):
            for n in range(m, cfg.size + 1):
                g = poly_gcd(chebyshev2(m), poly_eval_shift(chebyshev2(n)))
                if g.bits != 1:
                    print(f"{m}x{n}: gcd {g}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=GridConfig.size)
    ap.add_argument("--show-gcd", action="store_true")
    a = ap.parse_args()
    run(GridConfig(a.size, a.show_gcd))

"""Write P1 bitmaps of mikado diamonds 1..K, presses and lit lamps side by side."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from lamplight.mikado import lit_lamps, mikado_diamond, render


@dataclass
class RenderConfig:
    max_k: int = 6
    out_dir: Path = Path("renders")


def run(cfg: RenderConfig):
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for k in range(1, cfg.max_k + 1):
        d = mikado_diamond(k)
        for mode in ("presses", "lamps"):
            bm = render(d, mode)
            path = cfg.out_dir / f"diamond{k:02d}_{mode}.pbm"
            path.write_text(bm.to_pbm())
        print(f"k={k:<2} presses={len(d):<6} lamps={len(lit_lamps(d))}  "
              f"box {render(d).width}x{render(d).height}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=RenderConfig.max_k)
    ap.add_argument("--out-dir", type=Path, default=RenderConfig.out_dir)
    a = ap.parse_args()
    run(RenderConfig(a.max_k, a.out_dir))

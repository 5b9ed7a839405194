"""Scan every maximal press window up to a given area and tabulate lit-lamp counts.

    python3 scripts/minimality_scan.py --area 25
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from lamplight.mikado import as_translated_diamond, maximal_windows, min_lamps_search


@dataclass
class ScanConfig:
    area: int = 25
    witness_max: int = 5
    json_out: str = ""


def run(cfg: ScanConfig) -> dict:
    rows = []
    for w, h in maximal_windows(cfg.area):
        t0 = time.perf_counter()
        r = min_lamps_search(w, h, cap=cfg.area, witness_max=cfg.witness_max)
        diamonds = [as_translated_diamond(p) for p in r.witnesses.get(r.smallest, [])]
        rows.append({
            "window": f"{w}x{h}",
            "patterns": (1 << (w * h)) - 1,
            "smallest": r.smallest,
            "at_smallest": r.histogram[r.smallest],
            "diamond_kinds": sorted({d[0] for d in diamonds if d}),
            "non_diamond": sum(d is None for d in diamonds),
            "seconds": round(time.perf_counter() - t0, 3),
        })
        print(f"{w:>2}x{h:<2}  min {r.smallest}  x{r.histogram[r.smallest]:<4} "
              f"diamonds {rows[-1]['diamond_kinds']}  {rows[-1]['seconds']:.2f}s", flush=True)
    return {"config": asdict(cfg), "windows": rows,
            "smallest": min(row["smallest"] for row in rows)}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--area", type=int, default=ScanConfig.area)
    ap.add_argument("--witness-max", type=int, default=ScanConfig.witness_max)
    ap.add_argument("--json-out", default="")
    a = ap.parse_args()
    out = run(ScanConfig(a.area, a.witness_max, a.json_out))
    print(f"smallest nonzero lit count: {out['smallest']}")
    if a.json_out:
        with open(a.json_out, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()

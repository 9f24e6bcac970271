"""Print the table of special pairs up to a given rank, with per-family counts."""

import argparse
from collections import Counter
from dataclasses import dataclass

from horospherical.classify import FAMILY_TEMPLATES, enumerate_special, template_pairs
from horospherical.report import build_report, render_table


@dataclass(frozen=True)
class Config:
    max_rank: int = 8


def run(cfg: Config) -> None:
    records = enumerate_special(cfg.max_rank)
    print(render_table([build_report(r.pair) for r in records]), end="")
    counts = Counter(f for r in records for f in r.family_ids)
    print()
    for fid, template in FAMILY_TEMPLATES.items():
        print(f"family {fid}  {template:<36} {counts[fid]} instance(s)")
    got = {(r.pair.type, frozenset((r.pair.alpha, r.pair.beta))) for r in records}
    same = got == template_pairs(cfg.max_rank)
    print(f"\n{len(records)} classes; equal to the template set: {'yes' if same else 'NO'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=Config.max_rank)
    run(Config(ap.parse_args().max_rank))

"""Compare dim Aut^0 with the ambient projective dimension for the non-homogeneous families.

Also prints the closed forms m(2m+1)+1+2^m (family 3) and m(2m+1)+1+2m (family 5).
"""

import argparse
from dataclasses import dataclass

from horospherical.geometry import OrbitSide, aut_dim, ambient_dim, normal_sections
from horospherical.selftest import instances


@dataclass(frozen=True)
class Config:
    max_rank: int = 8


CLOSED = {
    3: lambda m: m * (2 * m + 1) + 1 + 2**m,
    5: lambda m: m * (2 * m + 1) + 1 + 2 * m,
}


def _section(s):
    return "0" if s.is_zero else f"V{list(s.highest_weight)} ({s.dim})"


def run(cfg: Config) -> None:
    header = f"{'fam':<4}{'pair':<18}{'dim Aut':>8}{'closed':>8}{'P^N':>6}  H0(N_Y) / H0(N_Z)"
    print(header)
    print("-" * len(header))
    for fid in (3, 4, 5, 7, 8):
        for p, params in instances(fid, cfg.max_rank):
            m = params.get("m")
            closed = CLOSED[fid](m) if fid in CLOSED else "-"
            y, z = (normal_sections(p, side) for side in (OrbitSide.Y, OrbitSide.Z))
            print(f"{fid:<4}{str(p):<18}{aut_dim(p):>8}{closed!s:>8}{ambient_dim(p):>6}  "
                  f"{_section(y)} / {_section(z)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=Config.max_rank)
    run(Config(ap.parse_args().max_rank))

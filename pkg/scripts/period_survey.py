#!/usr/bin/env python3
"""Survey the bundled corpus: invariants, period heads, recurrences.

Prints one row per bundled polytope with its transition invariants and
the first period terms, then hunts for recurrences in two interesting
cases:

* p3 — the classic order-4 operator with (d+4)^3 leading term;
* octahedron — stride 2 (odd terms vanish), which uncovers the
  three-term recurrence of the even subsequence.

Everything is recomputed on the fly; expect a few seconds.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from conifold.lattice import convex_hull
from conifold.laurent import from_fan_polytope, period_sequence
from conifold.nodal import (
    SmoothingMode,
    check_regularity,
    enumerate_small_resolutions,
    nodal_profile,
    transition_invariants,
)
from conifold.recurrence import find_recurrence
import json

DATA = Path(__file__).resolve().parent.parent / "src" / "conifold" / "data"

SURVEY_DMAX = 8

HUNTS = [
    # (stem, dmax, rmax, degree_max, stride)
    ("p3", 40, 4, 3, 1),
    ("octahedron", 60, 3, 3, 2),
]


def load(stem: str):
    data = json.loads((DATA / "polytopes" / f"{stem}.json").read_text())
    return convex_hull([tuple(v) for v in data["vertices"]])


def main() -> int:
    stems = sorted(p.stem for p in (DATA / "polytopes").glob("*.json"))
    header = (
        f"{'polytope':<12} {'N':>2} {'k':>2} {'deg':>4} {'e_sm':>4} "
        f"{'b2':>3} {'b3':>3} {'regular':>9}  periods (d <= {SURVEY_DMAX})"
    )
    print(header)
    print("-" * len(header))
    for stem in stems:
        p = load(stem)
        rep = transition_invariants(p, mode=SmoothingMode.FANO)
        rs = check_regularity(p, enumerate_small_resolutions(p, nodal_profile(p)))
        nreg = sum(1 for r in rs if r.regular)
        seq = period_sequence(from_fan_polytope(p), SURVEY_DMAX, source=stem)
        print(
            f"{stem:<12} {rep.node_count:>2} {rep.relation_rank:>2} "
            f"{rep.degree:>4} {rep.e_sm:>4} {rep.b2_sm:>3} {rep.b3_sm:>3} "
            f"{nreg:>4}/{len(rs):<4}  {list(seq.terms)}"
        )

    print()
    for stem, dmax, rmax, degree_max, stride in HUNTS:
        p = load(stem)
        t0 = time.perf_counter()
        seq = period_sequence(from_fan_polytope(p), dmax, source=stem)
        rec = find_recurrence(seq, rmax=rmax, degree_max=degree_max, stride=stride)
        dt = time.perf_counter() - t0
        label = f"{stem} (dmax={dmax}, stride={stride})"
        if rec is None:
            print(f"{label}: no recurrence within order {rmax}, degree {degree_max}")
        else:
            print(f"{label}: found in {dt:.2f}s")
            print(f"    {rec}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Survey resolutions of all very ample types across a degree range.

For each degree from g+3 up to 2g+4 (override with --d-min/--d-max), print
one line per factorization type: cohomology, regularity, and the syzygy
thresholds, switching between the low- and high-degree closed forms as the
degree crosses 2g.  Useful for eyeballing how the invariants degenerate as
the degree grows.

    python scripts/survey_resolutions.py --g 6
"""

import argparse

from hyperell import (
    betti_diagram,
    enumerate_types,
    in_low_degree,
    low_invariants,
    n_nu_p_report,
    np_report_high,
    rao_dimension,
    riemann_roch,
)


def survey(g: int, d_min: int, d_max: int, show_diagrams: bool) -> None:
    for d in range(d_min, d_max + 1):
        types = enumerate_types(g, d)
        if not types:
            print(f"d = {d}: no very ample types")
            continue
        print(f"d = {d}:")
        for ft in types:
            h0, _ = riemann_roch(ft)
            if in_low_degree(ft):
                inv = low_invariants(ft)
                nu, holds, fails = n_nu_p_report(ft)
                gammas = [rao_dimension(ft, j) for j in range(2, inv.nu + 1)]
                syzygy = f"N_({nu},{holds}) holds, " if holds else ""
                print(
                    f"  ({ft.m:2d},{ft.b:2d})  h0 = {h0:3d}  reg = {inv.nu + 1:2d}"
                    f"  {syzygy}N_({nu},{fails}) fails  gamma = {gammas}"
                )
            else:
                holds, fails = np_report_high(g, d)
                print(
                    f"  ({ft.m:2d},{ft.b:2d})  h0 = {h0:3d}  reg =  3"
                    f"  N_{holds} holds, N_{fails} fails"
                )
            if show_diagrams:
                print("\n".join("    " + line for line in betti_diagram(ft).pretty().splitlines()))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--g", type=int, default=6)
    parser.add_argument("--d-min", dest="d_min", type=int, default=None)
    parser.add_argument("--d-max", dest="d_max", type=int, default=None)
    parser.add_argument("--diagrams", action="store_true", help="also print each Betti diagram")
    args = parser.parse_args()
    g = args.g
    survey(g, args.d_min or g + 3, args.d_max or 2 * g + 4, args.diagrams)


if __name__ == "__main__":
    main()

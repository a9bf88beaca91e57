#!/usr/bin/env python3
"""Run every duality and consistency check at desk scale and print a report.

Covers: the 4D toric-code/Ising series match at L=2, the homology cycle vs
boundary identity, the termwise coefficient bound, the cubic-code chain
identity, both 2D bath bond-algebra isomorphisms, ground-state degeneracies,
and the logical-operator commutation patterns.

Usage: python3 scripts/duality_report.py
Exits nonzero if any check fails.
"""
import sys

from stabtherm.duality import (
    bond_algebra_isomorphic,
    build_2dtc_bath_mapping,
    check_coefficient_bound,
    check_homology_identity,
    check_series_duality_4dtc,
    gsd,
    logical_operators_4dtc,
    logical_operators_haah,
)
from stabtherm.enumerators import constraint_kernel, weight_enumerator_full
from stabtherm.models import build_haah, build_toric_2d, build_toric_3d, build_toric_4d
from stabtherm.oracle import ising_chain_closed
from stabtherm.thermo import log_partition


def main() -> int:
    results = []

    series = check_series_duality_4dtc(2)
    results.append(("4DTC vs 4D Ising series (L=2, n<8)", series.matched))

    homology = check_homology_identity(2)
    results.append(("cycle vs boundary distributions (L=2)", homology.matched))
    results.append(("coefficient bound b_n >= b_n* (L=2)", check_coefficient_bound(2)))

    model = build_haah(3)
    wa = weight_enumerator_full(constraint_kernel(model, "A"))
    wb = weight_enumerator_full(constraint_kernel(model, "B"))
    worst = max(
        abs(
            log_partition(model, wa, wb, beta)
            - 2 * ising_chain_closed(27, 1.0, beta)
        )
        for beta in [0.1 * i for i in range(1, 31)]
    )
    results.append((f"Haah chain identity L=3 (max abs err {worst:.1e})", worst < 1e-10))

    for bath in ("Vx", "Vy"):
        ok = all(
            bond_algebra_isomorphic(build_2dtc_bath_mapping(L, bath))
            for L in (2, 3, 4)
        )
        results.append((f"2DTC {bath} bond algebra (L=2..4)", ok))

    degeneracies = {
        "2DTC L=3": (gsd(build_toric_2d(3)), 4),
        "3DTC L=2": (gsd(build_toric_3d(2)), 8),
        "4DTC L=2": (gsd(build_toric_4d(2)), 64),
        "Haah L=3": (gsd(build_haah(3)), 4),
    }
    for name, (got, want) in degeneracies.items():
        results.append((f"GSD {name} == {want}", got == want))

    results.append(("4DTC logical operators (L=2)", logical_operators_4dtc(2).all_hold))
    results.append(("Haah logical operators (L=3)", logical_operators_haah(3).all_hold))

    width = max(len(name) for name, _ in results)
    failures = 0
    for name, ok in results:
        print(f"{name:<{width}}  {'ok' if ok else 'FAIL'}")
        failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Print every stage of the degree computation for a single curve degree.

Walks the whole pipeline in order: Poincare data upstairs, the two
pushforward characters, the twisted Chern series, the virtual quotient,
the banded determinant by all three routes, and the final pairing.
"""

import argparse

from trisecant import (
    METHODS,
    berzolari,
    bundle_characters,
    chern_coefficients,
    degree_pairing,
    poincare_character,
    poincare_first_chern,
    porteous_class,
    secant3_degree,
    source_chern_series,
    target_chern_series,
    virtual_chern_series,
)
from trisecant.ring import AmbientClass


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=8, help="curve degree, at least 8")
    args = parser.parse_args()
    d = args.d

    print(f"== degree d = {d}, matrix size n = {d - 5} ==")
    print()
    print("upstairs on (curve) x Pic^3:")
    print(f"  c1(Poincare)       = {poincare_first_chern()}")
    print(f"  ch(Poincare)       = {poincare_character()}")
    print()
    sections, residual = bundle_characters(d)
    print("pushforward characters on the Picard surface:")
    print(f"  ch(sections)  rank {sections.rank}:  {sections.chern_character}")
    print(f"  ch(residual)  rank {residual.rank}:  {residual.chern_character}")
    print()
    print("twisted total Chern series on Pic^3 x P^(d-2):")
    target = target_chern_series(d)
    source = source_chern_series(d)
    for k in range(min(3, target.order) + 1):
        print(f"  c_t(target)[t^{k}] = {target.coefficient(k)}")
    for k in range(min(3, source.order) + 1):
        print(f"  c_t(source)[t^{k}] = {source.coefficient(k)}")
    print()
    print("virtual quotient coefficients c_i = c_t(target - source)[t^i]:")
    virtual = virtual_chern_series(d)
    assert tuple(virtual.coefficient(i) for i in range(1, d - 4)) == chern_coefficients(d)
    for i, value in enumerate(chern_coefficients(d), start=1):
        print(f"  c_{i} = {value}")
    print()
    print("banded determinant (the secant-variety class):")
    for method in METHODS:
        result = porteous_class(d, method=method)
        print(f"  {method:<11} -> {result.x1}")
    print()
    x1 = porteous_class(d).x1
    paired = degree_pairing(x1 * AmbientClass.monomial(d, 0, 5))
    print(f"pairing against h^5 and the theta square: {paired}")
    print(f"secant3_degree({d}) = {secant3_degree(d)}")
    print(f"classical count     = {berzolari(d)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Walk through the symmetric-group correspondences at desk scale.

Shows the odd-degree census, the unique-odd-branch chain, the hook-tuple
coordinates, the Sylow linear labels checked against the restriction oracle,
and the Young / wreath-product correspondents.
"""

from oddchar import (
    Partition,
    alpha_sn,
    count_odd_irr_sn,
    degree,
    odd_partitions,
    restriction_multiplicities,
    sharp_sn,
    star_sn,
    sylow2_subgroup,
    theorem_d_star,
    young_star,
)


def show_census():
    print("Odd-degree census |Irr_2'(S_n)| = 2^(n_1+...+n_r):")
    for n in range(1, 13):
        odd = odd_partitions(n)
        assert len(odd) == count_odd_irr_sn(n)
        print(f"  n={n:2d}: {len(odd):3d} odd partitions")
    print()


def show_star_chain():
    lam = Partition((4, 2, 1))
    print(f"Unique odd branch chain from {lam.parts} (degree {degree(lam)}):")
    while lam.n > 1:
        nxt = star_sn(lam)
        print(f"  {lam.parts} -> {nxt.parts}")
        lam = nxt
    print()


def show_alpha_and_sharp():
    n = 6
    group = sylow2_subgroup(n)
    print(f"Hook coordinates and Sylow labels for the odd partitions of {n}:")
    for lam in odd_partitions(n):
        theta = alpha_sn(lam)
        label = sharp_sn(lam)
        hooks = [f"({h.m},leg {h.leg})" for h in theta.hooks]
        named = tuple(label.value(g) for g in group.generators)
        mult = dict(restriction_multiplicities(lam, group))[named]
        print(
            f"  {str(lam.parts):15} alpha = {' '.join(hooks):22} "
            f"bits = {[list(b) for _, b in label.blocks]}  restriction mult = {mult}"
        )
    print("  (each label is a constituent of the restriction; at 2-power n it is")
    print("   the unique linear constituent of odd multiplicity)")
    print()


def show_young_and_wreath():
    lam = Partition((4, 2, 1))
    print(f"Young correspondent of {lam.parts} on S_3 x S_4 inside S_7:")
    psi = young_star(lam, [3, 4])
    print(f"  factors: {[p.parts for p in psi]}")
    print()
    lam = Partition((5, 1, 1, 1))
    label = theorem_d_star(lam, 4, 2)
    print(f"Wreath correspondent of {lam.parts} for S_4 wr S_2 inside S_8:")
    print(f"  base: {[(psi.parts, t) for psi, t in label.base]}")
    print(f"  top:  {[a.parts for a in label.top]}")


if __name__ == "__main__":
    show_census()
    show_star_chain()
    show_alpha_and_sharp()
    show_young_and_wreath()

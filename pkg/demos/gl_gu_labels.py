#!/usr/bin/env python3
"""Odd-degree label algebra for the linear and unitary families.

Enumerates odd labels, shows the census identity, iterates the parabolic
restriction correspondent down to rank one, and demonstrates the special
linear census.
"""

from oddchar import (
    GLabel,
    Partition,
    count_odd_irr_gl,
    enumerate_odd_labels,
    parabolic_star,
    sl_label_census,
    two_adic,
)


def fmt(label):
    return " o ".join(f"S({s},{list(lam.parts)})" for s, lam in label.pairs)


def show_enumeration():
    print("Odd labels of rank 2 over q = 3:")
    for kappa in "+-":
        labels = enumerate_odd_labels(2, 3, kappa)
        family = "GL_2(3)" if kappa == "+" else "GU_2(3)"
        print(f"  {family}: {len(labels)} labels")
        for label in labels:
            print(f"    {fmt(label)}")
    print()


def show_counts():
    print("Census vs closed form prod (q - kappa 1) * 2^(n_i):")
    for n in (3, 5, 6, 8):
        for q in (3, 5):
            for kappa in "+-":
                mod = q - 1 if kappa == "+" else q + 1
                closed = 1
                for e in two_adic(n):
                    closed *= mod << e
                count = count_odd_irr_gl(n, q, kappa)
                assert count == closed
                print(f"  n={n} q={q} kappa={kappa}: {count}")
    print()


def show_parabolic_chain():
    label = GLabel("+", 5, ((2, Partition((2, 2, 1))), (0, Partition((2,)))))
    print(f"Parabolic restriction chain from {fmt(label)} (rank {label.n}):")
    while label.n > 1:
        corr = parabolic_star(label)
        s, _ = corr.line
        print(f"  line S({s},[1])  rest {fmt(corr.rest)}")
        label = corr.rest
    print()


def show_sl_census():
    print("Special linear census = linear census / (q - 1):")
    for n in (3, 5):
        for q in (3, 5, 9):
            gl = count_odd_irr_gl(n, q, "+")
            sl = sl_label_census(n, q)
            assert sl * (q - 1) == gl
            print(f"  n={n} q={q}: GL {gl:5d}  SL {sl:5d}")


if __name__ == "__main__":
    show_enumeration()
    show_counts()
    show_parabolic_chain()
    show_sl_census()

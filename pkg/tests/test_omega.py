import math

import pytest

from oddchar.errors import DomainError
from oddchar.partitions import HookPartition, Partition, two_adic
from oddchar.glu import GLabel, enumerate_odd_labels
from oddchar.omega import (
    NormalizerLocalLabel,
    OmegaLabel,
    count_real_odd,
    enumerate_omega_labels,
    galois_act,
    local_to_omega,
    omega_to_local,
    outer_act,
    sharp_glu,
    sharp_glu_inverse,
)


def test_local_to_omega_examples():
    loc = NormalizerLocalLabel("+", 3, 1, 0, 0, j=0, k=0)
    assert local_to_omega(loc)[1] == HookPartition(2, 0)
    loc = NormalizerLocalLabel("+", 3, 1, 0, 0, j=1, k=0)
    assert local_to_omega(loc)[1] == HookPartition(2, 1)
    loc = NormalizerLocalLabel("+", 3, 3, 0, 0, j=1, k=2)
    assert local_to_omega(loc)[1] == HookPartition(8, 5)  # (3,1,1,1,1,1)


def test_local_round_trips():
    for kappa, q in [("+", 3), ("-", 3), ("+", 9), ("-", 5)]:
        mod = q - 1 if kappa == "+" else q + 1
        for m in range(0, 5):
            for s in range(mod):
                for leg in range(1 << m):
                    hook = HookPartition(1 << m, leg)
                    loc = omega_to_local(kappa, q, s, hook)
                    assert local_to_omega(loc) == (s, hook)
    # and in the other direction the (gamma, delta) pair is a CRT split
    loc = omega_to_local("+", 9, 5, HookPartition(4, 3))
    assert (loc.gamma, loc.delta) == (5 % 8, 0)


def test_local_label_validation():
    with pytest.raises(DomainError):
        NormalizerLocalLabel("+", 3, 0, 0, 0, j=0, k=0)  # j,k absent for m=0
    with pytest.raises(DomainError):
        NormalizerLocalLabel("+", 3, 2, 0, 0, j=2, k=0)
    with pytest.raises(DomainError):
        NormalizerLocalLabel("+", 3, 2, 0, 0, j=0, k=2)


def test_sharp_glu_examples():
    om = sharp_glu(GLabel("+", 3, ((1, Partition((1,))),)))
    assert om.blocks == ((1, 1, HookPartition(1, 0)),)

    om = sharp_glu(GLabel("+", 3, ((1, Partition((2,))),)))
    assert om.blocks == ((2, 1, HookPartition(2, 0)),)

    om = sharp_glu(GLabel("+", 3, ((0, Partition((1,))), (1, Partition((2,))))))
    assert om.blocks == ((2, 1, HookPartition(2, 0)), (1, 0, HookPartition(1, 0)))


def test_sharp_glu_inverse_examples():
    om = OmegaLabel("+", 3, ((2, 1, HookPartition(2, 0)), (1, 1, HookPartition(1, 0))))
    label = sharp_glu_inverse(om)
    assert label.pairs == ((1, Partition((3,))),)

    om = OmegaLabel("+", 3, ((2, 1, HookPartition(2, 0)), (1, 0, HookPartition(1, 0))))
    label = sharp_glu_inverse(om)
    assert label.pairs == ((0, Partition((1,))), (1, Partition((2,))))


def test_sharp_glu_bijective():
    for n in range(1, 9):
        for q in (3, 5, 9):
            for kappa in ("+", "-"):
                labels = enumerate_odd_labels(n, q, kappa)
                images = {sharp_glu(label) for label in labels}
                space = enumerate_omega_labels(n, q, kappa)
                assert len(images) == len(labels) == len(space)
                assert images == set(space)
    for q, kappa in [(3, "+"), (5, "-")]:
        for n in range(1, 8):
            for label in enumerate_odd_labels(n, q, kappa):
                assert sharp_glu_inverse(sharp_glu(label)) == label


def test_galois_act_examples():
    label = GLabel("+", 9, ((3, Partition((2,))),))
    assert galois_act(1, label) == label
    conj = galois_act(-1, label)
    assert conj.pairs == ((5, Partition((2,))),)
    cubed = outer_act("F", label)
    assert cubed.pairs == ((1, Partition((2,))),)  # 3*3 = 9 = 1 mod 8
    with pytest.raises(DomainError):
        galois_act(2, label)


def test_outer_act_examples():
    label = GLabel("+", 3, ((1, Partition((2,))),))
    assert outer_act("F F", label).pairs == ((1, Partition((2,))),)  # s -> s^9 = s mod 2
    assert outer_act("tau tau", label) == label
    assert outer_act("tau F", label) == outer_act("F tau", label)
    gu = GLabel("-", 3, ((1, Partition((2,))),))
    with pytest.raises(DomainError):
        outer_act("tau", gu)


def test_equivariance_sweep():
    for n in range(1, 7):
        for q, kappa in [(3, "+"), (3, "-"), (5, "+"), (5, "-"), (9, "+"), (9, "-")]:
            mod = q - 1 if kappa == "+" else q + 1
            sigmas = [i for i in range(1, mod) if math.gcd(i, mod) == 1]
            for label in enumerate_odd_labels(n, q, kappa):
                image = sharp_glu(label)
                for i in sigmas:
                    assert galois_act(i, image) == sharp_glu(galois_act(i, label))
                assert outer_act("F", image) == sharp_glu(outer_act("F", label))
                if kappa == "+":
                    assert outer_act("tau", image) == sharp_glu(outer_act("tau", label))


def test_count_real_examples():
    assert count_real_odd(1, 3, "+") == 2
    assert count_real_odd(2, 3, "+") == 4
    assert count_real_odd(3, 3, "+") == 8
    assert count_real_odd(2, 3, "-") == 4  # Sylow-normalizer count 2^{m+1} at m=1


def test_count_real_closed_form():
    for n in range(1, 9):
        exps = two_adic(n)
        expected = 1 << (sum(exps) + len(exps))
        for q in (3, 5, 7, 9, 11):
            for kappa in ("+", "-"):
                assert count_real_odd(n, q, kappa) == expected


def test_conjugation_fixed_labels_are_galois_fixed():
    for q, kappa in [(5, "+"), (3, "-")]:
        mod = q - 1 if kappa == "+" else q + 1
        sigmas = [i for i in range(1, mod) if math.gcd(i, mod) == 1]
        for omega in enumerate_omega_labels(6, q, kappa):
            if galois_act(-1, omega) != omega:
                continue
            assert all((2 * s) % mod == 0 for _, s, _ in omega.blocks)
            for i in sigmas:
                assert galois_act(i, omega) == omega

import pytest
from hypothesis import given, settings, strategies as st

from oddchar.errors import DomainError, TheoremViolationError
from oddchar.characters import branch_restrict, is_odd_partition, odd_partitions
from oddchar.partitions import HookPartition, Partition, partitions, two_adic
from oddchar.permgroups import restriction_multiplicities, sylow2_subgroup
from oddchar.sym import (
    SylowLinearLabel,
    ThetaLabel,
    alpha_sn,
    alpha_sn_inverse,
    bits_to_hook,
    count_odd_irr_sn,
    hook_to_bits,
    sharp_sn,
    sharp_sn_inverse,
    star_sn,
    theorem_d_star,
    wreath_index_is_odd,
    wreath_odd_labels,
    young_star,
)


# ---------------------------------------------------------------- star

def test_star_examples():
    assert star_sn(Partition((6,))) == Partition((5,))
    assert star_sn(Partition((2, 2, 1))) == Partition((2, 1, 1))
    assert star_sn(Partition((1, 1, 1))) == Partition((1, 1))
    with pytest.raises(DomainError):
        star_sn(Partition((2, 2)))


def test_star_uniqueness_sweep():
    for n in range(2, 13):
        for lam in odd_partitions(n):
            odd = [mu for mu in branch_restrict(lam) if is_odd_partition(mu)]
            assert len(odd) == 1
            assert star_sn(lam) == odd[0]


def test_star_bijective_for_odd_n():
    for n in (3, 5, 7, 9, 11):
        images = {star_sn(lam) for lam in odd_partitions(n)}
        assert images == set(odd_partitions(n - 1))


# ---------------------------------------------------------------- alpha

def test_alpha_examples():
    for e in range(1, 5):
        n = 1 << e
        for leg in range(n):
            lam = HookPartition(n, leg).to_partition()
            assert alpha_sn(lam) == ThetaLabel((HookPartition(n, leg),))
    assert alpha_sn(Partition((2, 2, 1))) == ThetaLabel(
        (HookPartition(4, 2), HookPartition(1, 0))
    )
    # (4,1) has degree 4, so the one-row partition is the n=5 case whose
    # top hook is the full row: stripping (5) leaves (1)
    assert not is_odd_partition(Partition((4, 1)))
    assert alpha_sn(Partition((5,))) == ThetaLabel(
        (HookPartition(4, 0), HookPartition(1, 0))
    )


def test_alpha_bijection_and_inverse():
    for n in range(1, 17):
        odd = odd_partitions(n)
        assert len(odd) == count_odd_irr_sn(n)
        images = set()
        for lam in odd:
            theta = alpha_sn(lam)
            assert alpha_sn_inverse(theta) == lam
            images.add(theta)
        assert len(images) == count_odd_irr_sn(n)
        # the image is the whole coordinate space
        sizes = [1 << e for e in two_adic(n)]
        assert images == {
            theta
            for theta in _all_thetas(sizes)
        }


def _all_thetas(sizes):
    if not sizes:
        return {ThetaLabel(())}
    out = set()
    for theta in _all_thetas(sizes[1:]):
        for leg in range(sizes[0]):
            out.add(ThetaLabel((HookPartition(sizes[0], leg),) + theta.hooks))
    return out


def test_alpha_inverse_enumeration_n6():
    labels = _all_thetas([4, 2])
    images = {alpha_sn_inverse(theta) for theta in labels}
    assert images == set(odd_partitions(6))
    assert len(images) == 8


# ---------------------------------------------------------------- sharp

def test_hook_bits_roundtrip():
    for e in range(0, 6):
        seen = set()
        for leg in range(1 << e):
            bits = hook_to_bits(e, leg)
            assert len(bits) == e
            assert bits_to_hook(bits) == HookPartition(1 << e, leg)
            seen.add(bits)
        assert len(seen) == 1 << e


def test_sharp_examples():
    assert sharp_sn(Partition((2,))) == SylowLinearLabel(((2, (0,)),))
    label = sharp_sn(Partition((3, 1)))
    group = sylow2_subgroup(4)
    named = tuple(label.value(g) for g in group.generators)
    mults = restriction_multiplicities(Partition((3, 1)), group)
    assert [v for v, m in mults if m % 2] == [named]


def test_sharp_block_uniqueness_two_powers():
    """Defining property at 2-power degree: unique odd linear multiplicity."""
    for n in (2, 4, 8):
        group = sylow2_subgroup(n)
        seen = set()
        for lam in odd_partitions(n):
            label = sharp_sn(lam)
            named = tuple(label.value(g) for g in group.generators)
            odd_at = [v for v, m in restriction_multiplicities(lam, group) if m % 2]
            assert odd_at == [named], lam
            seen.add(named)
        assert len(seen) == n


def test_sharp_is_constituent_all_n():
    """The sharp label is a constituent of the restriction for every n <= 8.

    Its multiplicity need not be one (at n = 7 four labels occur twice), and
    uniqueness of odd linear multiplicity holds only at 2-power n; composite
    n genuinely have several odd-multiplicity linear constituents.
    """
    for n in range(2, 9):
        group = sylow2_subgroup(n)
        for lam in odd_partitions(n):
            label = sharp_sn(lam)
            named = tuple(label.value(g) for g in group.generators)
            mults = dict(restriction_multiplicities(lam, group))
            assert mults[named] >= 1, (n, lam)


def test_sharp_composite_counterexample_is_real():
    """n = 5, lambda = (3,2): the trivial character has multiplicity exactly 1."""
    group = sylow2_subgroup(5)
    mults = dict(restriction_multiplicities(Partition((3, 2)), group))
    trivial = tuple(1 for _ in group.generators)
    assert mults[trivial] == 1
    odd_count = sum(1 for m in mults.values() if m % 2)
    assert odd_count == 3


def test_sharp_bijective_and_inverse():
    for n in range(1, 13):
        odd = odd_partitions(n)
        labels = {sharp_sn(lam) for lam in odd}
        assert len(labels) == len(odd)
        for lam in odd:
            assert sharp_sn_inverse(sharp_sn(lam)) == lam


# ---------------------------------------------------------------- young star

def test_young_star_examples():
    lam = Partition((2, 2, 1))
    assert young_star(lam, [5]) == [lam]
    assert young_star(Partition((3,)), [1, 2]) == [Partition((1,)), Partition((2,))]
    assert young_star(lam, [1, 4]) == [Partition((1,)), Partition((2, 1, 1))]
    with pytest.raises(DomainError):
        young_star(Partition((2, 2)), [2, 2])  # even character
    with pytest.raises(DomainError):
        young_star(Partition((3, 1)), [2, 2])  # even-index Young subgroup


def test_young_star_bijective():
    for n, blocks in [(3, [1, 2]), (5, [1, 4]), (6, [2, 4]), (7, [1, 2, 4]), (7, [3, 4])]:
        images = set()
        for lam in odd_partitions(n):
            psis = tuple(young_star(lam, blocks))
            for psi, k in zip(psis, blocks):
                assert psi.n == k and is_odd_partition(psi)
            images.add(psis)
        expected = 1
        for k in blocks:
            expected *= count_odd_irr_sn(k)
        assert len(images) == expected == count_odd_irr_sn(n)


def test_young_star_consistent_with_alpha_on_two_power_blocks():
    # splitting along the 2-adic blocks themselves recovers the alpha hooks
    for n in (5, 6, 7, 12):
        blocks = [1 << e for e in two_adic(n)]
        for lam in odd_partitions(n):
            theta = alpha_sn(lam)
            psis = young_star(lam, blocks)
            assert [HookPartition.from_partition(p) for p in psis] == list(theta.hooks)


def test_s7_young_restriction_counterexample():
    """Both degree-35 characters of S_7 have three odd constituents on S_5 x S_2."""
    from oddchar.characters import degree, lr_coefficient

    for lam in (Partition((4, 2, 1)), Partition((3, 2, 1, 1))):
        assert degree(lam) == 35
        count = sum(
            1
            for mu in partitions(5)
            for nu in partitions(2)
            if lr_coefficient(mu, nu, lam) > 0 and degree(mu) * degree(nu) % 2 == 1
        )
        assert count == 3


# ---------------------------------------------------------------- theorem D

def test_wreath_index_parity():
    assert wreath_index_is_odd(2, 2)
    assert not wreath_index_is_odd(3, 2)
    assert wreath_index_is_odd(2, 3)
    assert wreath_index_is_odd(4, 2)
    assert wreath_index_is_odd(2, 4)


def test_theorem_d_examples():
    label = theorem_d_star(Partition((4,)), 2, 2)
    assert label.base == ((Partition((2,)), 2),)
    assert label.top == (Partition((2,)),)
    with pytest.raises(DomainError):
        theorem_d_star(Partition((4, 1, 1)), 3, 2)  # even index


def test_theorem_d_bijections():
    for k, t in [(2, 2), (2, 3), (4, 2), (2, 4), (1, 5), (8, 1)]:
        n = k * t
        odd = odd_partitions(n)
        images = [theorem_d_star(lam, k, t) for lam in odd]
        assert len(set(images)) == len(odd)
        target = wreath_odd_labels(k, t)
        assert len(target) == count_odd_irr_sn(n)
        assert set(images) == set(target)


def test_theorem_d_d8_identity():
    # S_2 wr S_2 is the Sylow 2-subgroup of S_4 itself: the correspondent
    # must agree with sharp (base bit from the base pair, top bit from the swap)
    group = sylow2_subgroup(4)
    for lam in odd_partitions(4):
        label = theorem_d_star(lam, 2, 2)
        psi, _ = label.base[0]
        alpha = label.top[0]
        sharp = sharp_sn(lam)
        bits = sharp.blocks[0][1]
        assert psi == sharp_sn_inverse(SylowLinearLabel(((2, bits[:1]),)))
        assert alpha == sharp_sn_inverse(SylowLinearLabel(((2, bits[1:]),)))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_theorem_d_label_wellformed(data):
    k, t = data.draw(st.sampled_from([(2, 2), (2, 3), (4, 2), (2, 4)]))
    lam = data.draw(st.sampled_from(odd_partitions(k * t)))
    label = theorem_d_star(lam, k, t)
    assert label.k == k and label.t == t
    assert sum(ti for _, ti in label.base) == t

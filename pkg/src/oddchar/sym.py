"""Canonical odd-degree correspondences for symmetric groups.

The star map (unique odd branch), the hook-tuple coordinates of odd
partitions, the linear-character labels of Sylow 2-subgroups, the Young
subgroup correspondence and the wreath-product correspondence for maximal
subgroups of odd index.

Linear characters of the iterated wreath tower on 2**m points are encoded by
m bits, one per tower level (bit 0 = pair level). The hook <-> bits rule is
the reflected-Gray-code of the leg length with bit 0 taken from the top Gray
bit; it is pinned against the restriction oracle (see tests), which is the
defining property: the labeled character is the unique linear constituent of
odd multiplicity in the restriction of the hook character.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, TheoremViolationError
from .partitions import (
    HookPartition,
    Partition,
    attach_unique_gamma,
    nu2,
    odd_multinomial_order,
    rim_hooks_of_length,
    two_adic,
)
from .characters import is_odd_partition, branch_restrict, odd_partitions

__all__ = [
    "ThetaLabel",
    "SylowLinearLabel",
    "WreathOddLabel",
    "star_sn",
    "alpha_sn",
    "alpha_sn_inverse",
    "hook_to_bits",
    "bits_to_hook",
    "sharp_sn",
    "sharp_sn_inverse",
    "count_odd_irr_sn",
    "young_star",
    "wreath_index_is_odd",
    "theorem_d_star",
    "wreath_odd_labels",
]


@dataclass(frozen=True)
class ThetaLabel:
    """One hook per 2-adic block of n, blocks in decreasing size."""

    hooks: tuple

    def __post_init__(self):
        sizes = tuple(h.m for h in self.hooks)
        if sizes != tuple(1 << e for e in two_adic(sum(sizes))):
            raise DomainError(f"block sizes {sizes} are not a 2-adic decomposition")

    @property
    def n(self):
        return sum(h.m for h in self.hooks)

    def to_json(self):
        return [h.to_json() for h in self.hooks]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(HookPartition.from_json(h) for h in data))


@dataclass(frozen=True)
class SylowLinearLabel:
    """Per 2-adic block of n, one bit per wreath-tower level (bit 0 = pairs)."""

    blocks: tuple  # of (block size, bits tuple)

    def __post_init__(self):
        sizes = tuple(size for size, _ in self.blocks)
        if sizes != tuple(1 << e for e in two_adic(sum(sizes))):
            raise DomainError(f"block sizes {sizes} are not a 2-adic decomposition")
        for size, bits in self.blocks:
            if len(bits) != size.bit_length() - 1 or any(b not in (0, 1) for b in bits):
                raise DomainError(f"bad bit vector {bits} for block size {size}")

    @property
    def n(self):
        return sum(size for size, _ in self.blocks)

    def value(self, perm):
        """Evaluate the labeled linear character on an element of sylow2_subgroup(n)."""
        if len(perm) != self.n:
            raise DomainError(f"degree mismatch: {len(perm)} vs {self.n}")
        sign = 1
        offset = 0
        for size, bits in self.blocks:
            local = [perm[offset + i] - offset for i in range(size)]
            if any(not 0 <= x < size for x in local):
                raise DomainError("permutation does not preserve the 2-adic blocks")
            for level_bit in bits:
                reversals = 0
                nxt = []
                for i in range(len(local) // 2):
                    a, b = local[2 * i], local[2 * i + 1]
                    if a >> 1 != b >> 1:
                        raise DomainError("permutation does not preserve the pair tower")
                    reversals ^= a & 1
                    nxt.append(a >> 1)
                if level_bit and reversals:
                    sign = -sign
                local = nxt
            offset += size
        return sign

    def to_json(self):
        return [{"size": size, "bits": list(bits)} for size, bits in self.blocks]

    @classmethod
    def from_json(cls, data):
        return cls(tuple((int(b["size"]), tuple(int(x) for x in b["bits"])) for b in data))


@dataclass(frozen=True)
class WreathOddLabel:
    """Odd-degree label of a wreath product S_k wr S_t of odd index.

    base lists the distinct odd partitions of k with their multiplicities t_i,
    in strictly increasing 2-part of t_i; top gives one odd partition of each
    t_i.
    """

    k: int
    t: int
    base: tuple  # of (Partition of k, t_i)
    top: tuple  # of Partition of t_i

    def __post_init__(self):
        if sum(t for _, t in self.base) != self.t:
            raise DomainError("multiplicities must sum to t")
        vals = [nu2(t) for _, t in self.base]
        if any(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)):
            raise DomainError("multiplicities must have strictly increasing 2-parts")
        psis = [psi for psi, _ in self.base]
        if len(set(psis)) != len(psis):
            raise DomainError("base partitions must be pairwise distinct")
        for psi in psis:
            if psi.n != self.k or not is_odd_partition(psi):
                raise DomainError(f"{psi} is not an odd partition of {self.k}")
        if len(self.top) != len(self.base):
            raise DomainError("need one top partition per base entry")
        for alpha, (_, t_i) in zip(self.top, self.base):
            if alpha.n != t_i or not is_odd_partition(alpha):
                raise DomainError(f"{alpha} is not an odd partition of {t_i}")

    def to_json(self):
        return {
            "k": self.k,
            "t": self.t,
            "base": [{"psi": psi.to_json(), "t": t} for psi, t in self.base],
            "top": [alpha.to_json() for alpha in self.top],
        }


def star_sn(lam):
    """The unique odd-degree branch of an odd partition."""
    if lam.n < 2:
        raise DomainError("need n >= 2")
    if not is_odd_partition(lam):
        raise DomainError(f"{lam} is not an odd partition")
    odd = [mu for mu in branch_restrict(lam) if is_odd_partition(mu)]
    if len(odd) != 1:
        raise TheoremViolationError(f"{lam} has {len(odd)} odd branches")
    return odd[0]


def alpha_sn(lam):
    """Strip the unique rim hook of each 2-power block size, largest first."""
    if not is_odd_partition(lam):
        raise DomainError(f"{lam} is not an odd partition")
    hooks = []
    cur = lam
    for e in two_adic(lam.n):
        found = rim_hooks_of_length(cur, 1 << e)
        if len(found) != 1:
            raise TheoremViolationError(
                f"{cur} has {len(found)} rim hooks of length {1 << e}"
            )
        _, hook_type, cur = found[0]
        hooks.append(hook_type)
    if cur.n != 0:
        raise TheoremViolationError(f"nonempty remainder {cur} after stripping {lam}")
    return ThetaLabel(tuple(hooks))


def alpha_sn_inverse(theta):
    """Reattach hooks from the smallest block upward; inverse of alpha_sn."""
    cur = Partition()
    for hook in reversed(theta.hooks):
        cur = attach_unique_gamma(cur, hook, cur.n + hook.m)
    if not is_odd_partition(cur):
        raise TheoremViolationError(f"reattachment of {theta} is not odd: {cur}")
    return cur


def hook_to_bits(exponent, leg):
    """Tower-level bits of the hook with the given leg in H(2**exponent).

    Reflected Gray code of the leg, highest Gray bit at the pair level.
    """
    if not 0 <= leg < 1 << exponent:
        raise DomainError(f"leg {leg} out of range for block 2^{exponent}")
    gray = leg ^ (leg >> 1)
    return tuple((gray >> (exponent - 1 - i)) & 1 for i in range(exponent))


def bits_to_hook(bits):
    """Inverse of hook_to_bits."""
    exponent = len(bits)
    gray = 0
    for i, b in enumerate(bits):
        gray |= b << (exponent - 1 - i)
    leg = 0
    while gray:
        leg ^= gray
        gray >>= 1
    return HookPartition(1 << exponent, leg)


def sharp_sn(lam):
    """Linear-character label of the Sylow 2-subgroup attached to an odd partition."""
    theta = alpha_sn(lam)
    return SylowLinearLabel(
        tuple((h.m, hook_to_bits(h.m.bit_length() - 1, h.leg)) for h in theta.hooks)
    )


def sharp_sn_inverse(label):
    """The odd partition whose sharp label is the given one."""
    return alpha_sn_inverse(
        ThetaLabel(tuple(bits_to_hook(bits) for _, bits in label.blocks))
    )


def count_odd_irr_sn(n):
    """Closed-form count 2**(n_1 + ... + n_r) of odd partitions of n."""
    if n < 1:
        raise DomainError("n must be positive")
    return 1 << sum(two_adic(n))


def _block_ownership(n, sizes):
    """Assign each 2-adic block of n to the unique member of sizes holding its digit."""
    owners = {}
    for idx, k in enumerate(sizes):
        for e in two_adic(k):
            if e in owners:
                raise DomainError(f"sizes {sizes} do not partition the digits of {n}")
            owners[e] = idx
    if set(owners) != set(two_adic(n)):
        raise DomainError(f"sizes {sizes} do not partition the digits of {n}")
    return owners


def young_star(lam, blocks):
    """Per-factor odd partitions for a Young subgroup of odd index.

    Splits the sharp label of lam into one Sylow factor per block size (each
    block is a union of 2-adic blocks of n) and inverts sharp on each factor.
    Results follow the input block order.
    """
    blocks = list(blocks)
    if odd_multinomial_order(blocks) is None:
        raise DomainError(f"Young subgroup {blocks} does not have odd index")
    if sum(blocks) != lam.n:
        raise DomainError(f"blocks sum to {sum(blocks)}, need {lam.n}")
    label = sharp_sn(lam)
    owners = _block_ownership(lam.n, blocks)
    per_factor = [[] for _ in blocks]
    for size, bits in label.blocks:
        per_factor[owners[size.bit_length() - 1]].append((size, bits))
    out = []
    for k, factor_blocks in zip(blocks, per_factor):
        factor = SylowLinearLabel(tuple(factor_blocks))
        assert factor.n == k
        out.append(sharp_sn_inverse(factor))
    return out


def wreath_index_is_odd(k, t):
    """Exact-arithmetic parity of the index of S_k wr S_t in S_{kt}."""
    if k < 1 or t < 1:
        raise DomainError("k and t must be positive")
    index, rem = divmod(
        math.factorial(k * t), math.factorial(k) ** t * math.factorial(t)
    )
    assert rem == 0
    return index % 2 == 1


def theorem_d_star(lam, k, t):
    """Wreath-product correspondent of an odd partition of n = k*t.

    Requires odd index. The sharp label of lam is read through the wreath
    structure of the Sylow 2-subgroup: within each 2-adic block of t the
    bottom tower levels give the base-character label on one S_k factor and
    the remaining levels give the top label; grouping blocks by equal base
    label and inverting sharp per factor yields the (base, top) label pair.
    """
    n = k * t
    if lam.n != n:
        raise DomainError(f"partition of {lam.n}, need {n}")
    if not is_odd_partition(lam):
        raise DomainError(f"{lam} is not an odd partition")
    if not wreath_index_is_odd(k, t):
        raise DomainError(f"S_{k} wr S_{t} does not have odd index in S_{n}")
    if t == 1:
        return WreathOddLabel(k, 1, ((lam, 1),), (Partition((1,)),))
    if k & (k - 1):
        raise TheoremViolationError(f"odd index with t >= 2 forces a 2-power k, got {k}")
    c = k.bit_length() - 1
    label = sharp_sn(lam)
    fibers = {}
    for (size, bits), e in zip(label.blocks, two_adic(t)):
        assert size == k << e
        fibers.setdefault(bits[:c], []).append((e, bits[c:]))
    base = []
    top = []
    for base_bits, members in sorted(
        fibers.items(), key=lambda item: min(e for e, _ in item[1])
    ):
        t_i = sum(1 << e for e, _ in members)
        if c:
            psi = sharp_sn_inverse(SylowLinearLabel(((k, base_bits),)))
        else:
            psi = Partition((1,))
        alpha = sharp_sn_inverse(
            SylowLinearLabel(tuple((1 << e, bits) for e, bits in members))
        )
        base.append((psi, t_i))
        top.append(alpha)
    return WreathOddLabel(k, t, tuple(base), tuple(top))


def wreath_odd_labels(k, t):
    """Clifford enumeration of the odd-degree labels of S_k wr S_t (odd index)."""
    if not wreath_index_is_odd(k, t):
        raise DomainError(f"S_{k} wr S_{t} does not have odd index in S_{k * t}")
    odd_k = odd_partitions(k)
    blocks = two_adic(t)
    labels = []

    def assign(idx, fibers):
        if idx == len(blocks):
            groups = sorted(fibers.items(), key=lambda item: min(item[1]))
            tops = [odd_partitions(sum(1 << e for e in exps)) for _, exps in groups]

            def choose(gi, acc):
                if gi == len(groups):
                    base = tuple(
                        (psi, sum(1 << e for e in exps)) for psi, exps in groups
                    )
                    labels.append(WreathOddLabel(k, t, base, tuple(acc)))
                    return
                for alpha in tops[gi]:
                    choose(gi + 1, acc + [alpha])

            choose(0, [])
            return
        for psi in odd_k:
            fibers.setdefault(psi, []).append(blocks[idx])
            assign(idx + 1, fibers)
            fibers[psi].pop()
            if not fibers[psi]:
                del fibers[psi]

    assign(0, {})
    return labels

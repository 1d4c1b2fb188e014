"""Partitions, hooks, rim hooks, m-cores and 2-adic arithmetic.

Everything here is exact integer combinatorics on immutable values; all
functions are pure and safe to call from parallel sweeps.
"""

import math
from dataclasses import dataclass
from functools import cache

from .errors import DomainError, TheoremViolationError

__all__ = [
    "Partition",
    "HookPartition",
    "RimHook",
    "two_adic",
    "nu2",
    "binom_is_odd",
    "odd_multinomial_order",
    "unique_descent",
    "rim_hooks_of_length",
    "m_core",
    "attach_unique_gamma",
    "partitions",
]


class Partition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def row(self, i):
        """Length of row i (1-indexed), 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self):
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other):
        """Containment of Young diagrams."""
        return all(self.row(i + 1) >= p for i, p in enumerate(other.parts))

    def hook_length(self, i, j):
        """Hook length at cell (i, j), 1-indexed; cell must lie in the diagram."""
        arm = self.row(i) - j
        leg = self.conjugate().row(j) - i
        return arm + leg + 1

    def is_hook(self):
        return self.n == 0 or len(self.parts) == 1 or self.parts[1] == 1

    def to_json(self):
        return list(self.parts)

    @classmethod
    def from_json(cls, data):
        return cls(data)


@dataclass(frozen=True)
class HookPartition:
    """The hook (m - leg, 1^leg), encoded by total size and leg length."""

    m: int
    leg: int

    def __post_init__(self):
        if self.m < 1 or not (0 <= self.leg <= self.m - 1):
            raise DomainError(f"need 0 <= leg <= m-1, got m={self.m}, leg={self.leg}")

    @property
    def arm_count(self):
        """Number of columns of the hook, i.e. the first part."""
        return self.m - self.leg

    def to_partition(self):
        return Partition((self.m - self.leg,) + (1,) * self.leg)

    @classmethod
    def from_partition(cls, p):
        if p.n == 0 or not p.is_hook():
            raise DomainError(f"{p} is not a nonempty hook")
        return cls(p.n, len(p.parts) - 1)

    def to_json(self):
        return {"m": self.m, "leg": self.leg}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["m"]), int(data["leg"]))


@dataclass(frozen=True)
class RimHook:
    """A removable border strip: contiguous rim cells with no 2x2 block."""

    cells: tuple
    length: int
    rows_spanned: int
    cols_spanned: int

    def hook_type(self):
        """Hook partition of the same shape class: arm count = columns spanned."""
        return HookPartition(self.length, self.rows_spanned - 1)


def two_adic(n):
    """Exponents of the set bits of n, descending; () for n = 0."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return tuple(e for e in range(n.bit_length() - 1, -1, -1) if (n >> e) & 1)


def nu2(r):
    """The 2-part of r: largest power of 2 dividing r, with nu2(0) = infinity."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    if r == 0:
        return math.inf
    return r & -r


def binom_is_odd(n, a):
    """Parity of C(n, a): odd iff the bits of a are dominated by the bits of n."""
    if not 0 <= a <= n:
        raise DomainError(f"need 0 <= a <= n, got n={n}, a={a}")
    return (a & n) == a


def odd_multinomial_order(parts):
    """Reorder parts so the 2-parts strictly increase, if the multinomial is odd.

    Returns the unique reordering [a_1, ..., a_m] with
    nu2(sum) = nu2(a_1) < nu2(a_2) < ... when (sum)!/prod(a_i!) is odd,
    and None otherwise.
    """
    parts = list(parts)
    if not parts or any(a < 1 for a in parts):
        raise DomainError("parts must be a nonempty list of positive integers")
    remaining = sum(parts)
    for a in parts:
        if not binom_is_odd(remaining, a):
            return None
        remaining -= a
    ordered = sorted(parts, key=nu2)
    vals = [nu2(a) for a in ordered]
    assert all(vals[i] < vals[i + 1] for i in range(len(vals) - 1))
    assert vals[0] == nu2(sum(parts))
    return ordered


def unique_descent(n, a):
    """The unique c in {a-1, a} with C(n-1, c) odd, given that C(n, a) is odd."""
    if not 0 < a < n:
        raise DomainError(f"need 0 < a < n, got n={n}, a={a}")
    if not binom_is_odd(n, a):
        raise DomainError(f"C({n},{a}) is even")
    lo = binom_is_odd(n - 1, a - 1)
    hi = binom_is_odd(n - 1, a)
    if lo == hi:
        raise TheoremViolationError(f"descent from C({n},{a}) not unique")
    return a - 1 if lo else a


def _rim_cells(parts, i, j, l):
    """Cells of the rim hook attached to corner (i, j), ending in row l."""
    cells = []
    for t in range(i, l):
        right = parts[t - 1]
        left = parts[t]  # row t+1 exists because t < l <= len(parts)
        cells.extend((t, c) for c in range(left, right + 1))
    cells.extend((l, c) for c in range(j, parts[l - 1] + 1))
    return tuple(cells)


def rim_hooks_of_length(lam, m):
    """All removable rim hooks of length m of lam.

    Each diagram cell whose hook length is m yields exactly one rim m-hook;
    returns (RimHook, hook type, partition after removal) triples in reading
    order of the corner cells.
    """
    if m < 1:
        raise DomainError("m must be positive")
    out = []
    conj = lam.conjugate()
    for i in range(1, len(lam.parts) + 1):
        for j in range(1, lam.parts[i - 1] + 1):
            arm = lam.parts[i - 1] - j
            leg = conj.parts[j - 1] - i
            if arm + leg + 1 != m:
                continue
            l = i + leg
            cells = _rim_cells(lam.parts, i, j, l)
            hook = RimHook(cells, m, leg + 1, arm + 1)
            rest = list(lam.parts)
            for t in range(i, l):
                rest[t - 1] = lam.parts[t] - 1
            rest[l - 1] = j - 1
            remainder = Partition([p for p in rest if p > 0])
            assert remainder.n == lam.n - m
            out.append((hook, hook.hook_type(), remainder))
    return out


def m_core(lam, m):
    """Strip rim m-hooks until none remain; the result is removal-order independent."""
    if m < 1:
        raise DomainError("m must be positive")
    cur = lam
    while True:
        hooks = rim_hooks_of_length(cur, m)
        if not hooks:
            return cur
        cur = hooks[0][2]


def _attach_first_row(alpha, k, h):
    """Attach a rim hook spanning rows 1..h whose removal leaves alpha."""
    parts = [alpha.row(h) + k]
    parts.extend(alpha.row(t - 1) + 1 for t in range(2, h + 1))
    parts.extend(alpha.parts[h:])
    return Partition(parts)


def attach_unique_gamma(alpha, beta, n, *, cross_check=False):
    """The unique gamma of n with a removable rim hook of type beta leaving alpha.

    Requires m <= n <= 2m-1 for m = beta.m, which forces the hook corner into
    the first row or first column; the three construction cases follow the
    geometry of the outer rim of alpha.
    """
    m = beta.m
    if not m <= n <= 2 * m - 1:
        raise DomainError(f"need m <= n <= 2m-1, got m={m}, n={n}")
    if alpha.n != n - m:
        raise DomainError(f"alpha must have size n-m={n - m}, got {alpha.n}")
    k = beta.arm_count
    h = m - k + 1
    r = len(alpha.parts)
    if h <= r or k > alpha.row(1):
        # hook corner in the first row (covers alpha = () as well)
        gamma = _attach_first_row(alpha, k, h)
    else:
        # corner in the first column: conjugate reduces to the first-row case
        conj_beta = HookPartition(m, k - 1)
        gamma = attach_unique_gamma(alpha.conjugate(), conj_beta, n).conjugate()
    if gamma.n != n:
        raise TheoremViolationError(f"attachment produced wrong size for {alpha}, {beta}")
    if cross_check:
        matches = [
            g
            for g in partitions(n)
            for _, typ, rest in rim_hooks_of_length(g, m)
            if typ == beta and rest == alpha
        ]
        if matches != [gamma]:
            raise TheoremViolationError(
                f"brute-force census disagrees: {matches} vs {gamma}"
            )
    return gamma


@cache
def _partition_tuples(n, max_part):
    if n == 0:
        return ((),)
    out = []
    for head in range(min(n, max_part), 0, -1):
        out.extend((head,) + tail for tail in _partition_tuples(n - head, head))
    return tuple(out)


def partitions(n, max_part=None):
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if max_part is None:
        max_part = n
    return [Partition(t) for t in _partition_tuples(n, max_part)]

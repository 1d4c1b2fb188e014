"""Brute-force character oracles for symmetric groups.

Exact arbitrary-precision arithmetic throughout: hook-length degrees,
Murnaghan-Nakayama values, branching and Littlewood-Richardson coefficients.
These are the independent checks against which every correspondence is
validated, so none of them may share code paths with the maps they test.
"""

import math
from functools import cache

from .errors import DomainError
from .partitions import Partition, partitions, rim_hooks_of_length

__all__ = [
    "CycleType",
    "degree",
    "is_odd_partition",
    "odd_partitions",
    "mn_value",
    "branch_restrict",
    "lr_coefficient",
    "class_size",
]

# A cycle type is just a partition read as the multiset of cycle lengths.
CycleType = Partition


@cache
def _degree(parts):
    lam = Partition(parts)
    d = math.factorial(lam.n)
    conj = lam.conjugate()
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            d //= p - j + conj.parts[j - 1] - i + 1
    return d


def degree(lam):
    """Degree of the irreducible character of the symmetric group labeled by lam."""
    return _degree(lam.parts)


def is_odd_partition(lam):
    """True iff degree(lam) is odd."""
    return degree(lam) % 2 == 1


def odd_partitions(n):
    """Census of odd partitions of n by the degree-parity oracle."""
    return [lam for lam in partitions(n) if is_odd_partition(lam)]


@cache
def _mn(lam_parts, mu_parts):
    if not mu_parts:
        return 1
    lam = Partition(lam_parts)
    c, rest = mu_parts[0], mu_parts[1:]
    total = 0
    for hook, _, remainder in rim_hooks_of_length(lam, c):
        total += (-1) ** (hook.rows_spanned - 1) * _mn(remainder.parts, rest)
    return total


def mn_value(lam, mu):
    """Character value at the class of cycle type mu, by rim-hook recursion."""
    if lam.n != mu.n:
        raise DomainError(f"sizes differ: {lam.n} vs {mu.n}")
    return _mn(lam.parts, mu.parts)


def branch_restrict(lam):
    """All partitions obtained from lam by removing one removable cell."""
    if lam.n < 1:
        raise DomainError("need a partition of n >= 1")
    out = []
    parts = lam.parts
    for i in range(len(parts) - 1, -1, -1):
        if i + 1 == len(parts) or parts[i + 1] < parts[i]:
            row = list(parts)
            row[i] -= 1
            out.append(Partition([x for x in row if x > 0]))
    return out


def class_size(mu):
    """Size of the conjugacy class of cycle type mu in the symmetric group."""
    n = mu.n
    size = math.factorial(n)
    for length in set(mu.parts):
        count = mu.parts.count(length)
        size //= length**count * math.factorial(count)
    return size


def lr_coefficient(alpha, beta, gamma):
    """Littlewood-Richardson coefficient c^gamma_{alpha,beta}.

    Counts semistandard skew tableaux of shape gamma/alpha and content beta
    whose reverse reading word is a lattice word. Returns 0 when the sizes or
    diagrams are incompatible.
    """
    if alpha.n + beta.n != gamma.n or not gamma.contains(alpha):
        return 0
    if beta.n == 0:
        return 1
    nrows = len(gamma.parts)
    content = list(beta.parts)
    m = len(content)
    # cells in reverse reading order: rows top to bottom, right to left
    cells = [
        (r, c)
        for r in range(1, nrows + 1)
        for c in range(gamma.row(r), alpha.row(r), -1)
    ]
    filling = {}
    counts = [0] * (m + 1)

    def backtrack(pos):
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        right = filling.get((r, c + 1), m)  # row weakly increases to the right
        above = filling.get((r - 1, c), 0)  # column strictly increases downward
        total = 0
        for v in range(above + 1, right + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += backtrack(pos + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return backtrack(0)

"""Label algebra for odd-degree characters of general linear and unitary groups.

A character label is a multiset of (semisimple residue, partition) pairs with
pairwise distinct residues modulo q - kappa*1; residues are exponents of a
fixed generator of the cyclic group of that order. Degree parity is read off
the symmetric-group side, so everything here is partition combinatorics plus
modular arithmetic on residues.
"""

from dataclasses import dataclass
from itertools import permutations as _permutations

from .errors import DomainError, TheoremViolationError
from .partitions import Partition, nu2, odd_multinomial_order, two_adic
from .characters import is_odd_partition, odd_partitions
from .sym import star_sn

__all__ = [
    "GLabel",
    "ParabolicCorrespondent",
    "is_prime_power_odd",
    "is_odd_label",
    "canonical_order",
    "parabolic_star",
    "enumerate_odd_labels",
    "count_odd_irr_gl",
    "sl_correspondence_data",
    "sl_label_census",
    "levi_star",
]


def is_prime_power_odd(q):
    """True iff q is a power of an odd prime."""
    if q < 3 or q % 2 == 0:
        return False
    p = 3
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 2
    return True  # q itself is an odd prime


def char_prime(q):
    """The prime p with q a power of p."""
    if not is_prime_power_odd(q):
        raise DomainError(f"q={q} is not an odd prime power")
    p = 3
    while p * p <= q:
        if q % p == 0:
            return p
        p += 2
    return q


@dataclass(frozen=True)
class GLabel:
    """Dipper-James style label: kappa, q and (residue, partition) pairs.

    kappa is '+' for the linear and '-' for the unitary family; residues live
    modulo q - 1 resp. q + 1 and must be pairwise distinct. Pairs are kept
    sorted by (residue) for a canonical hashable form.
    """

    kappa: str
    q: int
    pairs: tuple  # of (residue, Partition)

    def __post_init__(self):
        if self.kappa not in ("+", "-"):
            raise DomainError(f"kappa must be '+' or '-', got {self.kappa!r}")
        if not is_prime_power_odd(self.q):
            raise DomainError(f"q={self.q} is not an odd prime power")
        mod = self.modulus
        residues = [s for s, _ in self.pairs]
        if any(not 0 <= s < mod for s in residues):
            raise DomainError(f"residues must lie in [0, {mod})")
        if len(set(residues)) != len(residues):
            raise DomainError("residues must be pairwise distinct")
        if any(lam.n == 0 for _, lam in self.pairs):
            raise DomainError("empty partitions are not allowed in labels")
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs, key=lambda p: p[0])))

    @property
    def modulus(self):
        return self.q - 1 if self.kappa == "+" else self.q + 1

    @property
    def n(self):
        return sum(lam.n for _, lam in self.pairs)

    def to_json(self):
        return {
            "kappa": self.kappa,
            "q": self.q,
            "pairs": [{"s": s, "lambda": lam.to_json()} for s, lam in self.pairs],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["kappa"],
            int(data["q"]),
            tuple((int(p["s"]), Partition.from_json(p["lambda"])) for p in data["pairs"]),
        )


@dataclass(frozen=True)
class ParabolicCorrespondent:
    """Output of the maximal-parabolic restriction: a line pair plus a rank n-1 label."""

    line: tuple  # (residue, Partition((1,)))
    rest: GLabel

    def to_json(self):
        return {
            "line": {"s": self.line[0], "lambda": self.line[1].to_json()},
            "rest": self.rest.to_json(),
        }


def is_odd_label(label):
    """True iff every partition is odd and the sizes admit the strict 2-part chain."""
    if any(not is_odd_partition(lam) for _, lam in label.pairs):
        return False
    return odd_multinomial_order([lam.n for _, lam in label.pairs]) is not None


def canonical_order(label):
    """Pairs sorted by strictly increasing 2-part of the partition sizes."""
    if not is_odd_label(label):
        raise DomainError(f"{label} is not an odd label")
    return tuple(sorted(label.pairs, key=lambda p: nu2(p[1].n)))


def parabolic_star(label):
    """Restriction correspondent at the maximal parabolic of the linear group.

    With pairs in canonical order, replaces the first partition by its unique
    odd branch and prepends the line entry (s_1, (1)); the first pair is
    dropped entirely when its partition is (1).
    """
    if label.kappa != "+":
        raise DomainError("the parabolic correspondent is defined for kappa='+' only")
    if label.n < 2:
        raise DomainError("need rank n >= 2")
    if not is_odd_label(label):
        raise DomainError(f"{label} is not an odd label")
    ordered = canonical_order(label)
    s1, lam1 = ordered[0]
    if lam1.n == 1:
        rest_pairs = ordered[1:]
    else:
        rest_pairs = ((s1, star_sn(lam1)),) + ordered[1:]
    rest = GLabel(label.kappa, label.q, rest_pairs)
    if not is_odd_label(rest):
        raise TheoremViolationError(f"correspondent of {label} is not odd: {rest}")
    return ParabolicCorrespondent((s1, Partition((1,))), rest)


def _digit_groupings(exponents):
    """Set partitions of the 2-adic digit multiset, as tuples of digit tuples."""
    exponents = list(exponents)
    if not exponents:
        yield ()
        return
    first, rest = exponents[0], exponents[1:]
    for grouping in _digit_groupings(rest):
        yield ((first,),) + grouping
        for i, group in enumerate(grouping):
            yield grouping[:i] + ((first,) + group,) + grouping[i + 1 :]


def enumerate_odd_labels(n, q, kappa):
    """All odd labels of rank n: digit-partitioned sizes, distinct residues, odd parts."""
    if n < 1:
        raise DomainError("n must be positive")
    if kappa not in ("+", "-"):
        raise DomainError(f"kappa must be '+' or '-', got {kappa!r}")
    if not is_prime_power_odd(q):
        raise DomainError(f"q={q} is not an odd prime power")
    mod = q - 1 if kappa == "+" else q + 1
    out = []
    for grouping in _digit_groupings(two_adic(n)):
        sizes = [sum(1 << e for e in group) for group in grouping]
        choices = [odd_partitions(k) for k in sizes]
        for residues in _permutations(range(mod), len(sizes)):

            def fill(i, acc):
                if i == len(sizes):
                    out.append(GLabel(kappa, q, tuple(acc)))
                    return
                for lam in choices[i]:
                    fill(i + 1, acc + [(residues[i], lam)])

            fill(0, [])
    return out


def count_odd_irr_gl(n, q, kappa):
    """Census of odd labels by enumeration; every label is re-checked for oddness."""
    labels = enumerate_odd_labels(n, q, kappa)
    distinct = set(labels)
    if len(distinct) != len(labels):
        raise TheoremViolationError("label enumeration produced duplicates")
    for label in labels:
        if not is_odd_label(label):
            raise TheoremViolationError(f"enumerated label is not odd: {label}")
    return len(labels)


def sl_correspondence_data(label):
    """Restriction data for the special linear group at odd rank.

    Returns (irreducible_restriction, correspondent) where the flag is the
    pairwise-distinctness criterion on (k_1 - 1, k_2, ..., k_m) with a zero
    first entry dropped, and the correspondent is the rank n-1 label of the
    parabolic correspondent restricted to its Levi part.
    """
    if label.n % 2 == 0:
        raise DomainError("need odd rank n")
    corr = parabolic_star(label)
    ordered = canonical_order(label)
    sizes = [ordered[0][1].n - 1] + [lam.n for _, lam in ordered[1:]]
    sizes = [k for k in sizes if k > 0]
    flag = len(set(sizes)) == len(sizes)
    return flag, corr.rest


def sl_label_census(n, q):
    """Number of odd SL labels: orbits of simultaneous residue translation."""
    labels = enumerate_odd_labels(n, q, "+")
    mod = q - 1
    seen = set()
    orbits = 0
    for label in labels:
        if label in seen:
            continue
        orbits += 1
        for c in range(mod):
            shifted = GLabel(
                "+", q, tuple(((s + c) % mod, lam) for s, lam in label.pairs)
            )
            seen.add(shifted)
    return orbits


def levi_star(label, blocks):
    """Per-factor odd labels for a Levi subgroup of odd index.

    Splits the normalizer-side label of the character along the block sizes
    (each a union of 2-adic blocks of n) and inverts the normalizer bijection
    on each factor; results follow the input block order.
    """
    from .omega import OmegaLabel, sharp_glu, sharp_glu_inverse

    blocks = list(blocks)
    if odd_multinomial_order(blocks) is None:
        raise DomainError(f"Levi blocks {blocks} do not have odd index")
    if sum(blocks) != label.n:
        raise DomainError(f"blocks sum to {sum(blocks)}, need {label.n}")
    if not is_odd_label(label):
        raise DomainError(f"{label} is not an odd label")
    omega = sharp_glu(label)
    owners = {}
    for idx, k in enumerate(blocks):
        for e in two_adic(k):
            owners[e] = idx
    per_factor = [[] for _ in blocks]
    for entry in omega.blocks:
        size = entry[0]
        per_factor[owners[size.bit_length() - 1]].append(entry)
    out = []
    for k, factor_blocks in zip(blocks, per_factor):
        factor = OmegaLabel(label.kappa, label.q, tuple(factor_blocks))
        assert factor.n == k
        out.append(sharp_glu_inverse(factor))
    return out

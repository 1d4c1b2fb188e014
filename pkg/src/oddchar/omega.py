"""Normalizer-side coordinates for odd-degree GL/GU characters.

Odd-degree characters of the Sylow 2-normalizer are parametrized per 2-adic
block of n by a residue and a hook; the sharp bijection transports the label
algebra of the full group onto these coordinates. Galois and outer actions
move residues by exponentiation and fix all hooks, which makes equivariance
a finite check.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, TheoremViolationError
from .partitions import HookPartition, Partition, two_adic
from .sym import alpha_sn, alpha_sn_inverse, ThetaLabel
from .glu import GLabel, canonical_order, char_prime, is_odd_label, is_prime_power_odd

__all__ = [
    "OmegaLabel",
    "NormalizerLocalLabel",
    "local_to_omega",
    "omega_to_local",
    "sharp_glu",
    "sharp_glu_inverse",
    "galois_act",
    "outer_act",
    "enumerate_omega_labels",
    "count_real_odd",
]


@dataclass(frozen=True)
class OmegaLabel:
    """Per 2-adic block of n (decreasing size): a residue and a hook of that size."""

    kappa: str
    q: int
    blocks: tuple  # of (size, residue, HookPartition)

    def __post_init__(self):
        if self.kappa not in ("+", "-"):
            raise DomainError(f"kappa must be '+' or '-', got {self.kappa!r}")
        if not is_prime_power_odd(self.q):
            raise DomainError(f"q={self.q} is not an odd prime power")
        sizes = tuple(size for size, _, _ in self.blocks)
        if sizes != tuple(1 << e for e in two_adic(sum(sizes))):
            raise DomainError(f"block sizes {sizes} are not a 2-adic decomposition")
        mod = self.modulus
        for size, s, hook in self.blocks:
            if not 0 <= s < mod:
                raise DomainError(f"residue {s} out of range [0, {mod})")
            if hook.m != size:
                raise DomainError(f"hook {hook} does not fill its block of size {size}")

    @property
    def modulus(self):
        return self.q - 1 if self.kappa == "+" else self.q + 1

    @property
    def n(self):
        return sum(size for size, _, _ in self.blocks)

    def to_json(self):
        return {
            "kappa": self.kappa,
            "q": self.q,
            "blocks": [
                {"size": size, "s": s, "hook": hook.to_json()}
                for size, s, hook in self.blocks
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["kappa"],
            int(data["q"]),
            tuple(
                (int(b["size"]), int(b["s"]), HookPartition.from_json(b["hook"]))
                for b in data["blocks"]
            ),
        )


@dataclass(frozen=True)
class NormalizerLocalLabel:
    """Raw normalizer data for one 2-power block of size 2**m.

    gamma indexes a character of the 2-part of the ambient cyclic group,
    delta one of the odd part; for m >= 1 the bit j and the top-hook selector
    k (the leg of the hook of the half-size quotient) pin the block hook via
    leg = 2k + j. For m = 0 only the residue data remains.
    """

    kappa: str
    q: int
    m: int
    gamma: int
    delta: int
    j: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.kappa not in ("+", "-"):
            raise DomainError(f"kappa must be '+' or '-', got {self.kappa!r}")
        if not is_prime_power_odd(self.q):
            raise DomainError(f"q={self.q} is not an odd prime power")
        if self.m < 0:
            raise DomainError("m must be nonnegative")
        two, odd = _split_modulus(self.modulus)
        if not 0 <= self.gamma < two:
            raise DomainError(f"gamma {self.gamma} out of range [0, {two})")
        if not 0 <= self.delta < odd:
            raise DomainError(f"delta {self.delta} out of range [0, {odd})")
        if self.m == 0:
            if self.j is not None or self.k is not None:
                raise DomainError("j and k are absent for a block of size 1")
        else:
            if self.j not in (0, 1):
                raise DomainError("j must be 0 or 1")
            if self.k is None or not 0 <= self.k <= (1 << (self.m - 1)) - 1:
                raise DomainError(f"k out of range [0, 2^{self.m - 1} - 1]")

    @property
    def modulus(self):
        return self.q - 1 if self.kappa == "+" else self.q + 1


def _split_modulus(mod):
    """(2-part, odd part) of the modulus."""
    two = mod & -mod
    return two, mod // two


def local_to_omega(loc):
    """Fuse (gamma, delta) into one residue and build the hook with leg 2k + j."""
    mod = loc.modulus
    two, odd = _split_modulus(mod)
    # Chinese remainder: s = gamma mod two, s = delta mod odd
    s = next(
        x for x in range(mod) if x % two == loc.gamma and x % odd == loc.delta
    )
    if loc.m == 0:
        return s, HookPartition(1, 0)
    return s, HookPartition(1 << loc.m, 2 * loc.k + loc.j)


def omega_to_local(kappa, q, s, hook):
    """Inverse of local_to_omega; total on well-formed blocks."""
    mod = q - 1 if kappa == "+" else q + 1
    two, odd = _split_modulus(mod)
    if not 0 <= s < mod:
        raise DomainError(f"residue {s} out of range [0, {mod})")
    m = hook.m.bit_length() - 1
    if hook.m != 1 << m:
        raise DomainError(f"block size {hook.m} is not a 2-power")
    if m == 0:
        return NormalizerLocalLabel(kappa, q, 0, s % two, s % odd)
    return NormalizerLocalLabel(
        kappa, q, m, s % two, s % odd, j=hook.leg & 1, k=hook.leg >> 1
    )


def sharp_glu(label):
    """Normalizer-side coordinates of an odd label.

    Each pair contributes one hook per 2-adic block of its partition size via
    the symmetric-group hook coordinates, and stamps its residue on those
    blocks; block ownership is forced by the 2-adic digit condition.
    """
    if not is_odd_label(label):
        raise DomainError(f"{label} is not an odd label")
    entries = {}
    for s, lam in canonical_order(label):
        theta = alpha_sn(lam)
        for hook in theta.hooks:
            e = hook.m.bit_length() - 1
            if e in entries:
                raise TheoremViolationError("two pairs claim the same 2-adic block")
            entries[e] = (hook.m, s, hook)
    blocks = tuple(entries[e] for e in two_adic(label.n))
    return OmegaLabel(label.kappa, label.q, blocks)


def sharp_glu_inverse(omega):
    """Group blocks by residue and reattach each group's hooks; inverse of sharp_glu."""
    groups = {}
    for size, s, hook in omega.blocks:
        groups.setdefault(s, []).append(hook)
    pairs = []
    for s, hooks in groups.items():
        lam = alpha_sn_inverse(ThetaLabel(tuple(hooks)))
        pairs.append((s, lam))
    label = GLabel(omega.kappa, omega.q, tuple(pairs))
    if not is_odd_label(label):
        raise TheoremViolationError(f"inverse of {omega} is not odd: {label}")
    if sharp_glu(label) != omega:
        raise TheoremViolationError(f"round trip failed for {omega}")
    return label


def _act_on_residue(fn, x):
    if isinstance(x, GLabel):
        return GLabel(x.kappa, x.q, tuple((fn(s), lam) for s, lam in x.pairs))
    if isinstance(x, OmegaLabel):
        return OmegaLabel(
            x.kappa, x.q, tuple((size, fn(s), hook) for size, s, hook in x.blocks)
        )
    raise DomainError(f"cannot act on {type(x).__name__}")


def galois_act(i, x):
    """Raise every residue to the i-th power; partitions and hooks are fixed."""
    mod = x.modulus
    if math.gcd(i, mod) != 1:
        raise DomainError(f"exponent {i} is not coprime to {mod}")
    return _act_on_residue(lambda s: (s * i) % mod, x)


def outer_act(word, x):
    """Apply a word in the outer generators 'F' (s -> s^p) and 'tau' (s -> s^-1)."""
    if isinstance(word, str):
        word = word.split()
    mod = x.modulus
    p = char_prime(x.q)
    exponent = 1
    for gen in word:
        if gen == "F":
            exponent = (exponent * p) % mod
        elif gen == "tau":
            if x.kappa != "+":
                raise DomainError("tau is only available for kappa='+'")
            exponent = (-exponent) % mod
        else:
            raise DomainError(f"unknown outer generator {gen!r}")
    return _act_on_residue(lambda s: (s * exponent) % mod, x)


def enumerate_omega_labels(n, q, kappa):
    """The full coordinate space: every residue and hook choice per block."""
    if n < 1:
        raise DomainError("n must be positive")
    mod = q - 1 if kappa == "+" else q + 1
    sizes = [1 << e for e in two_adic(n)]
    out = []

    def fill(i, acc):
        if i == len(sizes):
            out.append(OmegaLabel(kappa, q, tuple(acc)))
            return
        size = sizes[i]
        for s in range(mod):
            for leg in range(size):
                fill(i + 1, acc + [(size, s, HookPartition(size, leg))])

    fill(0, [])
    return out


def count_real_odd(n, q, kappa):
    """Number of labels fixed by residue negation, by fixed-point enumeration.

    Conjugation-fixed labels have every residue s with 2s = 0; each is then
    fixed by the whole Galois group, which makes them rational, and the count
    is 2 per block times the hook choices.
    """
    fixed = [
        omega
        for omega in enumerate_omega_labels(n, q, kappa)
        if galois_act(-1, omega) == omega
    ]
    for omega in fixed:
        mod = omega.modulus
        if any((2 * s) % mod for _, s, _ in omega.blocks):
            raise TheoremViolationError("conjugation-fixed label with 2s != 0")
    return len(fixed)

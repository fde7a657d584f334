"""Profile spaces and their product-set (box) algebra.

A Szondi personality profile (SPP) assigns one of twelve partially ordered
reaction signatures to each of eight drive factors.  A Cattell PsychEval
personality profile (PPP) assigns a score in 1..10 to each of 28 traits
(the 16 normal personality factors plus 12 abnormal traits).

Subsets of either space are represented as boxes: one allowed-value set per
dimension, denoting the cartesian product of those sets.  Boxes are closed
under intersection and support exact (big-integer) cardinality and
deterministic lexicographic enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping


class Signature(Enum):
    """One of Szondi's twelve reaction signatures.

    The order is the disjoint union of two chains: the nine-step chain
    -!!! < -!! < -! < - < 0 < + < +! < +!! < +!!! and the ambivalence chain
    pm_! < pm < pm^!.  Members of different chains are incomparable.
    """

    NEG3 = ("-!!!", 0, 0)
    NEG2 = ("-!!", 0, 1)
    NEG1 = ("-!", 0, 2)
    NEG = ("-", 0, 3)
    ZERO = ("0", 0, 4)
    POS = ("+", 0, 5)
    POS1 = ("+!", 0, 6)
    POS2 = ("+!!", 0, 7)
    POS3 = ("+!!!", 0, 8)
    AMBI_NEG = ("pm_!", 1, 0)   # ambivalence, rejection bias
    AMBI = ("pm", 1, 1)         # ambivalence, no bias
    AMBI_POS = ("pm^!", 1, 2)   # ambivalence, approval bias

    def __new__(cls, token: str, chain: int, height: int):
        obj = object.__new__(cls)
        obj._value_ = token
        obj.chain = chain
        obj.height = height
        return obj

    @property
    def token(self) -> str:
        return self.value

    def leq(self, other: "Signature") -> bool:
        """True iff self <= other in the signature order."""
        return self.chain == other.chain and self.height <= other.height

    def flipped(self) -> "Signature":
        """Polarity opposite: swaps + and - at equal quantum count, fixes 0
        and pm, swaps the ambivalence biases."""
        return _FLIP[self]


# Flip reverses each chain (9-chain: height h -> 8-h; 3-chain: h -> 2-h).
_FLIP = {
    s: next(t for t in Signature
            if t.chain == s.chain
            and t.height == (8 if s.chain == 0 else 2) - s.height)
    for s in Signature
}

SIGNATURES: tuple[Signature, ...] = tuple(Signature)
SIGNATURE_INDEX = {s: i for i, s in enumerate(SIGNATURES)}
SIGNATURE_BY_TOKEN = {s.value: s for s in SIGNATURES}


class Vector(Enum):
    """Szondi's four drive vectors, each grouping two factors."""

    S = "S"
    P = "P"
    SCH = "Sch"
    C = "C"


class Factor(Enum):
    """Szondi's eight drive factors, in canonical h,s,e,hy,k,p,d,m order."""

    H = ("h", Vector.S)
    S = ("s", Vector.S)
    E = ("e", Vector.P)
    HY = ("hy", Vector.P)
    K = ("k", Vector.SCH)
    P = ("p", Vector.SCH)
    D = ("d", Vector.C)
    M = ("m", Vector.C)

    def __new__(cls, token: str, vector: Vector):
        obj = object.__new__(cls)
        obj._value_ = token
        obj.vector = vector
        return obj

    @property
    def token(self) -> str:
        return self.value


FACTORS: tuple[Factor, ...] = tuple(Factor)
FACTOR_INDEX = {f: i for i, f in enumerate(FACTORS)}
FACTOR_BY_TOKEN = {f.value: f for f in FACTORS}


class Trait(Enum):
    """The 28 PsychEval traits: 16 normal personality factors A..Q4 followed
    by the 12 abnormal traits PS..TI, in canonical declaration order."""

    A = ("A", False)
    B = ("B", False)
    C = ("C", False)
    E = ("E", False)
    F = ("F", False)
    G = ("G", False)
    H = ("H", False)
    I = ("I", False)
    L = ("L", False)
    M = ("M", False)
    N = ("N", False)
    O = ("O", False)
    Q1 = ("Q1", False)
    Q2 = ("Q2", False)
    Q3 = ("Q3", False)
    Q4 = ("Q4", False)
    PS = ("PS", True)
    HC = ("HC", True)
    ST = ("ST", True)
    AD = ("AD", True)
    LE = ("LE", True)
    SR = ("SR", True)
    AW = ("AW", True)
    PI = ("PI", True)
    OT = ("OT", True)
    AP = ("AP", True)
    TS = ("TS", True)
    TI = ("TI", True)

    def __new__(cls, token: str, abnormal: bool):
        obj = object.__new__(cls)
        obj._value_ = token
        obj.abnormal = abnormal
        return obj

    @property
    def token(self) -> str:
        return self.value

    @property
    def kind(self) -> str:
        return "abnormal" if self.abnormal else "normal"


TRAITS: tuple[Trait, ...] = tuple(Trait)
TRAIT_INDEX = {t: i for i, t in enumerate(TRAITS)}
TRAIT_BY_TOKEN = {t.value: t for t in TRAITS}

TRAIT_VALUES: tuple[int, ...] = tuple(range(1, 11))
LOW_RANGE = (1, 2, 3, 4, 5)
HIGH_RANGE = (6, 7, 8, 9, 10)


def signature_leq(a: Signature, b: Signature) -> bool:
    """Order test over the twelve signatures (two disjoint chains)."""
    return a.leq(b)


def signature_flip(a: Signature) -> Signature:
    return a.flipped()


@dataclass(frozen=True)
class SzondiProfile:
    """Total assignment of a signature to every factor (an SPP)."""

    signatures: tuple[Signature, ...]

    def __post_init__(self):
        if len(self.signatures) != len(FACTORS):
            raise ValueError(f"expected {len(FACTORS)} signatures, got {len(self.signatures)}")

    @classmethod
    def from_map(cls, assignment: Mapping[Factor, Signature]) -> "SzondiProfile":
        missing = [f.value for f in FACTORS if f not in assignment]
        if missing:
            raise ValueError(f"missing factors: {missing}")
        return cls(tuple(assignment[f] for f in FACTORS))

    def __getitem__(self, factor: Factor) -> Signature:
        return self.signatures[FACTOR_INDEX[factor]]

    def as_map(self) -> dict[Factor, Signature]:
        return dict(zip(FACTORS, self.signatures))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(SIGNATURE_INDEX[s] for s in self.signatures)


@dataclass(frozen=True)
class CattellProfile:
    """Total assignment of a 1..10 score to every trait (a PPP)."""

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(TRAITS):
            raise ValueError(f"expected {len(TRAITS)} values, got {len(self.values)}")
        for trait, v in zip(TRAITS, self.values):
            if not (isinstance(v, int) and 1 <= v <= 10):
                raise ValueError(f"trait {trait.value}: value {v!r} outside 1..10")

    @classmethod
    def from_map(cls, assignment: Mapping[Trait, int]) -> "CattellProfile":
        missing = [t.value for t in TRAITS if t not in assignment]
        if missing:
            raise ValueError(f"missing traits: {missing}")
        return cls(tuple(assignment[t] for t in TRAITS))

    @classmethod
    def uniform(cls, value: int, **overrides: int) -> "CattellProfile":
        """All traits at `value`, with keyword overrides by trait token."""
        vals = {t: value for t in TRAITS}
        for token, v in overrides.items():
            vals[TRAIT_BY_TOKEN[token]] = v
        return cls.from_map(vals)

    def __getitem__(self, trait: Trait) -> int:
        return self.values[TRAIT_INDEX[trait]]

    def as_map(self) -> dict[Trait, int]:
        return dict(zip(TRAITS, self.values))

    def sort_key(self) -> tuple[int, ...]:
        return self.values


@dataclass(frozen=True)
class FactorBox:
    """Product subset of SPP-space: one allowed signature set per factor.

    Denotes { p | p[f] in allowed[f] for every factor f }.  The box is empty
    exactly when some dimension's allowed set is empty; distinct empty boxes
    denote the same (empty) set, so set-level comparisons go through
    canonical().
    """

    allowed: tuple[frozenset[Signature], ...]

    def __post_init__(self):
        if len(self.allowed) != len(FACTORS):
            raise ValueError(f"expected {len(FACTORS)} dimensions, got {len(self.allowed)}")

    @classmethod
    def full(cls) -> "FactorBox":
        return cls(tuple(frozenset(SIGNATURES) for _ in FACTORS))

    @classmethod
    def from_map(cls, restrictions: Mapping[Factor, Iterable[Signature]]) -> "FactorBox":
        """Box restricting the given factors; unmentioned factors stay full."""
        dims = [frozenset(SIGNATURES)] * len(FACTORS)
        for factor, sigs in restrictions.items():
            dims[FACTOR_INDEX[factor]] = frozenset(sigs)
        return cls(tuple(dims))

    def allowed_for(self, factor: Factor) -> frozenset[Signature]:
        return self.allowed[FACTOR_INDEX[factor]]

    def is_empty(self) -> bool:
        return any(not dim for dim in self.allowed)

    def member(self, profile: SzondiProfile) -> bool:
        return all(sig in dim for sig, dim in zip(profile.signatures, self.allowed))

    def intersect(self, other: "FactorBox") -> "FactorBox":
        return FactorBox(tuple(a & b for a, b in zip(self.allowed, other.allowed)))

    def issubset(self, other: "FactorBox") -> bool:
        """Set-level inclusion (an empty box is a subset of everything)."""
        if self.is_empty():
            return True
        return all(a <= b for a, b in zip(self.allowed, other.allowed))

    def cardinality(self) -> int:
        n = 1
        for dim in self.allowed:
            n *= len(dim)
        return n

    def canonical(self) -> "FactorBox":
        """Normal form in which all empty boxes compare equal."""
        if self.is_empty():
            return FactorBox(tuple(frozenset() for _ in FACTORS))
        return self

    def profiles(self, limit: int | None = None) -> Iterator[SzondiProfile]:
        """Members in lexicographic order (factor order h..m, signatures in
        declaration order), truncated at `limit` if given."""
        dims = [sorted(dim, key=SIGNATURE_INDEX.__getitem__) for dim in self.allowed]
        gen = (SzondiProfile(combo) for combo in itertools.product(*dims))
        return itertools.islice(gen, limit) if limit is not None else gen


@dataclass(frozen=True)
class TraitBox:
    """Product subset of PPP-space: one allowed value set per trait."""

    allowed: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.allowed) != len(TRAITS):
            raise ValueError(f"expected {len(TRAITS)} dimensions, got {len(self.allowed)}")

    @classmethod
    def full(cls) -> "TraitBox":
        return cls(tuple(frozenset(TRAIT_VALUES) for _ in TRAITS))

    @classmethod
    def from_map(cls, restrictions: Mapping[Trait, Iterable[int]]) -> "TraitBox":
        dims = [frozenset(TRAIT_VALUES)] * len(TRAITS)
        for trait, values in restrictions.items():
            dims[TRAIT_INDEX[trait]] = frozenset(values)
        return cls(tuple(dims))

    def allowed_for(self, trait: Trait) -> frozenset[int]:
        return self.allowed[TRAIT_INDEX[trait]]

    def is_empty(self) -> bool:
        return any(not dim for dim in self.allowed)

    def member(self, profile: CattellProfile) -> bool:
        return all(v in dim for v, dim in zip(profile.values, self.allowed))

    def intersect(self, other: "TraitBox") -> "TraitBox":
        return TraitBox(tuple(a & b for a, b in zip(self.allowed, other.allowed)))

    def issubset(self, other: "TraitBox") -> bool:
        if self.is_empty():
            return True
        return all(a <= b for a, b in zip(self.allowed, other.allowed))

    def cardinality(self) -> int:
        n = 1
        for dim in self.allowed:
            n *= len(dim)
        return n

    def canonical(self) -> "TraitBox":
        if self.is_empty():
            return TraitBox(tuple(frozenset() for _ in TRAITS))
        return self

    def profiles(self, limit: int | None = None) -> Iterator[CattellProfile]:
        """Members in lexicographic order (trait order A..TI, ascending
        values), truncated at `limit` if given."""
        dims = [sorted(dim) for dim in self.allowed]
        gen = (CattellProfile(combo) for combo in itertools.product(*dims))
        return itertools.islice(gen, limit) if limit is not None else gen

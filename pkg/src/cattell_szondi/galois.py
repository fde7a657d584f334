"""The polarity pair between PPP-space and SPP-space, with oracles.

The right polarity sends a set of Cattell profiles to the SPPs whose own
formula entails the set's conjunctive translation; because every table cell
is box-representable, the image is exactly the intersection of the member
cells' boxes.  The left polarity sends a set of Szondi profiles to the
Cattell profiles entailed by the set's disjunctive translation; since a PPP
translates to an independent per-trait conjunction, the image is the product
of per-trait allowed-value sets.

Both maps also exist at box level (the image of a whole product set), which
is what makes the closures computable without enumerating PPP-space.

The *_oracle functions are definition-based ground truth: they enumerate a
restricted subspace point by point and filter with the formula evaluator,
sharing no code path with the box computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .core import (
    FACTOR_INDEX,
    FACTORS,
    Factor,
    FactorBox,
    CattellProfile,
    SIGNATURE_INDEX,
    SIGNATURES,
    Signature,
    SzondiProfile,
    TRAIT_INDEX,
    TRAIT_VALUES,
    TRAITS,
    Trait,
    TraitBox,
)
from .logic import evaluate
from .translation import (
    STANDARD_TABLE,
    TranslationTable,
    ppp_formula,
    ppp_set_formula,
)

# Oracle enumeration refuses subspaces with more points than this.
DEFAULT_POINT_LIMIT = 10**7


class SubspaceTooLargeError(ValueError):
    """The restricted subspace has too many points for explicit enumeration."""


def right_polarity(profiles: Iterable[CattellProfile],
                   table: TranslationTable = STANDARD_TABLE) -> FactorBox:
    """SPPs whose formula entails the conjunctive translation of the set.

    Intersection of the 28 trait-cell boxes of every member; the empty set
    yields the full box (everything entails TOP).
    """
    box = FactorBox.full()
    for f in profiles:
        for trait, value in zip(TRAITS, f.values):
            box = box.intersect(table.box(trait, value))
    return box


def left_polarity(profiles: Iterable[SzondiProfile],
                  table: TranslationTable = STANDARD_TABLE) -> TraitBox:
    """Cattell profiles entailed by the disjunctive translation of the set.

    A trait value stays allowed iff its cell holds in every member profile;
    the empty set yields the full box (BOTTOM entails everything).
    """
    members = list(profiles)
    dims = []
    for trait in TRAITS:
        dims.append(frozenset(
            v for v in TRAIT_VALUES
            if all(table.satisfied_by(trait, v, p) for p in members)
        ))
    return TraitBox(tuple(dims))


def right_polarity_box(box: TraitBox, table: TranslationTable = STANDARD_TABLE) -> FactorBox:
    """Right polarity of the whole product set denoted by a trait box."""
    if box.is_empty():
        return FactorBox.full()
    out = FactorBox.full()
    for trait, dim in zip(TRAITS, box.allowed):
        for value in dim:
            out = out.intersect(table.box(trait, value))
    return out


def left_polarity_box(box: FactorBox, table: TranslationTable = STANDARD_TABLE) -> TraitBox:
    """Left polarity of the whole product set denoted by a factor box.

    A cell holds on every member of a nonempty box iff the box is included
    in the cell's box.
    """
    if box.is_empty():
        return TraitBox.full()
    dims = []
    for trait in TRAITS:
        dims.append(frozenset(
            v for v in TRAIT_VALUES if box.issubset(table.box(trait, v))
        ))
    return TraitBox(tuple(dims))


def closure_spp(profiles: Iterable[SzondiProfile],
                table: TranslationTable = STANDARD_TABLE) -> FactorBox:
    """Right-after-left closure of a set of SPPs (inflationary)."""
    return right_polarity_box(left_polarity(profiles, table), table)


def closure_ppp(profiles: Iterable[CattellProfile],
                table: TranslationTable = STANDARD_TABLE) -> TraitBox:
    """Left-after-right closure of a set of PPPs (inflationary)."""
    return left_polarity_box(right_polarity(profiles, table), table)


def kernel_equivalent_ppp(first: Iterable[CattellProfile],
                          second: Iterable[CattellProfile],
                          table: TranslationTable = STANDARD_TABLE) -> bool:
    """Same right-polarity image (boxes compared as sets)."""
    return (right_polarity(first, table).canonical()
            == right_polarity(second, table).canonical())


def kernel_equivalent_spp(first: Iterable[SzondiProfile],
                          second: Iterable[SzondiProfile],
                          table: TranslationTable = STANDARD_TABLE) -> bool:
    """Same left-polarity image (boxes compared as sets)."""
    return (left_polarity(first, table).canonical()
            == left_polarity(second, table).canonical())


@dataclass(frozen=True)
class Subspace:
    """Finite restriction of both profile spaces for oracle enumeration.

    Holds one nonempty candidate set per factor and per trait; the oracles
    enumerate the corresponding products, so their sizes must stay under the
    point limit.
    """

    factor_sets: tuple[frozenset[Signature], ...]
    trait_sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.factor_sets) != len(FACTORS) or len(self.trait_sets) != len(TRAITS):
            raise ValueError("subspace needs one candidate set per factor and per trait")
        if any(not s for s in self.factor_sets) or any(not s for s in self.trait_sets):
            raise ValueError("subspace candidate sets must be nonempty")

    @classmethod
    def full(cls) -> "Subspace":
        return cls(
            tuple(frozenset(SIGNATURES) for _ in FACTORS),
            tuple(frozenset(TRAIT_VALUES) for _ in TRAITS),
        )

    def restrict_factors(self, restrictions: Mapping[Factor, Iterable[Signature]]) -> "Subspace":
        dims = list(self.factor_sets)
        for factor, sigs in restrictions.items():
            dims[FACTOR_INDEX[factor]] = frozenset(sigs)
        return Subspace(tuple(dims), self.trait_sets)

    def restrict_traits(self, restrictions: Mapping[Trait, Iterable[int]]) -> "Subspace":
        dims = list(self.trait_sets)
        for trait, values in restrictions.items():
            dims[TRAIT_INDEX[trait]] = frozenset(values)
        return Subspace(self.factor_sets, tuple(dims))

    def spp_count(self) -> int:
        n = 1
        for dim in self.factor_sets:
            n *= len(dim)
        return n

    def ppp_count(self) -> int:
        n = 1
        for dim in self.trait_sets:
            n *= len(dim)
        return n

    def iter_spps(self) -> Iterator[SzondiProfile]:
        dims = [sorted(dim, key=SIGNATURE_INDEX.__getitem__) for dim in self.factor_sets]
        return (SzondiProfile(combo) for combo in itertools.product(*dims))

    def iter_ppps(self) -> Iterator[CattellProfile]:
        dims = [sorted(dim) for dim in self.trait_sets]
        return (CattellProfile(combo) for combo in itertools.product(*dims))


def right_polarity_oracle(profiles: Iterable[CattellProfile],
                          subspace: Subspace,
                          table: TranslationTable = STANDARD_TABLE,
                          point_limit: int = DEFAULT_POINT_LIMIT) -> list[SzondiProfile]:
    """Ground truth for the right polarity inside a subspace: enumerate the
    restricted SPPs and keep those whose translation the set formula admits,
    checked with the formula evaluator.  Deterministic enumeration order."""
    count = subspace.spp_count()
    if count > point_limit:
        raise SubspaceTooLargeError(f"{count} SPP points exceed limit {point_limit}")
    phi = ppp_set_formula(profiles, table)
    return [p for p in subspace.iter_spps() if evaluate(phi, p)]


def left_polarity_oracle(profiles: Iterable[SzondiProfile],
                         subspace: Subspace,
                         table: TranslationTable = STANDARD_TABLE,
                         point_limit: int = DEFAULT_POINT_LIMIT) -> list[CattellProfile]:
    """Ground truth for the left polarity inside a subspace: enumerate the
    restricted PPPs and keep those whose whole-profile formula holds in every
    member SPP, checked with the formula evaluator."""
    count = subspace.ppp_count()
    if count > point_limit:
        raise SubspaceTooLargeError(f"{count} PPP points exceed limit {point_limit}")
    members = list(profiles)
    out = []
    for f in subspace.iter_ppps():
        phi = ppp_formula(f, table)
        if all(evaluate(phi, p) for p in members):
            out.append(f)
    return out


@dataclass(frozen=True)
class TraitConstraint:
    """One cell's restriction of a single factor."""

    trait: Trait
    value: int
    allowed: frozenset[Signature]


@dataclass(frozen=True)
class FactorConflict:
    """Why one factor's allowed set came out empty: the contributing cells
    and the pairs whose restrictions cannot be met together."""

    factor: Factor
    constraints: tuple[TraitConstraint, ...]
    conflicting_pairs: tuple[tuple[Trait, Trait], ...]


def explain_empty_image(profile: CattellProfile,
                        table: TranslationTable = STANDARD_TABLE) -> tuple[FactorConflict, ...]:
    """Per-factor conflict report for a PPP with an empty right polarity."""
    box = right_polarity([profile], table)
    conflicts = []
    for i, dim in enumerate(box.allowed):
        if dim:
            continue
        factor = FACTORS[i]
        constraints = []
        for trait in TRAITS:
            cell = table.box(trait, profile[trait]).allowed[i]
            if cell != frozenset(SIGNATURES):
                constraints.append(TraitConstraint(trait, profile[trait], cell))
        pairs = tuple(
            (a.trait, b.trait)
            for a, b in itertools.combinations(constraints, 2)
            if not (a.allowed & b.allowed)
        )
        conflicts.append(FactorConflict(factor, tuple(constraints), pairs))
    return tuple(conflicts)

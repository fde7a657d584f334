"""Request and response models for the profile-translation service.

Wire formats:
  PPP      {"type":"ppp","traits":{"A":7,...}}           all 28 traits, 1..10
  SPP      {"type":"spp","factors":{"h":"+",...}}        all 8 factors
  sets     {"type":"ppp_set","profiles":[{...},...]}     elements are the
           bare trait/factor maps; analogously "spp_set"
  boxes    {"type":"spp_box","allowed":{"h":["0"],...},"cardinality":"1",
            "sample":[...]}; cardinality is a decimal string because trait
           boxes reach 10^28.

Unknown traits, factors and signature tokens are rejected.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core import (
    FACTOR_BY_TOKEN,
    FACTORS,
    CattellProfile,
    SIGNATURE_BY_TOKEN,
    SzondiProfile,
    TRAIT_BY_TOKEN,
    TRAITS,
)

_TRAIT_TOKENS = [t.value for t in TRAITS]
_FACTOR_TOKENS = [f.value for f in FACTORS]


def _check_trait_map(traits: dict[str, int]) -> dict[str, int]:
    unknown = sorted(set(traits) - set(_TRAIT_TOKENS))
    if unknown:
        raise ValueError(f"unknown traits: {unknown}")
    missing = [t for t in _TRAIT_TOKENS if t not in traits]
    if missing:
        raise ValueError(f"missing traits: {missing}")
    bad = {t: v for t, v in traits.items() if not (isinstance(v, int) and 1 <= v <= 10)}
    if bad:
        raise ValueError(f"trait values outside 1..10: {bad}")
    return traits


def _check_factor_map(factors: dict[str, str]) -> dict[str, str]:
    unknown = sorted(set(factors) - set(_FACTOR_TOKENS))
    if unknown:
        raise ValueError(f"unknown factors: {unknown}")
    missing = [f for f in _FACTOR_TOKENS if f not in factors]
    if missing:
        raise ValueError(f"missing factors: {missing}")
    bad = {f: s for f, s in factors.items() if s not in SIGNATURE_BY_TOKEN}
    if bad:
        raise ValueError(f"unknown signature tokens: {bad}")
    return factors


def ppp_from_map(traits: dict[str, int]) -> CattellProfile:
    return CattellProfile.from_map({TRAIT_BY_TOKEN[t]: v for t, v in traits.items()})


def spp_from_map(factors: dict[str, str]) -> SzondiProfile:
    return SzondiProfile.from_map(
        {FACTOR_BY_TOKEN[f]: SIGNATURE_BY_TOKEN[s] for f, s in factors.items()}
    )


def ppp_to_map(profile: CattellProfile) -> dict[str, int]:
    return {t.value: v for t, v in zip(TRAITS, profile.values)}


def spp_to_map(profile: SzondiProfile) -> dict[str, str]:
    return {f.value: s.value for f, s in zip(FACTORS, profile.signatures)}


class PppDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")
    type: Literal["ppp"]
    traits: dict[str, int]

    @field_validator("traits")
    @classmethod
    def _traits_complete(cls, v):
        return _check_trait_map(v)

    def profiles(self) -> list[CattellProfile]:
        return [ppp_from_map(self.traits)]


class PppSetDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")
    type: Literal["ppp_set"]
    profiles: list[dict[str, int]]

    @field_validator("profiles")
    @classmethod
    def _members_complete(cls, v):
        for member in v:
            _check_trait_map(member)
        return v

    def profile_objects(self) -> list[CattellProfile]:
        return [ppp_from_map(m) for m in self.profiles]


class SppDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")
    type: Literal["spp"]
    factors: dict[str, str]

    @field_validator("factors")
    @classmethod
    def _factors_complete(cls, v):
        return _check_factor_map(v)

    def profiles(self) -> list[SzondiProfile]:
        return [spp_from_map(self.factors)]


class SppSetDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")
    type: Literal["spp_set"]
    profiles: list[dict[str, str]]

    @field_validator("profiles")
    @classmethod
    def _members_complete(cls, v):
        for member in v:
            _check_factor_map(member)
        return v

    def profile_objects(self) -> list[SzondiProfile]:
        return [spp_from_map(m) for m in self.profiles]


RightInput = Union[PppDocument, PppSetDocument]
LeftInput = Union[SppDocument, SppSetDocument]


class SppBoxDocument(BaseModel):
    type: Literal["spp_box"] = "spp_box"
    allowed: dict[str, list[str]]
    cardinality: str
    sample: list[dict[str, str]] = Field(default_factory=list)


class CellEvaluation(BaseModel):
    value: int
    formula: str
    satisfied: bool


class TraitBoxDocument(BaseModel):
    type: Literal["trait_box"] = "trait_box"
    allowed: dict[str, list[int]]
    cardinality: str
    explain: Optional[dict[str, list[CellEvaluation]]] = None


class CheckRequest(BaseModel):
    trials: int = Field(default=1000, ge=0)
    seed: int = 0


class SuiteReport(BaseModel):
    name: str
    trials: int
    passed: bool
    counterexample: Optional[str] = None


class CheckResponse(BaseModel):
    passed: bool
    trials: int
    seed: int
    suites: list[SuiteReport]


class FindEmptyRequest(BaseModel):
    samples: int = Field(default=10000, ge=0)
    seed: int = 0
    max_examples: int = Field(default=5, ge=0)


class TraitConstraintModel(BaseModel):
    trait: str
    value: int
    allowed: list[str]


class FactorConflictModel(BaseModel):
    factor: str
    constraints: list[TraitConstraintModel]
    conflicting_pairs: list[tuple[str, str]]


class EmptyImageExample(BaseModel):
    traits: dict[str, int]
    conflicts: list[FactorConflictModel]


class FindEmptyResponse(BaseModel):
    samples: int
    seed: int
    empty_count: int
    examples: list[EmptyImageExample]


class NormDiscrepancy(BaseModel):
    trait: str
    satisfying_values: list[int]


class NormDemoResponse(BaseModel):
    profile: dict[str, str]
    formula: str
    allowed: dict[str, list[int]]
    cardinality: str
    empty: bool
    failing_traits: list[str]
    published_failing_traits: list[str]
    # Traits on the published failing list that evaluation finds satisfiable.
    discrepancies: list[NormDiscrepancy]


class BigFiveResponse(BaseModel):
    global_factor: str
    value: int
    corrected_reversal: bool
    components: list[dict[str, int]]
    formula: str

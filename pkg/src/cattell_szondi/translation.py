"""The trait translation table and the profile-to-formula mappings.

Every (trait, value) pair maps to a negation-free formula over signed-factor
atoms.  The full 280-cell table is kept below as literal formula text, one
row per trait and one cell per value 1..10, exactly as published; a checksum
guards against accidental edits and ``dump_rows`` re-emits the cells for
manual audit.

A whole Cattell profile translates to the conjunction of its 28 cells; a
Szondi profile translates to the conjunction of its 8 atoms.  Sets translate
conjunctively (PPP side, empty set = TOP) and disjunctively (SPP side, empty
set = BOTTOM).  Cattell's five global factors translate to disjunctions of
primary-trait cells, with some components taken at the reversed value 10-v
exactly as published (which has no valid reversed value at v=10); an opt-in
corrected mode uses 11-v instead.
"""

from __future__ import annotations

import hashlib
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .core import (
    FACTORS,
    FactorBox,
    CattellProfile,
    SIGNATURES,
    Signature,
    SzondiProfile,
    TRAIT_VALUES,
    TRAITS,
    Trait,
)
from .logic import (
    And,
    Atom,
    Formula,
    Or,
    Top,
    conj,
    disj,
    format_formula,
    parse_formula,
)


class NotBoxRepresentable(ValueError):
    """A formula mixes factors inside a disjunction, so its satisfying set
    is not a per-factor product."""


class ReversedValueOutOfRange(ValueError):
    """A global-factor equation needs the reversed value 10-v, which leaves
    1..10 (only at v=10 in the published form)."""


# The translation table, one row per trait: cells for values 1..5 (low range)
# then 6..10 (high range).  Transcribed cell by cell; do not reformat.
_TABLE_SOURCE: dict[Trait, tuple[str, ...]] = {
    Trait.A: (
        "(atom h -!!)",
        "(atom h -!)",
        "(atom h -)",
        "(atom h -)",
        "(atom h 0)",
        "(atom h 0)",
        "(atom h +)",
        "(atom h +)",
        "(atom h +!)",
        "(atom h +!!)",
    ),
    Trait.B: (
        "(and (atom k +!!) (atom p -!!))",
        "(and (atom k +!) (atom p -!))",
        "(and (atom k +) (atom p -))",
        "(and (atom k +) (atom p -))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k -) (atom p +))",
        "(and (atom k -) (atom p +))",
        "(and (atom k -!) (atom p +!))",
        "(and (atom k -!!) (atom p +!!))",
    ),
    Trait.C: (
        "(atom d +!!)",
        "(atom d +!)",
        "(atom d +)",
        "(atom d +)",
        "(atom d 0)",
        "(atom d 0)",
        "(atom d -)",
        "(atom d -)",
        "(atom d -!)",
        "(atom d -!!)",
    ),
    Trait.E: (
        "(atom s -!!)",
        "(atom s -!)",
        "(atom s -)",
        "(atom s -)",
        "(atom s 0)",
        "(atom s 0)",
        "(atom s +)",
        "(atom s +)",
        "(atom s +!)",
        "(atom s +!!)",
    ),
    Trait.F: (
        "(atom k -!!)",
        "(atom k -!)",
        "(atom k -)",
        "(atom k -)",
        "(atom k 0)",
        "(atom k 0)",
        "(atom k +)",
        "(atom k +)",
        "(atom k +!)",
        "(atom k +!!)",
    ),
    Trait.G: (
        "(and (atom e -!!) (atom hy +!!) (atom k +!!))",
        "(and (atom e -!) (atom hy +!) (atom k +!))",
        "(and (atom e -) (atom hy +) (atom k +))",
        "(and (atom e -) (atom hy +) (atom k +))",
        "(and (atom e 0) (atom hy 0) (atom k 0))",
        "(and (atom e 0) (atom hy 0) (atom k 0))",
        "(and (atom e +) (atom hy -) (atom k -))",
        "(and (atom e +) (atom hy -) (atom k -))",
        "(and (atom e +!) (atom hy -!) (atom k -!))",
        "(and (atom e +!!) (atom hy -!!) (atom k -!!))",
    ),
    Trait.H: (
        "(and (atom hy -!!) (atom d -!!))",
        "(and (atom hy -!) (atom d -!))",
        "(and (atom hy -) (atom d -))",
        "(and (atom hy -) (atom d -))",
        "(and (atom hy 0) (atom d 0))",
        "(and (atom hy 0) (atom d 0))",
        "(and (atom hy +) (atom d +))",
        "(and (atom hy +) (atom d +))",
        "(and (atom hy +!) (atom d +!))",
        "(and (atom hy +!!) (atom d +!!))",
    ),
    Trait.I: (
        "(and (atom h -!!) (atom hy +!!) (atom p +!!))",
        "(and (atom h -!) (atom hy +!) (atom p +!))",
        "(and (atom h -) (atom hy +) (atom p +))",
        "(and (atom h -) (atom hy +) (atom p +))",
        "(and (atom h 0) (atom hy 0) (atom p 0))",
        "(and (atom h 0) (atom hy 0) (atom p 0))",
        "(and (atom h +) (atom hy -) (atom p -))",
        "(and (atom h +) (atom hy -) (atom p -))",
        "(and (atom h +!) (atom hy -!) (atom p -!))",
        "(and (atom h +!!) (atom hy -!!) (atom p -!!))",
    ),
    Trait.L: (
        "(and (atom k +!!) (atom p +!!))",
        "(and (atom k +!) (atom p +!))",
        "(and (atom k +) (atom p +))",
        "(and (atom k +) (atom p +))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k -) (atom p -))",
        "(and (atom k -) (atom p -))",
        "(and (atom k -!) (atom p -!))",
        "(and (atom k -!!) (atom p -!!))",
    ),
    Trait.M: (
        "(atom p -!!)",
        "(atom p -!)",
        "(atom p -)",
        "(atom p -)",
        "(atom p 0)",
        "(atom p 0)",
        "(atom p +)",
        "(atom p +)",
        "(atom p +!)",
        "(atom p +!!)",
    ),
    Trait.N: (
        "(atom hy +!!)",
        "(atom hy +!)",
        "(atom hy +)",
        "(atom hy +)",
        "(atom hy 0)",
        "(atom hy 0)",
        "(atom hy -)",
        "(atom hy -)",
        "(atom hy -!)",
        "(atom hy -!!)",
    ),
    Trait.O: (
        "(atom p +!!)",
        "(atom p +!)",
        "(atom p +)",
        "(atom p +)",
        "(atom p 0)",
        "(atom p 0)",
        "(atom p -)",
        "(atom p -)",
        "(atom p -!)",
        "(atom p -!!)",
    ),
    Trait.Q1: (
        "(atom d -!!)",
        "(atom d -!)",
        "(atom d -)",
        "(atom d -)",
        "(atom d 0)",
        "(atom d 0)",
        "(atom d +)",
        "(atom d +)",
        "(atom d +!)",
        "(atom d +!!)",
    ),
    Trait.Q2: (
        "(and (atom d +!!) (atom m +!!))",
        "(and (atom d +!) (atom m +!))",
        "(and (atom d +) (atom m +))",
        "(and (atom d +) (atom m +))",
        "(and (atom d 0) (atom m 0))",
        "(and (atom d 0) (atom m 0))",
        "(and (atom d -) (atom m -))",
        "(and (atom d -) (atom m -))",
        "(and (atom d -!) (atom m -!))",
        "(and (atom d -!!) (atom m -!!))",
    ),
    Trait.Q3: (
        "(atom k +!!)",
        "(atom k +!)",
        "(atom k +)",
        "(atom k +)",
        "(atom k 0)",
        "(atom k 0)",
        "(atom k pm)",
        "(atom k pm)",
        "(atom k pm^!)",
        "(atom k pm_!)",
    ),
    Trait.Q4: (
        "(atom e +!!)",
        "(atom e +!)",
        "(atom e +)",
        "(atom e +)",
        "(atom e 0)",
        "(atom e 0)",
        "(atom e -)",
        "(atom e -)",
        "(atom e -!)",
        "(atom e -!!)",
    ),
    Trait.PS: (
        "(and (atom k 0) (atom p +!!))",
        "(and (atom k 0) (atom p +!))",
        "(and (atom k 0) (atom p +))",
        "(and (atom k 0) (atom p +))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p -))",
        "(and (atom k 0) (atom p -))",
        "(and (atom k 0) (atom p -!))",
        "(and (atom k 0) (atom p -!!))",
    ),
    Trait.HC: (
        "(and (atom hy +!!) (atom p +!!))",
        "(and (atom hy +!) (atom p +!))",
        "(and (atom hy +) (atom p +))",
        "(and (atom hy +) (atom p +))",
        "(and (atom hy 0) (atom p 0))",
        "(and (atom hy 0) (atom p 0))",
        "(and (atom hy -) (atom p -))",
        "(and (atom hy -) (atom p -))",
        "(and (atom hy -!) (atom p -!))",
        "(and (atom hy -!!) (atom p -!!))",
    ),
    Trait.ST: (
        "(and (atom s +!!) (atom k +!!))",
        "(and (atom s +!) (atom k +!))",
        "(and (atom s +) (atom k +))",
        "(and (atom s +) (atom k +))",
        "(and (atom s 0) (atom k 0))",
        "(and (atom s 0) (atom k 0))",
        "(and (atom s -) (atom k -))",
        "(and (atom s -) (atom k -))",
        "(and (atom s -!) (atom k -!))",
        "(and (atom s -!!) (atom k -!!))",
    ),
    Trait.AD: (
        "(and (atom p +!!) (atom d -!!))",
        "(and (atom p +!) (atom d -!))",
        "(and (atom p +) (atom d -))",
        "(and (atom p +) (atom d -))",
        "(and (atom p 0) (atom d 0))",
        "(and (atom p 0) (atom d 0))",
        "(and (atom p -) (atom d +))",
        "(and (atom p -) (atom d +))",
        "(and (atom p -!) (atom d +!))",
        "(and (atom p -!!) (atom d +!!))",
    ),
    # LE's columns 1 and 2 are identical (likewise 3/4), unlike the scale rows.
    Trait.LE: (
        "(or (atom s +!!!) (atom s -!!!))",
        "(or (atom s +!!!) (atom s -!!!))",
        "(or (atom s +!!) (atom s -!!))",
        "(or (atom s +!!) (atom s -!!))",
        "(or (atom s +!) (atom s -!))",
        "(or (atom s +!) (atom s -!))",
        "(or (atom s +) (atom s -))",
        "(or (atom s +) (atom s -))",
        "(atom s 0)",
        "(atom s 0)",
    ),
    Trait.SR: (
        "(and (atom s +!!) (atom k +!!) (atom p -!!))",
        "(and (atom s +!) (atom k +!) (atom p -!))",
        "(and (atom s +) (atom k +) (atom p -))",
        "(and (atom s +) (atom k +) (atom p -))",
        "(and (atom s 0) (atom k 0) (atom p 0))",
        "(and (atom s 0) (atom k 0) (atom p 0))",
        "(and (atom s -) (atom k -) (atom p +))",
        "(and (atom s -) (atom k -) (atom p +))",
        "(and (atom s -!) (atom k -!) (atom p +!))",
        "(and (atom s -!!) (atom k -!!) (atom p +!!))",
    ),
    Trait.AW: (
        "(and (atom d +!!) (atom m +!!))",
        "(and (atom d +!) (atom m +!))",
        "(and (atom d +) (atom m +))",
        "(and (atom d +) (atom m +))",
        "(and (atom d 0) (atom m 0))",
        "(and (atom d 0) (atom m 0))",
        "(and (atom d -) (atom m -))",
        "(and (atom d -) (atom m -))",
        "(and (atom d -!) (atom m -!))",
        "(and (atom d -!!) (atom m -!!))",
    ),
    # PI's columns 1 and 2 are identical, as are 9 and 10.
    Trait.PI: (
        "(and (or (atom k pm_!) (atom k pm^!)) (atom p 0))",
        "(and (or (atom k pm_!) (atom k pm^!)) (atom p 0))",
        "(and (atom k pm) (atom p 0))",
        "(and (atom k pm) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p pm))",
        "(and (atom k 0) (atom p pm))",
        "(and (atom k 0) (or (atom p pm_!) (atom p pm^!)))",
        "(and (atom k 0) (or (atom p pm_!) (atom p pm^!)))",
    ),
    Trait.OT: (
        "(and (atom k 0) (atom p -!!))",
        "(and (atom k 0) (atom p -!))",
        "(and (atom k 0) (atom p -))",
        "(and (atom k 0) (atom p -))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k pm) (atom p +))",
        "(and (atom k pm) (atom p +))",
        "(and (or (atom k pm_!) (atom k pm^!)) (atom p +!))",
        "(and (or (atom k pm_!) (atom k pm^!)) (atom p +!!))",
    ),
    Trait.AP: (
        "(and (atom k +!!) (atom p 0))",
        "(and (atom k +!) (atom p 0))",
        "(and (atom k +) (atom p 0))",
        "(and (atom k +) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k 0) (atom p 0))",
        "(and (atom k -) (atom p pm))",
        "(and (atom k -) (atom p pm))",
        "(and (atom k -!) (or (atom p pm_!) (atom p pm^!)))",
        "(and (atom k -!!) (or (atom p pm_!) (atom p pm^!)))",
    ),
    Trait.TS: (
        "(and (atom e +!!) (atom d -!!))",
        "(and (atom e +!) (atom d -!))",
        "(and (atom e +) (atom d -))",
        "(and (atom e +) (atom d -))",
        "(and (atom e 0) (atom d 0))",
        "(and (atom e 0) (atom d 0))",
        "(and (atom e -) (atom d +))",
        "(and (atom e -) (atom d +))",
        "(and (atom e -!) (atom d +!))",
        "(and (atom e -!!) (atom d +!!))",
    ),
    Trait.TI: (
        "(and (atom hy -!!) (atom p -!!) (atom d -!!))",
        "(and (atom hy -!) (atom p -!) (atom d -!))",
        "(and (atom hy -) (atom p -) (atom d -))",
        "(and (atom hy -) (atom p -) (atom d -))",
        "(and (atom hy 0) (atom p 0) (atom d 0))",
        "(and (atom hy 0) (atom p 0) (atom d 0))",
        "(and (atom hy +) (atom p +) (atom d +))",
        "(and (atom hy +) (atom p +) (atom d +))",
        "(and (atom hy +!) (atom p +!) (atom d +!))",
        "(and (atom hy +!!) (atom p +!!) (atom d +!!))",
    ),
}

# sha256 over the canonical "trait,value,formula" dump; recompute with
# TranslationTable.checksum() after any deliberate table edit.
TABLE_SHA256 = "b3eaec65fd653c250b19381973e6be82c8ce3305c03143d13e8193feae9ec847"


def formula_box(phi: Formula) -> FactorBox:
    """The box of SPPs satisfying phi, for formulas whose disjunctions stay
    within one factor; raises NotBoxRepresentable otherwise."""
    t = type(phi)
    if t is Top:
        return FactorBox.full()
    if t is Atom:
        return FactorBox.from_map({phi.factor: (phi.signature,)})
    if t is And:
        box = FactorBox.full()
        for c in phi.children:
            box = box.intersect(formula_box(c))
        return box
    if t is Or:
        child_boxes = [formula_box(c) for c in phi.children]
        if any(b == FactorBox.full() for b in child_boxes):
            return FactorBox.full()
        constrained: set[int] = set()
        for b in child_boxes:
            constrained |= {i for i, dim in enumerate(b.allowed) if len(dim) < len(SIGNATURES)}
        if len(constrained) != 1:
            raise NotBoxRepresentable(
                f"disjunction spans factors {sorted(FACTORS[i].value for i in constrained)}"
            )
        i = constrained.pop()
        union = frozenset().union(*(b.allowed[i] for b in child_boxes))
        dims = list(FactorBox.full().allowed)
        dims[i] = union
        return FactorBox(tuple(dims))
    raise NotBoxRepresentable(f"cannot take the box of {phi!r}")


class TranslationTable:
    """All 280 trait cells, with parsed formulas, their boxes, and the
    per-cell constraint lists used by the polarity computations.

    Construction fails if any cell is not box-representable, so a table that
    reaches the polarity code is guaranteed to yield product-set images.
    """

    def __init__(self, cells: Mapping[tuple[Trait, int], Formula]):
        expected = {(t, v) for t in TRAITS for v in TRAIT_VALUES}
        if set(cells) != expected:
            raise ValueError("table must have exactly one cell per trait and value 1..10")
        self._formulas = dict(cells)
        self._boxes = {key: formula_box(f) for key, f in self._formulas.items()}
        full = frozenset(SIGNATURES)
        self._constraints = {
            key: tuple(
                (i, dim) for i, dim in enumerate(box.allowed) if dim != full
            )
            for key, box in self._boxes.items()
        }

    @classmethod
    def standard(cls) -> "TranslationTable":
        cells = {
            (trait, value): parse_formula(text)
            for trait, row in _TABLE_SOURCE.items()
            for value, text in zip(TRAIT_VALUES, row)
        }
        return cls(cells)

    @staticmethod
    def _check_value(value: int) -> None:
        if not (isinstance(value, int) and 1 <= value <= 10):
            raise ValueError(f"trait value {value!r} outside 1..10")

    def formula(self, trait: Trait, value: int) -> Formula:
        self._check_value(value)
        return self._formulas[(trait, value)]

    def box(self, trait: Trait, value: int) -> FactorBox:
        self._check_value(value)
        return self._boxes[(trait, value)]

    def satisfied_by(self, trait: Trait, value: int, profile: SzondiProfile) -> bool:
        """Box-membership test of one cell against one SPP."""
        self._check_value(value)
        sigs = profile.signatures
        return all(sigs[i] in dim for i, dim in self._constraints[(trait, value)])

    def dump_rows(self) -> Iterator[tuple[str, int, str]]:
        """(trait, value, formula-text) triples in canonical order; 280 rows."""
        for trait in TRAITS:
            for value in TRAIT_VALUES:
                yield trait.value, value, format_formula(self._formulas[(trait, value)])

    def checksum(self) -> str:
        dump = "\n".join(f"{t},{v},{s}" for t, v, s in self.dump_rows())
        return hashlib.sha256(dump.encode()).hexdigest()


STANDARD_TABLE = TranslationTable.standard()

if STANDARD_TABLE.checksum() != TABLE_SHA256:
    raise RuntimeError(
        "translation table content does not match its pinned checksum; "
        f"got {STANDARD_TABLE.checksum()}"
    )


def trait_formula(trait: Trait, value: int, table: TranslationTable = STANDARD_TABLE) -> Formula:
    return table.formula(trait, value)


def trait_box(trait: Trait, value: int, table: TranslationTable = STANDARD_TABLE) -> FactorBox:
    return table.box(trait, value)


def ppp_formula(profile: CattellProfile, table: TranslationTable = STANDARD_TABLE) -> Formula:
    """Conjunction of the profile's 28 trait cells, in trait order."""
    return And(tuple(table.formula(t, profile[t]) for t in TRAITS))


def ppp_set_formula(profiles: Iterable[CattellProfile],
                    table: TranslationTable = STANDARD_TABLE) -> Formula:
    """Conjunction over a set of Cattell profiles; TOP for the empty set."""
    members = sorted(set(profiles), key=CattellProfile.sort_key)
    return conj(ppp_formula(f, table) for f in members)


def spp_formula(profile: SzondiProfile) -> Formula:
    """Conjunction of the profile's eight atoms, in factor order."""
    return And(tuple(Atom(f, profile[f]) for f in FACTORS))


def spp_set_formula(profiles: Iterable[SzondiProfile]) -> Formula:
    """Disjunction over a set of Szondi profiles; BOTTOM for the empty set."""
    members = sorted(set(profiles), key=SzondiProfile.sort_key)
    return disj(spp_formula(p) for p in members)


def norm_profile() -> SzondiProfile:
    """The Szondi-test norm profile: h+, s+, e-, hy-, k-, p-, d+, m+."""
    S = Signature
    return SzondiProfile((S.POS, S.POS, S.NEG, S.NEG, S.NEG, S.NEG, S.POS, S.POS))


# Failing-trait list as published for the norm-profile example.  Direct
# evaluation of the table disagrees on M, LE and TS (each has satisfying
# values), so consumers should report the computed set and surface the
# difference rather than assert this list.
PUBLISHED_NORM_FAILING = frozenset({
    Trait.B, Trait.G, Trait.H, Trait.M, Trait.Q3, Trait.PS, Trait.ST,
    Trait.LE, Trait.SR, Trait.PI, Trait.OT, Trait.AP, Trait.TS, Trait.TI,
})


class GlobalFactor(Enum):
    """Cattell's five global personality factors."""

    EXTRAVERSION = "Extraversion"
    HIGH_ANXIETY = "HighAnxiety"
    TOUGH_MINDEDNESS = "ToughMindedness"
    INDEPENDENCE = "Independence"
    SELF_CONTROL = "SelfControl"


# Component traits per global factor; True marks components taken at the
# reversed value.  Order follows the published equations.
GLOBAL_FACTOR_COMPONENTS: dict[GlobalFactor, tuple[tuple[Trait, bool], ...]] = {
    GlobalFactor.EXTRAVERSION: (
        (Trait.A, False), (Trait.F, False), (Trait.H, False),
        (Trait.N, True), (Trait.Q2, True),
    ),
    GlobalFactor.HIGH_ANXIETY: (
        (Trait.C, False), (Trait.L, False), (Trait.O, False), (Trait.Q4, False),
    ),
    GlobalFactor.TOUGH_MINDEDNESS: (
        (Trait.A, True), (Trait.I, True), (Trait.M, False), (Trait.Q1, False),
    ),
    GlobalFactor.INDEPENDENCE: (
        (Trait.E, False), (Trait.H, False), (Trait.L, True), (Trait.Q1, False),
    ),
    GlobalFactor.SELF_CONTROL: (
        (Trait.F, True), (Trait.G, False), (Trait.M, True), (Trait.Q3, False),
    ),
}


def global_factor_components(global_factor: GlobalFactor, value: int,
                             corrected_reversal: bool = False) -> tuple[tuple[Trait, int], ...]:
    """The (trait, value) pairs entering a global-factor disjunction.

    Reversed components use 10-value as published; at value 10 that is 0 and
    out of range, reported via ReversedValueOutOfRange rather than clamped.
    With corrected_reversal, reversed components use 11-value instead, which
    maps 1..10 onto 10..1 and never leaves the range.
    """
    if not (isinstance(value, int) and 1 <= value <= 10):
        raise ValueError(f"trait value {value!r} outside 1..10")
    out = []
    for trait, reversed_ in GLOBAL_FACTOR_COMPONENTS[global_factor]:
        v = value
        if reversed_:
            v = (11 - value) if corrected_reversal else (10 - value)
            if not 1 <= v <= 10:
                raise ReversedValueOutOfRange(
                    f"{global_factor.value} at value {value}: reversed component "
                    f"{trait.value} would need value {v}, outside 1..10"
                )
        out.append((trait, v))
    return tuple(out)


def global_factor_formula(global_factor: GlobalFactor, value: int,
                          corrected_reversal: bool = False,
                          table: TranslationTable = STANDARD_TABLE) -> Formula:
    """Disjunction of the component trait cells for one global factor."""
    components = global_factor_components(global_factor, value, corrected_reversal)
    return Or(tuple(table.formula(t, v) for t, v in components))

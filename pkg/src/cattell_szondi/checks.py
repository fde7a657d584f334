"""Seeded, self-contained property suites over the whole library.

Each suite draws its inputs from a deterministic per-suite RNG and returns
either None (all trials passed) or a description of the first counterexample
found, minimized where the inputs are sets.  run_checks assembles the full
report; it accepts an alternative translation table so that deliberately
corrupted tables can be shown to fail (negative control).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

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
    BOTTOM,
    Formula,
    Or,
    TOP,
    atoms_of,
    entails,
    equivalent,
    evaluate,
    satisfies,
)
from .translation import (
    GLOBAL_FACTOR_COMPONENTS,
    GlobalFactor,
    ReversedValueOutOfRange,
    STANDARD_TABLE,
    TranslationTable,
    global_factor_formula,
    ppp_set_formula,
    spp_formula,
    spp_set_formula,
)
from .galois import (
    Subspace,
    left_polarity,
    left_polarity_box,
    right_polarity,
    right_polarity_box,
    right_polarity_oracle,
)

# Traits whose low-range boxes mirror their high-range boxes under signature
# flip; Q3, LE, PI, OT and AP break the pattern (ambivalence signatures or
# structural asymmetry).
POLARITY_SYMMETRIC_TRAITS: tuple[Trait, ...] = tuple(
    t for t in TRAITS if t not in (Trait.Q3, Trait.LE, Trait.PI, Trait.OT, Trait.AP)
)


def random_spp(rng: random.Random) -> SzondiProfile:
    return SzondiProfile(tuple(rng.choice(SIGNATURES) for _ in FACTORS))


def random_ppp(rng: random.Random) -> CattellProfile:
    return CattellProfile(tuple(rng.randint(1, 10) for _ in TRAITS))


def random_spp_set(rng: random.Random, max_size: int) -> frozenset[SzondiProfile]:
    return frozenset(random_spp(rng) for _ in range(rng.randint(0, max_size)))


def random_ppp_set(rng: random.Random, max_size: int) -> frozenset[CattellProfile]:
    return frozenset(random_ppp(rng) for _ in range(rng.randint(0, max_size)))


def random_formula(rng: random.Random, pool: list[Atom], max_depth: int) -> Formula:
    r = rng.random()
    if max_depth == 0 or r < 0.40:
        return rng.choice(pool)
    if r < 0.44:
        return TOP
    if r < 0.48:
        return BOTTOM
    children = tuple(
        random_formula(rng, pool, max_depth - 1) for _ in range(rng.randint(1, 3))
    )
    return And(children) if rng.random() < 0.5 else Or(children)


def brute_force_entails(sigma: Formula, phi: Formula) -> bool:
    """Classical consequence by exhausting all valuations over the occurring
    atoms; independent of the model-generation path in logic.entails."""
    atoms = sorted(atoms_of(sigma) | atoms_of(phi),
                   key=lambda a: (a.factor.value, a.signature.value))
    for bits in itertools.product((False, True), repeat=len(atoms)):
        made_true = frozenset(a for a, b in zip(atoms, bits) if b)
        if satisfies(sigma, made_true) and not satisfies(phi, made_true):
            return False
    return True


def _fmt_spp(p: SzondiProfile) -> str:
    return "{" + ",".join(f"{f.value}:{s.value}" for f, s in zip(FACTORS, p.signatures)) + "}"


def _fmt_ppp(f: CattellProfile) -> str:
    return "{" + ",".join(f"{t.value}:{v}" for t, v in zip(TRAITS, f.values)) + "}"


def _fmt_sets(F: frozenset[CattellProfile], P: frozenset[SzondiProfile]) -> str:
    return ("F=[" + ", ".join(_fmt_ppp(f) for f in sorted(F, key=CattellProfile.sort_key)) + "] "
            "P=[" + ", ".join(_fmt_spp(p) for p in sorted(P, key=SzondiProfile.sort_key)) + "]")


def _shrink_sets(F: frozenset, P: frozenset, violates: Callable) -> tuple[frozenset, frozenset]:
    """Greedy minimization: drop elements while the violation persists."""
    changed = True
    while changed:
        changed = False
        for x in list(F):
            if violates(F - {x}, P):
                F = F - {x}
                changed = True
        for y in list(P):
            if violates(F, P - {y}):
                P = P - {y}
                changed = True
    return F, P


# Suite bodies.  Each returns None on success or a counterexample string.

def suite_signature_order(rng, trials, table) -> Optional[str]:
    sigs = SIGNATURES
    for a in sigs:
        if not a.leq(a):
            return f"not reflexive at {a.value}"
    for a in sigs:
        for b in sigs:
            if a.leq(b) and b.leq(a) and a is not b:
                return f"not antisymmetric at ({a.value},{b.value})"
            for c in sigs:
                if a.leq(b) and b.leq(c) and not a.leq(c):
                    return f"not transitive at ({a.value},{b.value},{c.value})"
    pairs = sum(1 for a in sigs for b in sigs if a.leq(b))
    if pairs != 51:
        return f"expected 51 comparable ordered pairs, found {pairs}"
    if Signature.AMBI_NEG.leq(Signature.ZERO) or Signature.ZERO.leq(Signature.AMBI):
        return "ambivalence chain must not compare with the main chain"
    if not Signature.NEG2.leq(Signature.POS1):
        return "-!! <= +! must hold within the main chain"
    return None


def suite_signature_flip(rng, trials, table) -> Optional[str]:
    for a in SIGNATURES:
        if a.flipped().flipped() is not a:
            return f"flip not an involution at {a.value}"
    for a in SIGNATURES:
        for b in SIGNATURES:
            if a.leq(b) != b.flipped().leq(a.flipped()):
                return f"flip not an order antiautomorphism at ({a.value},{b.value})"
    if Signature.ZERO.flipped() is not Signature.ZERO or Signature.AMBI.flipped() is not Signature.AMBI:
        return "flip must fix 0 and pm"
    if Signature.AMBI_POS.flipped() is not Signature.AMBI_NEG:
        return "flip must swap the ambivalence biases"
    return None


def _random_factor_box(rng: random.Random, max_dim: int = 4) -> FactorBox:
    return FactorBox(tuple(
        frozenset(rng.sample(SIGNATURES, rng.randint(0, max_dim))) for _ in FACTORS
    ))


def suite_box_algebra(rng, trials, table) -> Optional[str]:
    for _ in range(trials):
        a = _random_factor_box(rng)
        b = _random_factor_box(rng)
        x = random_spp(rng)
        meet = a.intersect(b)
        if meet.member(x) != (a.member(x) and b.member(x)):
            return f"membership law failed at x={_fmt_spp(x)}"
        if a.intersect(a) != a or a.intersect(FactorBox.full()) != a:
            return "intersection not idempotent or full box not an identity"
        small = FactorBox(tuple(
            frozenset(rng.sample(SIGNATURES, rng.randint(0, 3))) for _ in FACTORS
        ))
        card = small.cardinality()
        if card <= 10**4:
            listed = sum(1 for _ in small.profiles())
            if listed != card:
                return f"cardinality {card} disagrees with enumeration count {listed}"
    return None


def _atom_pool(rng: random.Random, size: int = 8) -> list[Atom]:
    # A small pool over few factors so random formulas interact.
    factors = rng.sample(FACTORS, 3)
    pool = [Atom(f, s) for f in factors for s in rng.sample(SIGNATURES, 4)]
    rng.shuffle(pool)
    return pool[:size]


def suite_entailment_bruteforce(rng, trials, table) -> Optional[str]:
    for _ in range(trials):
        pool = _atom_pool(rng)
        sigma = random_formula(rng, pool, 3)
        phi = random_formula(rng, pool, 3)
        if entails(sigma, phi) != brute_force_entails(sigma, phi):
            from .logic import format_formula
            return (f"entails disagrees with brute force: sigma="
                    f"{format_formula(sigma)} phi={format_formula(phi)}")
    return None


def suite_entailment_preorder(rng, trials, table) -> Optional[str]:
    from .logic import format_formula
    for _ in range(trials):
        pool = _atom_pool(rng)
        a = random_formula(rng, pool, 2)
        if not entails(a, a):
            return f"entails not reflexive at {format_formula(a)}"
        # Weakening chains give non-vacuous transitivity instances.
        b = Or((a, random_formula(rng, pool, 2)))
        c = Or((b, random_formula(rng, pool, 2)))
        if not (entails(a, b) and entails(b, c) and entails(a, c)):
            return f"weakening chain broke transitivity at {format_formula(a)}"
    return None


def suite_profile_reduction(rng, trials, table) -> Optional[str]:
    full_pool = [Atom(f, s) for f in FACTORS for s in SIGNATURES]
    for _ in range(trials):
        p = random_spp(rng)
        pool = [rng.choice(full_pool) for _ in range(8)]
        phi = random_formula(rng, pool, 3)
        if entails(spp_formula(p), phi) != evaluate(phi, p):
            from .logic import format_formula
            return f"profile reduction failed at p={_fmt_spp(p)} phi={format_formula(phi)}"
    return None


def suite_table_structure(rng, trials, table) -> Optional[str]:
    for trait in TRAITS:
        for low, high in ((3, 4), (5, 6), (7, 8)):
            if table.formula(trait, low) != table.formula(trait, high):
                return f"columns {low} and {high} differ for trait {trait.value}"
    for trait in POLARITY_SYMMETRIC_TRAITS:
        for k in (1, 2, 3, 4):
            low = table.box(trait, k)
            high = table.box(trait, 11 - k)
            flipped = FactorBox(tuple(
                frozenset(s.flipped() for s in dim) for dim in high.allowed
            ))
            if low != flipped:
                return f"polarity symmetry failed for trait {trait.value} at value {k}"
    for trait in TRAITS:
        for value in TRAIT_VALUES:
            box = table.box(trait, value)  # construction already validates
            if box.is_empty():
                return f"cell ({trait.value},{value}) denotes the empty set"
    return None


def suite_fact1_monotone(rng, trials, table) -> Optional[str]:
    for _ in range(trials):
        F = random_ppp_set(rng, 2)
        F_sup = F | random_ppp_set(rng, 2)
        if not entails(ppp_set_formula(F_sup, table), ppp_set_formula(F, table)):
            return "larger PPP set failed to entail the smaller: " + _fmt_sets(F_sup, frozenset())
        P = random_spp_set(rng, 2)
        P_sup = P | random_spp_set(rng, 2)
        if not entails(spp_set_formula(P), spp_set_formula(P_sup)):
            return "smaller SPP set failed to entail the larger: " + _fmt_sets(frozenset(), P_sup)
    return None


def suite_fact1_injectivity(rng, trials, table) -> Optional[str]:
    if not equivalent(table.formula(Trait.A, 3), table.formula(Trait.A, 4)):
        return "expected (A,3) and (A,4) to have equivalent cells"
    for _ in range(trials):
        p1 = random_spp(rng)
        p2 = random_spp(rng)
        while p2 == p1:
            p2 = random_spp(rng)
        if equivalent(spp_formula(p1), spp_formula(p2)):
            return f"distinct SPPs map to equivalent formulas: {_fmt_spp(p1)} {_fmt_spp(p2)}"
    return None


def suite_lemma1_antitone(rng, trials, table) -> Optional[str]:
    for _ in range(trials):
        F = random_ppp_set(rng, 2)
        F_sup = F | random_ppp_set(rng, 2)
        if not right_polarity(F_sup, table).issubset(right_polarity(F, table)):
            return "right polarity not antitone: " + _fmt_sets(F_sup, frozenset())
        P = random_spp_set(rng, 2)
        P_sup = P | random_spp_set(rng, 2)
        if not left_polarity(P_sup, table).issubset(left_polarity(P, table)):
            return "left polarity not antitone: " + _fmt_sets(frozenset(), P_sup)
    return None


def suite_lemma1_inflationary(rng, trials, table) -> Optional[str]:
    for _ in range(trials):
        P = random_spp_set(rng, 3)
        closure = right_polarity_box(left_polarity(P, table), table)
        for p in P:
            if not closure.member(p):
                return f"SPP closure lost {_fmt_spp(p)}"
        F = random_ppp_set(rng, 3)
        closure_f = left_polarity_box(right_polarity(F, table), table)
        for f in F:
            if not closure_f.member(f):
                return f"PPP closure lost {_fmt_ppp(f)}"
    return None


def suite_closure_identity(rng, trials, table) -> Optional[str]:
    # Standard polarity identity: applying right-left-right equals right.
    for _ in range(trials):
        F = random_ppp_set(rng, 3)
        once = right_polarity(F, table)
        thrice = right_polarity_box(left_polarity_box(once, table), table)
        if once.canonical() != thrice.canonical():
            return "right-left-right differs from right at " + _fmt_sets(F, frozenset())
    return None


def suite_theorem1(rng, trials, table) -> Optional[str]:
    def violates(F, P):
        right = right_polarity(F, table)
        left = left_polarity(P, table)
        return all(right.member(p) for p in P) != all(left.member(f) for f in F)

    for _ in range(trials):
        F = random_ppp_set(rng, 3)
        P = random_spp_set(rng, 3)
        if violates(F, P):
            F, P = _shrink_sets(F, P, violates)
            return "Galois biconditional failed: " + _fmt_sets(F, P)
    return None


def suite_theorem1_correlated(rng, trials, table) -> Optional[str]:
    # Draw one side from the other's polarity image so that the
    # both-inclusions-hold branch of the biconditional is exercised.
    def violates(F, P):
        right = right_polarity(F, table)
        left = left_polarity(P, table)
        return all(right.member(p) for p in P) != all(left.member(f) for f in F)

    for _ in range(trials):
        if rng.random() < 0.5:
            F = random_ppp_set(rng, 2)
            members = list(right_polarity(F, table).profiles(limit=2))
            P = frozenset(members[: rng.randint(0, len(members))])
        else:
            P = random_spp_set(rng, 2)
            members = list(left_polarity(P, table).profiles(limit=2))
            F = frozenset(members[: rng.randint(0, len(members))])
        if violates(F, P):
            F, P = _shrink_sets(F, P, violates)
            return "Galois biconditional failed: " + _fmt_sets(F, P)
    return None


def suite_union_intersection(rng, trials, table) -> Optional[str]:
    for _ in range(trials):
        F1 = random_ppp_set(rng, 2)
        F2 = random_ppp_set(rng, 2)
        joint = right_polarity(F1 | F2, table)
        split = right_polarity(F1, table).intersect(right_polarity(F2, table))
        if joint != split:
            return "union-to-intersection failed: " + _fmt_sets(F1 | F2, frozenset())
    return None


def _three_point_subspace() -> Subspace:
    sigs = (Signature.NEG, Signature.ZERO, Signature.POS)
    return Subspace.full().restrict_factors({f: sigs for f in FACTORS})


def suite_oracle_right(rng, trials, table) -> Optional[str]:
    sub = _three_point_subspace()
    sub_box = FactorBox(sub.factor_sets)
    for _ in range(trials):
        F = random_ppp_set(rng, 2)
        restricted = right_polarity(F, table).intersect(sub_box)
        expected = list(restricted.profiles())
        actual = right_polarity_oracle(F, sub, table)
        if expected != actual:
            return (f"box and oracle disagree ({len(expected)} vs {len(actual)} members): "
                    + _fmt_sets(F, frozenset()))
    return None


def suite_oracle_left(rng, trials, table) -> Optional[str]:
    # Per-trait scan through the formula evaluator, independent of the
    # box-membership route used by left_polarity.
    for _ in range(trials):
        P = random_spp_set(rng, 3)
        members = list(P)
        box = left_polarity(P, table)
        for trait in TRAITS:
            scanned = frozenset(
                v for v in TRAIT_VALUES
                if all(evaluate(table.formula(trait, v), p) for p in members)
            )
            if scanned != box.allowed_for(trait):
                return (f"left polarity disagrees with eval scan on trait "
                        f"{trait.value}: " + _fmt_sets(frozenset(), P))
    return None


def suite_bigfive(rng, trials, table) -> Optional[str]:
    for _ in range(trials):
        p = random_spp(rng)
        v = rng.randint(1, 9)
        for g in GlobalFactor:
            whole = evaluate(global_factor_formula(g, v, table=table), p)
            parts = any(
                evaluate(table.formula(t, (10 - v) if reversed_ else v), p)
                for t, reversed_ in GLOBAL_FACTOR_COMPONENTS[g]
            )
            if whole != parts:
                return f"{g.value} at value {v} is not the disjunction of its components"
    for g in GlobalFactor:
        has_reversed = any(r for _, r in GLOBAL_FACTOR_COMPONENTS[g])
        try:
            global_factor_formula(g, 10, table=table)
            raised = False
        except ReversedValueOutOfRange:
            raised = True
        if raised != has_reversed:
            return f"value-10 reversal handling wrong for {g.value}"
        # The corrected 11-v mode must accept the whole range.
        try:
            global_factor_formula(g, 10, corrected_reversal=True, table=table)
        except ReversedValueOutOfRange:
            return f"corrected reversal must accept value 10 for {g.value}"
    return None


@dataclass
class SuiteResult:
    name: str
    trials: int
    passed: bool
    counterexample: Optional[str] = None


@dataclass
class CheckReport:
    trials: int
    seed: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


# (name, body, trial cap); None caps nothing, 1 marks deterministic suites.
_SUITES: tuple[tuple[str, Callable, Optional[int]], ...] = (
    ("signature-order", suite_signature_order, 1),
    ("signature-flip", suite_signature_flip, 1),
    ("box-algebra", suite_box_algebra, 300),
    ("entailment-bruteforce", suite_entailment_bruteforce, 200),
    ("entailment-preorder", suite_entailment_preorder, 300),
    ("profile-entailment-reduction", suite_profile_reduction, 300),
    ("table-structure", suite_table_structure, 1),
    ("fact1-monotonicity", suite_fact1_monotone, 500),
    ("fact1-injectivity", suite_fact1_injectivity, 500),
    ("lemma1-antitonicity", suite_lemma1_antitone, None),
    ("lemma1-inflationary", suite_lemma1_inflationary, None),
    ("closure-identity", suite_closure_identity, 300),
    ("theorem1-biconditional", suite_theorem1, None),
    ("theorem1-correlated", suite_theorem1_correlated, 300),
    ("union-to-intersection", suite_union_intersection, 300),
    ("oracle-right", suite_oracle_right, 100),
    ("oracle-left", suite_oracle_left, 100),
    ("bigfive-composition", suite_bigfive, 100),
)


def run_checks(trials: int, seed: int,
               table: TranslationTable = STANDARD_TABLE) -> CheckReport:
    """Run every suite with a per-suite RNG derived from the seed.

    trials scales the randomized suites (each has a cost cap); zero trials
    runs nothing and reports an empty, passing result.
    """
    report = CheckReport(trials=trials, seed=seed)
    if trials <= 0:
        return report
    for name, body, cap in _SUITES:
        n = trials if cap is None else min(trials, cap)
        rng = random.Random(f"{seed}:{name}")
        counterexample = body(rng, n, table)
        report.suites.append(
            SuiteResult(name=name, trials=n, passed=counterexample is None,
                        counterexample=counterexample)
        )
    return report

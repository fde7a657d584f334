"""Formula evaluation, minimal models, entailment and the text form."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cattell_szondi.core import FACTORS, Factor, Signature, SzondiProfile
from cattell_szondi.logic import (
    And,
    Atom,
    BOTTOM,
    FormulaSyntaxError,
    ModelLimitError,
    Or,
    TOP,
    atoms_of,
    canonicalize,
    conj,
    disj,
    entails,
    equivalent,
    evaluate,
    format_formula,
    minimal_models,
    parse_formula,
    profile_atoms,
    satisfies,
)
from cattell_szondi.translation import norm_profile, spp_formula, trait_formula
from cattell_szondi.core import Trait

S = Signature

h_pos = Atom(Factor.H, S.POS)
h_neg = Atom(Factor.H, S.NEG)
s_pos1 = Atom(Factor.S, S.POS1)
s_neg1 = Atom(Factor.S, S.NEG1)
k_neg = Atom(Factor.K, S.NEG)
p_pos = Atom(Factor.P, S.POS)

# A fixed eight-atom pool keeps brute-force checks at 2^8 valuations.
_POOL = [Atom(Factor.H, s) for s in (S.POS, S.NEG, S.ZERO, S.POS1)] + \
        [Atom(Factor.S, s) for s in (S.POS, S.NEG)] + \
        [Atom(Factor.K, s) for s in (S.AMBI, S.NEG)]

pool_atoms = st.sampled_from(_POOL)
formulas = st.recursive(
    pool_atoms | st.just(TOP) | st.just(BOTTOM),
    lambda child: st.builds(lambda cs: And(tuple(cs)),
                            st.lists(child, min_size=1, max_size=3))
    | st.builds(lambda cs: Or(tuple(cs)), st.lists(child, min_size=1, max_size=3)),
    max_leaves=10,
)
signatures = st.sampled_from(tuple(Signature))
spps = st.builds(lambda sigs: SzondiProfile(tuple(sigs)),
                 st.tuples(*[signatures] * 8))


def brute_force_entails(sigma, phi):
    atoms = sorted(atoms_of(sigma) | atoms_of(phi),
                   key=lambda a: (a.factor.value, a.signature.value))
    for bits in itertools.product((False, True), repeat=len(atoms)):
        made_true = frozenset(a for a, b in zip(atoms, bits) if b)
        if satisfies(sigma, made_true) and not satisfies(phi, made_true):
            return False
    return True


class TestConstruction:
    def test_connectives_need_children(self):
        with pytest.raises(ValueError):
            And(())
        with pytest.raises(ValueError):
            Or(())

    def test_empty_conjunction_is_top(self):
        assert conj([]) is TOP
        assert disj([]) is BOTTOM
        assert conj([h_pos]) is h_pos

    def test_atom_alphabet_size(self):
        assert len({Atom(f, s) for f in FACTORS for s in Signature}) == 96


class TestEvaluate:
    def test_atom_against_norm_profile(self):
        assert evaluate(h_pos, norm_profile())

    def test_top_bottom(self):
        assert evaluate(TOP, norm_profile())
        assert not evaluate(BOTTOM, norm_profile())

    def test_high_b_cell_fails_on_norm(self):
        # The norm profile has p=-, so k- & p+ is false.
        assert not evaluate(And((k_neg, p_pos)), norm_profile())

    @given(formulas, spps)
    def test_agrees_with_valuation_semantics(self, phi, p):
        assert evaluate(phi, p) == satisfies(phi, profile_atoms(p))


class TestMinimalModels:
    def test_atom(self):
        assert minimal_models(h_pos) == frozenset({frozenset({h_pos})})

    def test_disjunction(self):
        assert minimal_models(Or((s_pos1, s_neg1))) == frozenset(
            {frozenset({s_pos1}), frozenset({s_neg1})})

    def test_bottom_has_no_models(self):
        assert minimal_models(BOTTOM) == frozenset()

    def test_absorption_minimizes(self):
        phi = And((Or((h_pos, k_neg)), h_pos))
        assert minimal_models(phi) == frozenset({frozenset({h_pos})})

    def test_limit_enforced(self):
        wide = And(tuple(Or((Atom(f, S.POS), Atom(f, S.NEG))) for f in FACTORS))
        with pytest.raises(ModelLimitError):
            minimal_models(wide, limit=100)
        assert len(minimal_models(wide)) == 2 ** 8


class TestEntails:
    def test_conjunct_weakening(self):
        assert entails(And((h_pos, Atom(Factor.S, S.POS))), h_pos)

    def test_disjunct_introduction(self):
        assert entails(h_pos, Or((h_pos, h_neg)))

    def test_norm_profile_fails_high_b(self):
        sigma = spp_formula(norm_profile())
        assert not entails(sigma, trait_formula(Trait.B, 7))

    def test_equivalence_examples(self):
        assert equivalent(TOP, conj([]))
        assert not equivalent(h_pos, Atom(Factor.H, S.POS1))

    @settings(max_examples=150)
    @given(formulas, formulas)
    def test_matches_brute_force(self, sigma, phi):
        assert entails(sigma, phi) == brute_force_entails(sigma, phi)

    @given(formulas)
    def test_reflexive(self, phi):
        assert entails(phi, phi)

    @given(formulas, formulas, formulas)
    def test_weakening_chain_transitive(self, a, x, y):
        b = Or((a, x))
        c = Or((b, y))
        assert entails(a, b) and entails(b, c) and entails(a, c)

    @settings(max_examples=150)
    @given(spps, formulas)
    def test_profile_entailment_reduces_to_evaluation(self, p, phi):
        assert entails(spp_formula(p), phi) == evaluate(phi, p)


class TestTextForm:
    def test_format_example(self):
        phi = And((h_pos, Or((s_pos1, s_neg1))))
        assert format_formula(phi) == "(and (atom h +) (or (atom s +!) (atom s -!)))"

    def test_parse_example(self):
        assert parse_formula("(and (atom h +) (or (atom s +!) (atom s -!)))") == And(
            (h_pos, Or((s_pos1, s_neg1))))
        assert parse_formula("(top)") is TOP
        assert parse_formula("(bot)") is BOTTOM

    @given(formulas)
    def test_round_trip(self, phi):
        assert parse_formula(format_formula(phi)) == phi

    @pytest.mark.parametrize("text", [
        "",
        "(atom h)",
        "(atom q +)",
        "(atom h ++)",
        "(and)",
        "(not (atom h +))",
        "(atom h +) (atom h -)",
        "(or (atom h +)",
    ])
    def test_rejects_malformed(self, text):
        with pytest.raises(FormulaSyntaxError):
            parse_formula(text)


class TestCanonicalize:
    def test_flattens_and_dedups(self):
        nested = And((And((h_pos, h_pos)), k_neg))
        assert canonicalize(nested) == And((h_pos, k_neg))

    def test_unwraps_singletons(self):
        assert canonicalize(And((h_pos,))) is h_pos

    @given(formulas, spps)
    def test_preserves_truth(self, phi, p):
        assert evaluate(canonicalize(phi), p) == evaluate(phi, p)

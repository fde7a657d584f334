"""Galois connection between Cattell PsychEval and Szondi personality profiles.

The right polarity translates sets of Cattell profiles into the box of
compatible Szondi profiles; the left polarity translates sets of Szondi
profiles back into the box of entailed Cattell profiles.  Both go through a
negation-free propositional pivot language over signed-factor atoms.
"""

from .core import (
    FACTORS,
    Factor,
    FactorBox,
    CattellProfile,
    SIGNATURES,
    Signature,
    SzondiProfile,
    TRAIT_VALUES,
    TRAITS,
    Trait,
    TraitBox,
    Vector,
    signature_flip,
    signature_leq,
)
from .logic import (
    And,
    Atom,
    BOTTOM,
    Bottom,
    Formula,
    FormulaSyntaxError,
    ModelLimitError,
    Or,
    TOP,
    Top,
    entails,
    equivalent,
    evaluate,
    format_formula,
    minimal_models,
    parse_formula,
)
from .translation import (
    GlobalFactor,
    NotBoxRepresentable,
    ReversedValueOutOfRange,
    STANDARD_TABLE,
    TranslationTable,
    global_factor_formula,
    norm_profile,
    ppp_formula,
    ppp_set_formula,
    spp_formula,
    spp_set_formula,
    trait_box,
    trait_formula,
)
from .galois import (
    Subspace,
    SubspaceTooLargeError,
    closure_ppp,
    closure_spp,
    kernel_equivalent_ppp,
    kernel_equivalent_spp,
    left_polarity,
    left_polarity_box,
    left_polarity_oracle,
    right_polarity,
    right_polarity_box,
    right_polarity_oracle,
)
from .checks import CheckReport, SuiteResult, run_checks

__version__ = "0.1.0"

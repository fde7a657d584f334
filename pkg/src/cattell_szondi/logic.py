"""Negation-free propositional formulas over signed-factor atoms.

Atoms pair a factor with a signature (96 in total).  Formulas are built from
atoms with conjunction and disjunction only; the empty conjunction is TOP and
the empty disjunction is BOTTOM.  Because the fragment is monotone, logical
consequence can be decided by generating the (finitely many) models obtained
by distributing disjunction over conjunction: sigma entails phi iff every
generated model of sigma satisfies phi.

Formulas have a human-auditable prefix text form:

    formula := "(top)" | "(bot)" | "(atom " factor " " sig ")"
             | "(and " formula+ ")" | "(or " formula+ ")"
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Union

from .core import (
    FACTOR_BY_TOKEN,
    FACTOR_INDEX,
    Factor,
    Signature,
    SIGNATURE_BY_TOKEN,
    SIGNATURE_INDEX,
    SzondiProfile,
)

# Generated-model sets larger than this abort with ModelLimitError.
DEFAULT_MODEL_LIMIT = 10**6


class ModelLimitError(RuntimeError):
    """Signals combinatorial blowup while distributing Or over And."""


class FormulaSyntaxError(ValueError):
    """Raised when formula text does not match the grammar."""


@dataclass(frozen=True)
class Atom:
    factor: Factor
    signature: Signature


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class And:
    children: tuple["Formula", ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("And needs at least one child; use TOP for the empty conjunction")


@dataclass(frozen=True)
class Or:
    children: tuple["Formula", ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("Or needs at least one child; use BOTTOM for the empty disjunction")


Formula = Union[Atom, Top, Bottom, And, Or]

TOP = Top()
BOTTOM = Bottom()


def conj(children: Iterable[Formula]) -> Formula:
    """Conjunction of the given formulas; TOP when empty, unwrapped when single."""
    items = tuple(children)
    if not items:
        return TOP
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(children: Iterable[Formula]) -> Formula:
    """Disjunction of the given formulas; BOTTOM when empty, unwrapped when single."""
    items = tuple(children)
    if not items:
        return BOTTOM
    if len(items) == 1:
        return items[0]
    return Or(items)


def evaluate(phi: Formula, profile: SzondiProfile) -> bool:
    """Truth of phi under the valuation making exactly the profile's eight
    atoms true (each factor contributes its assigned signature)."""
    t = type(phi)
    if t is Atom:
        return profile.signatures[FACTOR_INDEX[phi.factor]] is phi.signature
    if t is And:
        return all(evaluate(c, profile) for c in phi.children)
    if t is Or:
        return any(evaluate(c, profile) for c in phi.children)
    if t is Top:
        return True
    if t is Bottom:
        return False
    raise TypeError(f"not a formula: {phi!r}")


def satisfies(phi: Formula, true_atoms: AbstractSet[Atom]) -> bool:
    """Truth of phi under an arbitrary valuation given as its set of true atoms."""
    t = type(phi)
    if t is Atom:
        return phi in true_atoms
    if t is And:
        return all(satisfies(c, true_atoms) for c in phi.children)
    if t is Or:
        return any(satisfies(c, true_atoms) for c in phi.children)
    if t is Top:
        return True
    if t is Bottom:
        return False
    raise TypeError(f"not a formula: {phi!r}")


def atoms_of(phi: Formula) -> frozenset[Atom]:
    """All atoms occurring in phi."""
    t = type(phi)
    if t is Atom:
        return frozenset((phi,))
    if t in (And, Or):
        out: set[Atom] = set()
        for c in phi.children:
            out |= atoms_of(c)
        return frozenset(out)
    return frozenset()


def profile_atoms(profile: SzondiProfile) -> frozenset[Atom]:
    return frozenset(Atom(f, s) for f, s in profile.as_map().items())


def _generated_models(phi: Formula, limit: int) -> set[frozenset[Atom]]:
    """Models obtained by distributing Or over And.

    Each returned atom set, taken as the exact set of true atoms, satisfies
    phi, and every satisfying valuation contains one of the returned sets.
    The set is not minimized here.
    """
    t = type(phi)
    if t is Atom:
        return {frozenset((phi,))}
    if t is Top:
        return {frozenset()}
    if t is Bottom:
        return set()
    if t is Or:
        out: set[frozenset[Atom]] = set()
        for c in phi.children:
            out |= _generated_models(c, limit)
            if len(out) > limit:
                raise ModelLimitError(f"model count exceeds limit {limit}")
        return out
    if t is And:
        acc: set[frozenset[Atom]] = {frozenset()}
        for c in phi.children:
            child = _generated_models(c, limit)
            acc = {a | b for a in acc for b in child}
            if len(acc) > limit:
                raise ModelLimitError(f"model count exceeds limit {limit}")
        return acc
    raise TypeError(f"not a formula: {phi!r}")


def minimal_models(phi: Formula, limit: int = DEFAULT_MODEL_LIMIT) -> frozenset[frozenset[Atom]]:
    """The inclusion-minimal sets of atoms whose exact truth satisfies phi."""
    candidates = sorted(_generated_models(phi, limit), key=len)
    kept: list[frozenset[Atom]] = []
    for cand in candidates:
        if not any(k <= cand for k in kept):
            kept.append(cand)
    return frozenset(kept)


def entails(sigma: Formula, phi: Formula, limit: int = DEFAULT_MODEL_LIMIT) -> bool:
    """Logical consequence sigma => phi, valid for the negation-free fragment.

    Every satisfying valuation of sigma extends one of its generated models,
    and phi is monotone, so it suffices that phi hold at each generated model.
    """
    return all(satisfies(phi, model) for model in _generated_models(sigma, limit))


def equivalent(phi: Formula, psi: Formula, limit: int = DEFAULT_MODEL_LIMIT) -> bool:
    """Mutual entailment."""
    return entails(phi, psi, limit) and entails(psi, phi, limit)


def canonicalize(phi: Formula) -> Formula:
    """Flatten nested connectives of the same kind, drop duplicate children
    (keeping first occurrence), and unwrap single-child connectives."""
    t = type(phi)
    if t not in (And, Or):
        return phi
    flat: list[Formula] = []
    for c in phi.children:
        c = canonicalize(c)
        if type(c) is t:
            flat.extend(c.children)
        else:
            flat.append(c)
    seen: list[Formula] = []
    for c in flat:
        if c not in seen:
            seen.append(c)
    return conj(seen) if t is And else disj(seen)


def format_formula(phi: Formula) -> str:
    """Prefix text form, e.g. ``(and (atom h +) (or (atom s +!) (atom s -!)))``."""
    t = type(phi)
    if t is Top:
        return "(top)"
    if t is Bottom:
        return "(bot)"
    if t is Atom:
        return f"(atom {phi.factor.value} {phi.signature.value})"
    if t is And:
        return "(and " + " ".join(format_formula(c) for c in phi.children) + ")"
    if t is Or:
        return "(or " + " ".join(format_formula(c) for c in phi.children) + ")"
    raise TypeError(f"not a formula: {phi!r}")


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_formula(text: str) -> Formula:
    """Inverse of format_formula; raises FormulaSyntaxError on malformed input."""
    tokens = _tokenize(text)
    if not tokens:
        raise FormulaSyntaxError("empty formula text")
    phi, rest = _parse(tokens, 0)
    if rest != len(tokens):
        raise FormulaSyntaxError(f"trailing tokens after formula: {' '.join(tokens[rest:])}")
    return phi


def _parse(tokens: list[str], i: int) -> tuple[Formula, int]:
    if tokens[i] != "(":
        raise FormulaSyntaxError(f"expected '(' at token {i}, got {tokens[i]!r}")
    i += 1
    if i >= len(tokens):
        raise FormulaSyntaxError("unexpected end of input")
    head = tokens[i]
    i += 1
    if head in ("top", "bot"):
        if i >= len(tokens) or tokens[i] != ")":
            raise FormulaSyntaxError(f"expected ')' after {head}")
        return (TOP if head == "top" else BOTTOM), i + 1
    if head == "atom":
        if i + 2 >= len(tokens) or tokens[i + 2] != ")":
            raise FormulaSyntaxError("atom takes exactly a factor and a signature")
        factor = FACTOR_BY_TOKEN.get(tokens[i])
        sig = SIGNATURE_BY_TOKEN.get(tokens[i + 1])
        if factor is None:
            raise FormulaSyntaxError(f"unknown factor {tokens[i]!r}")
        if sig is None:
            raise FormulaSyntaxError(f"unknown signature {tokens[i + 1]!r}")
        return Atom(factor, sig), i + 3
    if head in ("and", "or"):
        children: list[Formula] = []
        while i < len(tokens) and tokens[i] != ")":
            child, i = _parse(tokens, i)
            children.append(child)
        if i >= len(tokens):
            raise FormulaSyntaxError(f"unterminated ({head} ...)")
        if not children:
            raise FormulaSyntaxError(f"({head}) needs at least one child")
        node = And(tuple(children)) if head == "and" else Or(tuple(children))
        return node, i + 1
    raise FormulaSyntaxError(f"unknown connective {head!r}")


def atom_sort_key(atom: Atom) -> tuple[int, int]:
    return (FACTOR_INDEX[atom.factor], SIGNATURE_INDEX[atom.signature])

"""HTTP front end over the translation library.

Endpoints mirror the library's operations one-to-one: polarity queries on
profile documents, the seeded property-check runner, the auditable table
dump, the norm-profile demonstration, the empty-image search and the
global-factor equations.  All handlers are pure functions of their inputs.
"""

from __future__ import annotations

import csv
import io
import random
from typing import Annotated, Union

from fastapi import Body, FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse

from .. import checks
from ..core import FACTORS, SIGNATURE_INDEX, TRAIT_VALUES, TRAITS
from ..galois import explain_empty_image, left_polarity, right_polarity
from ..logic import evaluate, format_formula
from ..translation import (
    GlobalFactor,
    PUBLISHED_NORM_FAILING,
    ReversedValueOutOfRange,
    STANDARD_TABLE,
    global_factor_components,
    global_factor_formula,
    norm_profile,
    spp_formula,
)
from . import schemas

app = FastAPI(
    title="cattell-szondi",
    description="Galois connection between Cattell PsychEval profiles and "
                "Szondi personality profiles",
)

RightBody = Annotated[
    Union[schemas.PppDocument, schemas.PppSetDocument],
    Body(discriminator="type"),
]
LeftBody = Annotated[
    Union[schemas.SppDocument, schemas.SppSetDocument],
    Body(discriminator="type"),
]


@app.post("/right", response_model=schemas.SppBoxDocument)
def right_endpoint(
    doc: RightBody,
    sample_limit: Annotated[int, Query(alias="enumerate", ge=0)] = 0,
) -> schemas.SppBoxDocument:
    """Right polarity: the box of SPPs compatible with the given PPP(s)."""
    if isinstance(doc, schemas.PppDocument):
        profiles = doc.profiles()
    else:
        profiles = doc.profile_objects()
    box = right_polarity(profiles)
    allowed = {
        f.value: [s.value for s in sorted(dim, key=SIGNATURE_INDEX.__getitem__)]
        for f, dim in zip(FACTORS, box.allowed)
    }
    sample = [schemas.spp_to_map(p) for p in box.profiles(limit=sample_limit)]
    return schemas.SppBoxDocument(
        allowed=allowed, cardinality=str(box.cardinality()), sample=sample
    )


@app.post("/left", response_model=schemas.TraitBoxDocument)
def left_endpoint(
    doc: LeftBody,
    explain: bool = Query(default=False),
) -> schemas.TraitBoxDocument:
    """Left polarity: the box of PPPs entailed by the given SPP(s)."""
    if isinstance(doc, schemas.SppDocument):
        profiles = doc.profiles()
    else:
        profiles = doc.profile_objects()
    box = left_polarity(profiles)
    allowed = {
        t.value: sorted(dim) for t, dim in zip(TRAITS, box.allowed)
    }
    explanation = None
    if explain:
        explanation = {}
        for trait, dim in zip(TRAITS, box.allowed):
            if dim:
                continue
            explanation[trait.value] = [
                schemas.CellEvaluation(
                    value=v,
                    formula=format_formula(STANDARD_TABLE.formula(trait, v)),
                    satisfied=all(
                        evaluate(STANDARD_TABLE.formula(trait, v), p) for p in profiles
                    ),
                )
                for v in TRAIT_VALUES
            ]
    return schemas.TraitBoxDocument(
        allowed=allowed, cardinality=str(box.cardinality()), explain=explanation
    )


@app.post("/check", response_model=schemas.CheckResponse)
def check_endpoint(req: schemas.CheckRequest) -> schemas.CheckResponse:
    """Run the seeded property suites."""
    report = checks.run_checks(req.trials, req.seed)
    return schemas.CheckResponse(
        passed=report.passed,
        trials=report.trials,
        seed=report.seed,
        suites=[
            schemas.SuiteReport(
                name=s.name, trials=s.trials, passed=s.passed,
                counterexample=s.counterexample,
            )
            for s in report.suites
        ],
    )


@app.get("/table.csv", response_class=PlainTextResponse)
def table_csv() -> PlainTextResponse:
    """All 280 table cells as CSV (trait, value, formula) for manual audit."""
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["trait", "value", "formula"])
    for trait, value, formula in STANDARD_TABLE.dump_rows():
        writer.writerow([trait, value, formula])
    return PlainTextResponse(out.getvalue(), media_type="text/csv")


@app.get("/norm-demo", response_model=schemas.NormDemoResponse)
def norm_demo() -> schemas.NormDemoResponse:
    """End-to-end reproduction of the norm-profile example: its formula, the
    empty left-polarity image, the computed failing traits, and where the
    computation disagrees with the published failing list."""
    norm = norm_profile()
    box = left_polarity([norm])
    failing = [t for t, dim in zip(TRAITS, box.allowed) if not dim]
    discrepancies = []
    for trait in sorted(PUBLISHED_NORM_FAILING, key=lambda t: t.value):
        satisfying = [
            v for v in TRAIT_VALUES
            if evaluate(STANDARD_TABLE.formula(trait, v), norm)
        ]
        if satisfying:
            discrepancies.append(
                schemas.NormDiscrepancy(trait=trait.value, satisfying_values=satisfying)
            )
    return schemas.NormDemoResponse(
        profile=schemas.spp_to_map(norm),
        formula=format_formula(spp_formula(norm)),
        allowed={t.value: sorted(dim) for t, dim in zip(TRAITS, box.allowed)},
        cardinality=str(box.cardinality()),
        empty=box.is_empty(),
        failing_traits=[t.value for t in failing],
        published_failing_traits=sorted(t.value for t in PUBLISHED_NORM_FAILING),
        discrepancies=discrepancies,
    )


@app.post("/find-empty", response_model=schemas.FindEmptyResponse)
def find_empty(req: schemas.FindEmptyRequest) -> schemas.FindEmptyResponse:
    """Sample random PPPs and report those whose right polarity is empty,
    with the trait pairs whose constraints clash."""
    rng = random.Random(req.seed)
    empty_count = 0
    examples: list[schemas.EmptyImageExample] = []
    for _ in range(req.samples):
        profile = checks.random_ppp(rng)
        box = right_polarity([profile])
        if not box.is_empty():
            continue
        empty_count += 1
        if len(examples) < req.max_examples:
            conflicts = explain_empty_image(profile)
            examples.append(schemas.EmptyImageExample(
                traits=schemas.ppp_to_map(profile),
                conflicts=[
                    schemas.FactorConflictModel(
                        factor=c.factor.value,
                        constraints=[
                            schemas.TraitConstraintModel(
                                trait=tc.trait.value,
                                value=tc.value,
                                allowed=[s.value for s in sorted(
                                    tc.allowed, key=SIGNATURE_INDEX.__getitem__)],
                            )
                            for tc in c.constraints
                        ],
                        conflicting_pairs=[
                            (a.value, b.value) for a, b in c.conflicting_pairs
                        ],
                    )
                    for c in conflicts
                ],
            ))
    return schemas.FindEmptyResponse(
        samples=req.samples, seed=req.seed,
        empty_count=empty_count, examples=examples,
    )


@app.get("/bigfive/{name}/{value}", response_model=schemas.BigFiveResponse)
def bigfive(name: str, value: int, corrected: bool = Query(default=False)) -> schemas.BigFiveResponse:
    """Global-factor equation for one value, as a formula document."""
    try:
        factor = GlobalFactor(name)
    except ValueError:
        known = ", ".join(g.value for g in GlobalFactor)
        raise HTTPException(status_code=404, detail=f"unknown global factor {name!r}; one of: {known}")
    try:
        components = global_factor_components(factor, value, corrected)
        formula = global_factor_formula(factor, value, corrected)
    except ReversedValueOutOfRange as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return schemas.BigFiveResponse(
        global_factor=factor.value,
        value=value,
        corrected_reversal=corrected,
        components=[{t.value: v} for t, v in components],
        formula=format_formula(formula),
    )

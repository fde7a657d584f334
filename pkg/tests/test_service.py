"""The HTTP surface: schemas, endpoints, validation failures."""

import pytest
from starlette.testclient import TestClient

from cattell_szondi.service import app, schemas
from cattell_szondi.core import TRAITS

client = TestClient(app)

ALL_FIVES = {t.value: 5 for t in TRAITS}
NORM_FACTORS = {"h": "+", "s": "+", "e": "-", "hy": "-",
                "k": "-", "p": "-", "d": "+", "m": "+"}


def ppp_doc(**overrides):
    traits = dict(ALL_FIVES)
    traits.update(overrides)
    return {"type": "ppp", "traits": traits}


class TestDocumentRoundTrip:
    @pytest.mark.parametrize("model,payload", [
        (schemas.PppDocument, {"type": "ppp", "traits": ALL_FIVES}),
        (schemas.SppDocument, {"type": "spp", "factors": NORM_FACTORS}),
        (schemas.PppSetDocument,
         {"type": "ppp_set", "profiles": [ALL_FIVES, dict(ALL_FIVES, A=1)]}),
        (schemas.SppSetDocument, {"type": "spp_set", "profiles": [NORM_FACTORS]}),
    ])
    def test_parse_format_identity(self, model, payload):
        doc = model.model_validate(payload)
        assert model.model_validate(doc.model_dump()) == doc
        assert doc.model_dump() == payload

    def test_profile_conversion_round_trip(self):
        profile = schemas.ppp_from_map(ALL_FIVES)
        assert schemas.ppp_to_map(profile) == ALL_FIVES
        spp = schemas.spp_from_map(NORM_FACTORS)
        assert schemas.spp_to_map(spp) == NORM_FACTORS


class TestRightEndpoint:
    def test_singleton_pinning_profile(self):
        response = client.post("/right?enumerate=2", json=ppp_doc(LE=9))
        assert response.status_code == 200
        body = response.json()
        assert body["type"] == "spp_box"
        assert body["cardinality"] == "1"
        assert body["allowed"]["h"] == ["0"]
        assert body["sample"] == [{f: "0" for f in
                                   ("h", "s", "e", "hy", "k", "p", "d", "m")}]

    def test_empty_set_gives_full_space(self):
        response = client.post("/right", json={"type": "ppp_set", "profiles": []})
        assert response.status_code == 200
        body = response.json()
        assert body["cardinality"] == "429981696"
        assert body["sample"] == []

    def test_conflicting_profile_gives_empty_box(self):
        response = client.post("/right", json=ppp_doc())
        body = response.json()
        assert body["cardinality"] == "0"
        assert body["allowed"]["s"] == []

    @pytest.mark.parametrize("mutate", [
        lambda d: d["traits"].pop("A"),
        lambda d: d["traits"].update(A=0),
        lambda d: d["traits"].update(A=11),
        lambda d: d["traits"].update(XX=5),
        lambda d: d.update(type="spp"),
        lambda d: d.update(extra=1),
    ])
    def test_invalid_documents_rejected(self, mutate):
        doc = ppp_doc()
        mutate(doc)
        assert client.post("/right", json=doc).status_code == 422


class TestLeftEndpoint:
    def test_norm_profile_empty_with_explanation(self):
        response = client.post("/left?explain=true",
                               json={"type": "spp", "factors": NORM_FACTORS})
        assert response.status_code == 200
        body = response.json()
        assert body["type"] == "trait_box"
        assert body["cardinality"] == "0"
        assert set(body["explain"]) == {
            "B", "G", "H", "Q3", "PS", "ST", "SR", "PI", "OT", "AP", "TI"}
        b_cells = body["explain"]["B"]
        assert len(b_cells) == 10
        assert all(not cell["satisfied"] for cell in b_cells)
        assert b_cells[0]["formula"] == "(and (atom k +!!) (atom p -!!))"

    def test_all_zero_profile(self):
        factors = {f: "0" for f in ("h", "s", "e", "hy", "k", "p", "d", "m")}
        response = client.post("/left", json={"type": "spp", "factors": factors})
        body = response.json()
        assert body["allowed"]["LE"] == [9, 10]
        assert body["allowed"]["A"] == [5, 6]
        assert body["cardinality"] == str(2**28)
        assert body["explain"] is None

    def test_empty_set_gives_full_space(self):
        response = client.post("/left", json={"type": "spp_set", "profiles": []})
        assert response.json()["cardinality"] == str(10**28)

    def test_unknown_signature_rejected(self):
        factors = dict(NORM_FACTORS, h="++")
        assert client.post(
            "/left", json={"type": "spp", "factors": factors}).status_code == 422


class TestCheckEndpoint:
    def test_small_run_passes(self):
        response = client.post("/check", json={"trials": 25, "seed": 9})
        assert response.status_code == 200
        body = response.json()
        assert body["passed"] is True
        assert len(body["suites"]) == 18

    def test_zero_trials(self):
        body = client.post("/check", json={"trials": 0, "seed": 0}).json()
        assert body["passed"] is True and body["suites"] == []

    def test_negative_trials_rejected(self):
        assert client.post("/check", json={"trials": -1}).status_code == 422


class TestTableEndpoint:
    def test_dump_has_281_lines_and_audit_row(self):
        response = client.get("/table.csv")
        assert response.status_code == 200
        lines = response.text.strip().splitlines()
        assert lines[0].strip() == "trait,value,formula"
        assert len(lines) == 281
        assert lines[1].strip() == "A,1,(atom h -!!)"
        assert "LE,5,(or (atom s +!) (atom s -!))" in (l.strip() for l in lines)


class TestNormDemoEndpoint:
    def test_report_content(self):
        body = client.get("/norm-demo").json()
        assert body["empty"] is True
        assert body["cardinality"] == "0"
        assert body["formula"].startswith("(and (atom h +) (atom s +)")
        assert set(body["failing_traits"]) == {
            "B", "G", "H", "Q3", "PS", "ST", "SR", "PI", "OT", "AP", "TI"}
        discrepancies = {d["trait"]: d["satisfying_values"]
                         for d in body["discrepancies"]}
        assert discrepancies == {"M": [3, 4], "LE": [7, 8], "TS": [7, 8]}


class TestFindEmptyEndpoint:
    def test_samples_report_conflicts(self):
        body = client.post("/find-empty",
                           json={"samples": 50, "seed": 12, "max_examples": 2}).json()
        assert body["samples"] == 50
        assert body["empty_count"] > 0
        assert len(body["examples"]) <= 2
        example = body["examples"][0]
        assert example["conflicts"], "an empty image must name a conflicting factor"
        conflict = example["conflicts"][0]
        assert conflict["constraints"]

    def test_deterministic(self):
        a = client.post("/find-empty", json={"samples": 40, "seed": 4}).json()
        b = client.post("/find-empty", json={"samples": 40, "seed": 4}).json()
        assert a == b


class TestBigFiveEndpoint:
    def test_formula_document(self):
        body = client.get("/bigfive/HighAnxiety/7").json()
        assert body["formula"] == ("(or (atom d -) (and (atom k -) (atom p -)) "
                                   "(atom p -) (atom e -))")
        assert body["components"] == [{"C": 7}, {"L": 7}, {"O": 7}, {"Q4": 7}]

    def test_reversal_failure_is_400(self):
        response = client.get("/bigfive/Extraversion/10")
        assert response.status_code == 400
        assert "reversed" in response.json()["detail"]

    def test_corrected_mode_accepts_ten(self):
        assert client.get("/bigfive/Extraversion/10?corrected=true").status_code == 200

    def test_unknown_global_is_404(self):
        assert client.get("/bigfive/Agreeableness/5").status_code == 404

    def test_out_of_range_value_is_400(self):
        assert client.get("/bigfive/HighAnxiety/11").status_code == 400

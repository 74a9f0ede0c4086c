import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from ringlab.documents import canonical_json
from ringlab.service import create_app
from ringlab.theorems import THEOREM_IDS


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestEndpoints:
    def test_health(self, client):
        resp = client.get("/v1/health")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"

    def test_theorem_listing(self, client):
        assert client.get("/v1/theorems").json()["theorems"] == THEOREM_IDS

    def test_describe(self, client):
        doc = client.post("/v1/describe", json={"spec": "Z4"}).json()
        result = doc["results"][0]
        assert result["order"] == 4
        assert [e["index"] for e in result["idempotents"]] == [0, 1]
        assert [e["index"] for e in result["units"]] == [1, 3]
        assert [e["index"] for e in result["jacobson_radical"]] == [0, 2]
        assert result["profile"]["local"] is True

    def test_describe_zero_ring_flagged(self, client):
        doc = client.post("/v1/describe", json={"spec": "Z1"}).json()
        assert any("most theorems not applicable" in n for n in doc["notes"])

    def test_describe_m2z2(self, client):
        doc = client.post("/v1/describe", json={"spec": "M2(Z2)"}).json()
        assert doc["results"][0]["order"] == 16
        assert doc["results"][0]["profile"]["regular"] is True

    def test_classify(self, client):
        doc = client.post("/v1/classify", json={"spec": "Z4", "element": "2"}).json()
        result = doc["results"][0]
        assert result["flags"]["regular"] is False
        assert result["flags"]["r_clean"] is True
        w = result["witnesses"]["r_clean"]
        assert (w["r"]["index"], w["e"]["index"], w["y"]["index"]) == (1, 1, 1)
        assert result["witnesses"]["clean"]["u"]["index"] == 1

    def test_classify_element_literal(self, client):
        doc = client.post(
            "/v1/classify", json={"spec": "M2(Z2)", "element": "[[1,0],[0,1]]"}
        ).json()
        assert doc["results"][0]["flags"]["unit"] is True

    def test_classify_z6_3(self, client):
        doc = client.post("/v1/classify", json={"spec": "Z6", "element": "3"}).json()
        result = doc["results"][0]
        assert result["flags"]["idempotent"] is True
        # y = 3 works (3*3*3 = 3), but the least valid inner inverse is 1.
        assert result["witnesses"]["regular"]["y"]["index"] == 1

    def test_verify(self, client):
        doc = client.post(
            "/v1/verify", json={"spec": "Z4", "theorem": "one-minus-x"}
        ).json()
        assert doc["results"][0]["outcome"] == "verified"

    def test_verify_not_applicable(self, client):
        doc = client.post(
            "/v1/verify", json={"spec": "Z6", "theorem": "clean-from-rclean"}
        ).json()
        assert doc["results"][0]["outcome"] == "not-applicable"

    def test_radical(self, client):
        doc = client.post("/v1/radical", json={"spec": "Z8"}).json()
        assert [e["index"] for e in doc["results"][0]["jacobson_radical"]] == [0, 2, 4, 6]

    def test_search(self, client):
        doc = client.post("/v1/search", json={"spec": "Z4", "regular": False}).json()
        assert [e["index"] for e in doc["results"][0]["matches"]] == [2]

    def test_search_rclean_not_clean_footnote(self, client):
        doc = client.post(
            "/v1/search", json={"spec": "Z6", "r_clean": True, "clean": False}
        ).json()
        assert doc["results"][0]["matches"] == []
        assert any("semiperfect" in n for n in doc["notes"])

    def test_suite_small(self, client):
        doc = client.post(
            "/v1/suite",
            json={"rings": ["Z4", "Z6"], "theorems": ["one-minus-x", "factor"],
                  "parallel": 1},
        ).json()
        assert doc["summary"]["cells"] == 4
        assert doc["summary"]["counterexamples"] == 0
        rings = [r["ring"] for r in doc["results"]]
        assert rings == sorted(rings)

    def test_suite_empty_corpus(self, client):
        doc = client.post("/v1/suite", json={"rings": [], "parallel": 1}).json()
        assert doc["summary"]["cells"] == 0

    def test_suite_records_skipped_rings(self, client):
        doc = client.post(
            "/v1/suite",
            json={"rings": ["Z4", "M3(Z4)"], "theorems": ["one-minus-x"],
                  "parallel": 1},
        ).json()
        assert doc["summary"]["skipped_rings"] == 1
        assert doc["skipped"][0]["spec"] == "M3(Z4)"
        assert doc["summary"]["cells"] == 1


class TestErrors:
    def test_parse_error_has_position(self, client):
        resp = client.post("/v1/describe", json={"spec": "M2(Z2"})
        assert resp.status_code == 422
        detail = resp.json()["detail"]
        assert detail["kind"] == "ParseError"
        assert detail["position"] == 5
        assert detail["expected"]

    def test_elaboration_error_has_subexpression(self, client):
        resp = client.post("/v1/describe", json={"spec": "corner(Z6, 2)"})
        assert resp.status_code == 422
        assert "corner(Z6, 2)" in resp.json()["detail"]["expr"]

    def test_size_cap_error(self, client):
        resp = client.post("/v1/describe", json={"spec": "M3(Z4)"})
        assert resp.status_code == 422

    def test_unknown_theorem_lists_available(self, client):
        resp = client.post("/v1/verify", json={"spec": "Z4", "theorem": "bogus"})
        assert resp.status_code == 422
        assert resp.json()["detail"]["available"] == THEOREM_IDS

    def test_bad_element_literal(self, client):
        resp = client.post("/v1/classify", json={"spec": "Z4", "element": "(1,"})
        assert resp.status_code == 422


class TestDocumentContract:
    def test_json_round_trip(self, client):
        doc = client.post("/v1/describe", json={"spec": "Z4"}).json()
        assert json.loads(canonical_json(doc)) == doc

    def test_timing_field_is_null(self, client):
        doc = client.post("/v1/describe", json={"spec": "Z4"}).json()
        assert doc["timing_seconds"] is None
        assert doc["schema_version"] == 1

    def test_repeated_requests_identical(self, client):
        a = client.post("/v1/classify", json={"spec": "Z9", "element": "3"}).json()
        b = client.post("/v1/classify", json={"spec": "Z9", "element": "3"}).json()
        assert canonical_json(a) == canonical_json(b)

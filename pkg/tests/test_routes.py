import pytest
from fastapi.testclient import TestClient

from main import app
from services.corpus import CorpusService


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c


def test_invariant_endpoint(client):
    loop = CorpusService.loadData("loop.json")
    response = client.post("/api/invariants/g", json=loop)
    assert response.status_code == 200
    assert response.json() == {"kind": "qsym", "basis": "U", "terms": [{"word": [0], "coeff": "1"}]}

    response = client.post("/api/invariants/tutte", json=CorpusService.loadData("mgon3.json"))
    assert response.json()["variables"] == ["x", "y"]
    assert {"exponents": [0, 1], "coeff": "1"} in response.json()["terms"]


def test_unknown_kind(client):
    response = client.post("/api/invariants/z", json={"type": "uniform", "r": 1, "n": 1})
    assert response.status_code == 404


def test_malformed_document(client):
    response = client.post("/api/invariants/p", json={"type": "rank_table", "n": 1, "rank": {"": 0}})
    assert response.status_code == 400
    assert response.json()["detail"] == "TABLE_LENGTH"

    response = client.post("/api/invariants/p", json={"type": "mystery"})
    assert response.status_code == 400
    assert response.json()["detail"] == "MALFORMED_DOCUMENT"


def test_axiom_violation(client):
    bad = {"type": "rank_table", "n": 2, "rank": {"": 0, "0": 1, "1": 1, "0,1": 3}}
    response = client.post("/api/invariants/p", json=bad)
    assert response.status_code == 422
    assert response.json()["detail"] == "AXIOM_VIOLATION"

    response = client.post("/api/validate", json=bad)
    assert response.status_code == 422
    assert response.json() == {"kind": "validation", "ok": False, "axiom": "submodular", "a": [0], "b": [1]}

    response = client.post("/api/validate", json={"type": "uniform", "r": 2, "n": 4})
    assert response.status_code == 200
    assert response.json() == {"kind": "validation", "ok": True}


def test_caps(client):
    response = client.post("/api/invariants/g", json={"type": "uniform", "r": 2, "n": 11})
    assert response.status_code == 413
    assert response.json()["detail"] == "CAP_EXCEEDED"


def test_not_a_matroid(client):
    response = client.post(
        "/api/invariants/f",
        json={"type": "rank_table", "n": 1, "rank": {"": 0, "0": 2}},
    )
    assert response.status_code == 422
    assert response.json()["detail"] == "NOT_A_MATROID"


def test_decompositions(client):
    response = client.post("/api/decompositions/check", json=CorpusService.loadData("u24split.json"))
    assert response.status_code == 200
    body = response.json()
    assert body["indicator"]["ok"]
    assert body["valuative"]["ok"]

    response = client.post(
        "/api/decompositions/check?denom=2", json=CorpusService.loadData("u24broken.json")
    )
    body = response.json()
    assert not body["indicator"]["ok"]
    assert body["indicator"]["value"] == "-1"
    assert not body["valuative"]["ok"]


def test_corpus_endpoints(client):
    response = client.get("/api/corpus")
    assert response.status_code == 200
    ids = [entry["id"] for entry in response.json()]
    assert "loop" in ids
    assert len(ids) == len(set(ids)) == 16

    response = client.get("/api/corpus/coloop")
    assert response.json()["document"] == CorpusService.loadData("coloop.json")
    assert "g" in response.json()["goldens"]

    assert client.get("/api/corpus/nothing").status_code == 404

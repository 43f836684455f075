from fastapi.testclient import TestClient

from src.app.main import app

# ==========================================================
# HTTP API TESTS (FASTAPI)
# ==========================================================
# The endpoints are exercised in-process through TestClient, so no server
# has to be started first.

client = TestClient(app)

# ==========================================================
# TEST PAYLOAD
# ==========================================================
sample_request = {
    "op": "bracket",
    "args": {
        "x": {"n": 2, "terms": [{"alpha": [1, 0], "i": 2, "c": "1"}]},
        "y": {"n": 2, "terms": [{"alpha": [0, 1], "i": 1, "c": "1"}]},
    },
}


def test_health_check():
    response = client.get("/")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_eval_bracket():
    response = client.post("/eval", json=sample_request)
    assert response.status_code == 200
    assert response.json()["result"]["terms"] == [
        {"alpha": [0, 1], "i": 2, "c": "-1"},
        {"alpha": [1, 0], "i": 1, "c": "1"},
    ]


def test_eval_domain_error_is_reported_in_body():
    response = client.post("/eval", json={"op": "aphi_det", "args": {"phi": {"q1": 1}}})
    assert response.status_code == 200
    assert response.json()["error"]["type"] == "HypothesisError"


def test_eval_schema_violation_is_422():
    # Status Code: 422 -> pydantic validation error
    response = client.post("/eval", json={"args": {}})
    assert response.status_code == 422


def test_suite_endpoint():
    response = client.post("/suite/p0", json={"seed": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["suite"] == "p0" and body["seed"] == 3 and body["passed"] is True


def test_unknown_suite():
    response = client.post("/suite/nope")
    assert response.json()["error"]["type"] == "UsageError"

import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from chordblend.service import create_app

ALL_TRUE = {f"Q{i}": True for i in range(1, 10)}
ALL_FALSE = {f"Q{i}": False for i in range(1, 10)}

CORPUS = {
    "name": "toy",
    "tonic": 0,
    "sequences": [["0:0,4,7", "7:0,4,7,10", "0:0,4,7"]],
}


@pytest.fixture
def client():
    return TestClient(create_app())


def blend_request(**overrides):
    body = {"idiom1": "c-major-artificial", "idiom2": "fsharp-major-artificial",
            "answers": ALL_TRUE, "capacity": 100, "bridge_mass": 0.2}
    body.update(overrides)
    return body


def test_health(client):
    response = client.get("/v1/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_fresh_catalog_contains_presets(client):
    names = [e["name"] for e in client.get("/v1/idioms").json()["idioms"]]
    assert "c-major-artificial" in names
    assert "fsharp-major-artificial" in names


def test_upload_corpus_registers_idiom(client):
    response = client.post("/v1/idioms/corpus", json=CORPUS)
    assert response.status_code == 201
    assert response.json() == {"name": "toy", "tonic": 0, "chord_count": 2}
    names = [e["name"] for e in client.get("/v1/idioms").json()["idioms"]]
    assert "toy" in names


def test_upload_malformed_chord(client):
    bad = {"name": "bad", "tonic": 0,
           "sequences": [["0:0,4,7", "oops", "7:0,4,7,10"]]}
    response = client.post("/v1/idioms/corpus", json=bad)
    assert response.status_code == 400
    error = response.json()["error"]
    assert error["code"] == "parse_error"
    assert "sequence 0, item 1" in error["message"]


def test_upload_duplicate_name_conflicts(client):
    assert client.post("/v1/idioms/corpus", json=CORPUS).status_code == 201
    response = client.post("/v1/idioms/corpus", json=CORPUS)
    assert response.status_code == 409
    assert response.json()["error"]["code"] == "duplicate_idiom"


def test_upload_requires_name(client):
    response = client.post("/v1/idioms/corpus",
                           json={"tonic": 0, "sequences": [["0:0,4,7", "5:0,4,7"]]})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "schema_error"


def test_blend_presets(client):
    response = client.post("/v1/blend", json=blend_request())
    assert response.status_code == 200
    body = response.json()
    assert body["session"]["answers"] == ALL_TRUE
    assert len(body["pool"]) > 0
    assert body["pool"][0]["rate"] >= body["pool"][-1]["rate"]
    paths = body["extended"]["bridge_paths"]
    assert len(paths["i1_to_i2"]) >= 1
    assert body["extended"]["version"] == "em/1"


def test_blend_all_false_answers(client):
    response = client.post("/v1/blend", json=blend_request(answers=ALL_FALSE))
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "no_arguments"


def test_blend_unknown_idiom(client):
    response = client.post("/v1/blend", json=blend_request(idiom1="missing"))
    assert response.status_code == 404
    assert response.json()["error"]["code"] == "unknown_idiom"


def test_blend_unknown_answer_key(client):
    response = client.post("/v1/blend",
                           json=blend_request(answers={"Q1": True, "Q10": True}))
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "schema_error"


def test_blend_invalid_bridge_mass(client):
    response = client.post("/v1/blend", json=blend_request(bridge_mass=1.5))
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "invalid_bridge_mass"


def test_blend_validation_error_payload(client):
    response = client.post("/v1/blend", json={"idiom1": "c-major-artificial"})
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "validation_error"


def test_blend_is_idempotent(client):
    first = client.post("/v1/blend", json=blend_request())
    second = client.post("/v1/blend", json=blend_request())
    assert first.content == second.content


def test_sample_from_idiom(client):
    response = client.post("/v1/sample", json={
        "idiom": "c-major-artificial", "start": "0:0,4,7", "length": 8, "seed": 42})
    assert response.status_code == 200
    chords = response.json()["chords"]
    assert len(chords) == 8
    assert chords[0] == "0:0,4,7"
    again = client.post("/v1/sample", json={
        "idiom": "c-major-artificial", "start": "0:0,4,7", "length": 8, "seed": 42})
    assert again.json()["chords"] == chords


def test_sample_from_extended(client):
    blend = client.post("/v1/blend", json=blend_request()).json()
    response = client.post("/v1/sample", json={
        "extended": blend["extended"], "start": "0:0,4,7", "length": 12, "seed": 3})
    assert response.status_code == 200
    assert len(response.json()["chords"]) == 12


def test_sample_requires_exactly_one_source(client):
    response = client.post("/v1/sample", json={"start": "0:0,4,7"})
    assert response.status_code == 400
    blend = client.post("/v1/blend", json=blend_request()).json()
    response = client.post("/v1/sample", json={
        "idiom": "c-major-artificial", "extended": blend["extended"],
        "start": "0:0,4,7"})
    assert response.status_code == 400


def test_sample_unknown_start_chord(client):
    response = client.post("/v1/sample", json={
        "idiom": "c-major-artificial", "start": "3:0,4,7", "length": 4, "seed": 0})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "unknown_index"


def test_concurrent_blends_are_isolated(client):
    requests = [blend_request(answers={**ALL_FALSE, f"Q{i}": True})
                for i in range(1, 10)] * 2
    serial = [client.post("/v1/blend", json=r).content for r in requests]
    with ThreadPoolExecutor(max_workers=6) as pool:
        parallel = list(pool.map(
            lambda r: client.post("/v1/blend", json=r).content, requests))
    assert parallel == serial


def test_responses_are_pure_functions_of_registry(client):
    # uploading an unrelated idiom must not change an existing blend result
    before = client.post("/v1/blend", json=blend_request()).content
    client.post("/v1/idioms/corpus", json=CORPUS)
    after = client.post("/v1/blend", json=blend_request()).content
    assert before == after

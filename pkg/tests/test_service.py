import pytest
from fastapi.testclient import TestClient

from fuzzygdm.service import create_app

FEATURES = [
    {"id": "feat1", "kind": "continuous", "direction": "below-mean-favorable"},
    {"id": "feat2", "kind": "binary"},
]
ALTERNATIVES = [
    {"id": "a", "label": "A", "features": {"feat1": 10, "feat2": 1}},
    {"id": "b", "label": "B", "features": {"feat1": 20, "feat2": 0}},
]


@pytest.fixture()
def client(tmp_path, engines):
    app = create_app(tmp_path, engines)
    with TestClient(app) as client:
        yield client


def make_session(client, **overrides):
    body = {"features": FEATURES, "alternatives": ALTERNATIVES}
    body.update(overrides)
    response = client.post("/sessions", json=body)
    assert response.status_code == 201, response.text
    return response.json()["id"]


def to_phase(client, sid, *targets):
    for target in targets:
        response = client.post(f"/sessions/{sid}/phase", json={"target": target})
        assert response.status_code == 200, response.text


class TestSessionLifecycle:
    def test_create_returns_setup_phase(self, client):
        response = client.post("/sessions", json={
            "features": FEATURES, "alternatives": ALTERNATIVES})
        assert response.status_code == 201
        assert response.json()["phase"] == "setup"

    def test_create_with_one_alternative_422(self, client):
        response = client.post("/sessions", json={
            "features": FEATURES, "alternatives": ALTERNATIVES[:1]})
        assert response.status_code == 422

    def test_create_with_duplicate_feature_409(self, client):
        response = client.post("/sessions", json={
            "features": FEATURES + [FEATURES[0]],
            "alternatives": ALTERNATIVES})
        assert response.status_code == 409

    def test_unknown_session_404(self, client):
        assert client.get("/sessions/nope").status_code == 404
        assert client.post("/sessions/nope/phase",
                           json={"target": "voting"}).status_code == 404

    def test_illegal_transition_409(self, client):
        sid = make_session(client)
        response = client.post(f"/sessions/{sid}/phase",
                               json={"target": "closed"})
        assert response.status_code == 409

    def test_malformed_body_422(self, client):
        sid = make_session(client)
        response = client.post(f"/sessions/{sid}/phase",
                               json={"target": "sideways"})
        assert response.status_code == 422


class TestIntakeEndpoints:
    def test_participant_flow(self, client):
        sid = make_session(client)
        assert client.post(f"/sessions/{sid}/participants",
                           json={"id": "p1"}).status_code == 201
        assert client.post(f"/sessions/{sid}/participants",
                           json={"id": "p1"}).status_code == 409

    def test_assessment_codes(self, client):
        sid = make_session(client)
        client.post(f"/sessions/{sid}/participants", json={"id": "p1"})
        body = {"participant": "p1", "values": {"feat1": 1, "feat2": 0}}
        assert client.post(f"/sessions/{sid}/assessments",
                           json=body).status_code == 409  # wrong phase
        to_phase(client, sid, "voting")
        assert client.post(f"/sessions/{sid}/assessments",
                           json=body).status_code == 201
        assert client.post(f"/sessions/{sid}/assessments",
                           json=body).status_code == 409  # duplicate
        bad = {"participant": "p1", "values": {"feat1": 2, "feat2": 0}}
        assert client.post(f"/sessions/{sid}/assessments",
                           json=bad).status_code in (409, 422)

    def test_message_codes_and_badge(self, client):
        sid = make_session(client)
        client.post(f"/sessions/{sid}/participants", json={"id": "p1"})
        to_phase(client, sid, "voting")
        client.post(f"/sessions/{sid}/assessments",
                    json={"participant": "p1",
                          "values": {"feat1": 1, "feat2": 0}})
        message = {"participant": "p1", "alternative": "a",
                   "text": "lovely place"}
        assert client.post(f"/sessions/{sid}/messages",
                           json=message).status_code == 409
        to_phase(client, sid, "discussion")
        response = client.post(f"/sessions/{sid}/messages", json=message)
        assert response.status_code == 201
        assert response.json()["affect"]["sentiment"] > 0
        assert client.post(f"/sessions/{sid}/messages",
                           json={**message, "text": ""}).status_code == 422
        assert client.post(f"/sessions/{sid}/messages",
                           json={**message, "alternative": "zz"}).status_code == 404

    def test_feedback_codes(self, client):
        sid = make_session(client)
        client.post(f"/sessions/{sid}/participants", json={"id": "p1"})
        to_phase(client, sid, "voting")
        client.post(f"/sessions/{sid}/assessments",
                    json={"participant": "p1",
                          "values": {"feat1": 1, "feat2": 0}})
        to_phase(client, sid, "discussion", "ranking")
        client.post(f"/sessions/{sid}/ranking")
        to_phase(client, sid, "feedback")
        good = {"participant": "p1", "agreement": 9, "confidence": 9}
        response = client.post(f"/sessions/{sid}/feedback", json=good)
        assert response.status_code == 201
        assert response.json()["score"] == pytest.approx(8.14, abs=0.25)
        assert client.post(f"/sessions/{sid}/feedback",
                           json=good).status_code == 409
        assert client.post(
            f"/sessions/{sid}/feedback",
            json={"participant": "p1", "agreement": 11,
                  "confidence": 5}).status_code == 422

    def test_ranking_requires_full_panel(self, client):
        sid = make_session(client)
        client.post(f"/sessions/{sid}/participants", json={"id": "p1"})
        client.post(f"/sessions/{sid}/participants", json={"id": "p2"})
        to_phase(client, sid, "voting")
        client.post(f"/sessions/{sid}/assessments",
                    json={"participant": "p1",
                          "values": {"feat1": 1, "feat2": 0}})
        to_phase(client, sid, "discussion", "ranking")
        response = client.post(f"/sessions/{sid}/ranking")
        assert response.status_code == 422
        assert "p2" in response.json()["detail"]

    def test_consensus_requires_two_entries(self, client):
        sid = make_session(client)
        client.post(f"/sessions/{sid}/participants", json={"id": "p1"})
        to_phase(client, sid, "voting")
        client.post(f"/sessions/{sid}/assessments",
                    json={"participant": "p1",
                          "values": {"feat1": 1, "feat2": 0}})
        to_phase(client, sid, "discussion", "ranking")
        client.post(f"/sessions/{sid}/ranking")
        to_phase(client, sid, "feedback")
        client.post(f"/sessions/{sid}/feedback",
                    json={"participant": "p1", "agreement": 9,
                          "confidence": 9})
        assert client.get(f"/sessions/{sid}/consensus").status_code == 422


class TestPersistenceAcrossRestart:
    def test_session_survives_app_recreation(self, tmp_path, engines):
        with TestClient(create_app(tmp_path, engines)) as client:
            sid = make_session(client)
            client.post(f"/sessions/{sid}/participants", json={"id": "p1"})
        with TestClient(create_app(tmp_path, engines)) as client:
            view = client.get(f"/sessions/{sid}")
            assert view.status_code == 200
            assert view.json()["participants"] == [
                {"id": "p1", "name": ""}]

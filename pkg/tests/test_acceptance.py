"""Acceptance suite: one test per shipping criterion.

Every test prints a PASS line with its measured runtime so the suite
doubles as a checklist (`pytest tests/test_acceptance.py -v -s`). The
suite exercises only the Python package and its HTTP surface; the
browser client is covered by its own test suite under frontend/.
"""

import json
import random
import time

import numpy as np
import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from fuzzygdm.affect import SentimentLexicon, compound_sentiment
from fuzzygdm.cli import main as cli_main
from fuzzygdm.consensus import classify_consensus, compute_iqr, feedback_score
from fuzzygdm.fuzzy import TrapezoidMF, membership
from fuzzygdm.pipeline import rank, total_preference
from fuzzygdm.preferences import (Alternative, Assessment, Direction,
                                  FeatureSpec, aggregate, raw_preference)
from fuzzygdm.service import create_app
from fuzzygdm.session import from_document
from tests.conftest import FIXTURE_SESSION, load_oracle_corpus

GOLDEN_SENTIMENTS = {
    "alter1": [0.42, 0.00, 0.00, 0.70, -0.07],
    "alter2": [0.81, 0.95, 0.00, 0.80, 0.78],
    "alter3": [0.06, 0.36, 0.34, 0.77, 0.51],
    "alter4": [-0.30, 0.67, 0.66, 0.94, 0.71],
}
GOLDEN_SENTIMENT_AVERAGES = {"alter1": 0.21, "alter2": 0.67,
                            "alter3": 0.41, "alter4": 0.54}
GOLDEN_TOTALS = {"alter1": (54, 0.21, 5.0), "alter2": (62, 0.67, 5.99),
                "alter3": (54, 0.41, 5.0), "alter4": (62, 0.54, 5.36)}
GOLDEN_FEEDBACK = [(9, 9, 8.14), (10, 10, 8.14), (7, 8, 7.95), (9, 9, 8.14),
                  (7, 9, 7.95)]


class Budget:
    def __init__(self, name: str, seconds: float):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"{self.name}: {elapsed:.2f}s exceeds {self.seconds}s budget")
            print(f"PASS: {self.name} ({elapsed:.2f}s)")
        else:
            print(f"FAIL: {self.name}")
        return False


def restaurant_session():
    with open(FIXTURE_SESSION, encoding="utf-8") as fh:
        return from_document(json.load(fh))


def test_golden_voting_pipeline():
    with Budget("golden voting pipeline (exact)", 1.0):
        session = restaurant_session()
        matrix = aggregate(session.features, session.alternatives,
                           session.assessments)
        golden_raw = {
            "alter1": [1, 1, 1, -1, 0], "alter2": [3, 1, 2, 0, 0],
            "alter3": [0, 0, 1, 1, 0], "alter4": [1, 1, 2, 0, 2]}
        golden_avg = {"alter1": 54, "alter2": 62, "alter3": 54, "alter4": 62}
        participants = [a.participant for a in session.assessments]
        for alt, raws in golden_raw.items():
            for participant, expected in zip(participants, raws):
                assert matrix.raw[(participant, alt)] == expected
                assert matrix.scaled[(participant, alt)] == 50 + 10 * expected
            assert matrix.collective_voting[alt] == golden_avg[alt]


def test_sentiment_aggregation():
    with Budget("sentiment aggregation (±0.005)", 1.0):
        session = restaurant_session()
        participants = [a.participant for a in session.assessments]
        sentiments = {
            (p, alt): value
            for alt, values in GOLDEN_SENTIMENTS.items()
            for p, value in zip(participants, values)}
        matrix = aggregate(session.features, session.alternatives,
                           session.assessments, sentiments=sentiments)
        for alt, expected in GOLDEN_SENTIMENT_AVERAGES.items():
            assert matrix.collective_sentiment[alt] == pytest.approx(
                expected, abs=0.005)


def test_sentiment_scorer_oracle():
    with Budget("sentiment scorer vs oracle corpus (MAE ≤ 0.05)", 5.0):
        lexicon = SentimentLexicon.load()
        rows = load_oracle_corpus()
        assert len(rows) == 50
        errors = [abs(expected - compound_sentiment(lexicon, sentence))
                  for expected, sentence in rows]
        mae = sum(errors) / len(errors)
        assert mae <= 0.05, f"MAE {mae:.4f}"


def test_preference_fis_targets_and_monotonicity(engines):
    with Budget("preference FIS targets (±0.5) + 101x201 monotonicity", 30.0):
        fis = engines.preference_fis
        totals = {}
        for alt, (voting, sentiment, expected) in GOLDEN_TOTALS.items():
            value = total_preference(fis, voting, sentiment)
            assert value == pytest.approx(expected, abs=0.5), (alt, value)
            totals[alt] = value
        ranking = rank(totals)
        ordered = [alt for alt, _ in ranking.ordered]
        assert ordered[0] == "alter2"
        assert ordered[1] == "alter4"
        assert set(ordered[2:]) == {"alter1", "alter3"}

        votings = np.linspace(0, 100, 101)
        sentiments = np.linspace(-1, 1, 201)
        grid = np.empty((101, 201))
        for i, v in enumerate(votings):
            for j, s in enumerate(sentiments):
                grid[i, j] = total_preference(fis, float(v), float(s))
        assert (grid >= 0).all() and (grid <= 10).all()
        assert (np.diff(grid, axis=0) >= -1e-9).all(), "not monotone in voting"
        assert (np.diff(grid, axis=1) >= -1e-9).all(), "not monotone in sentiment"


def test_feedback_fis(engines):
    with Budget("feedback FIS table (±0.25) + plateaus (1e-9) + (7,4) point (±0.3)", 5.0):
        fis = engines.feedback_fis
        for al, cl, expected in GOLDEN_FEEDBACK:
            assert feedback_score(fis, al, cl) == pytest.approx(expected, abs=0.25)
        assert abs(feedback_score(fis, 9, 9)
                   - feedback_score(fis, 10, 10)) <= 1e-9
        assert abs(feedback_score(fis, 7, 8)
                   - feedback_score(fis, 7, 9)) <= 1e-9
        assert feedback_score(fis, 7, 4) == pytest.approx(6.4, abs=0.3)


def test_consensus_iqr(engines):
    with Budget("consensus IQR 0.19 ± 0.01 -> High", 1.0):
        computed = [feedback_score(engines.feedback_fis, al, cl)
                    for al, cl, _ in GOLDEN_FEEDBACK]
        _, _, iqr = compute_iqr(computed)
        assert iqr == pytest.approx(0.19, abs=0.01)
        assert classify_consensus(iqr) == "High"

        q1, q3, rounded_iqr = compute_iqr([8.14, 8.14, 7.95, 8.14, 7.95])
        assert q1 == 7.95
        assert q3 == 8.14
        assert rounded_iqr == pytest.approx(0.19, abs=1e-12)
        assert classify_consensus(rounded_iqr) == "High"


def test_property_suites(engines, tmp_path):
    with Budget("property suites (MF x1000, Eq.1 x500, IQR x500, fuzz x1000)", 60.0):
        _mf_properties(random.Random(101), 1000)
        _bilinearity(random.Random(202), 500)
        _iqr_equivariance(random.Random(303), 500)
        _phase_machine_fuzz(random.Random(404), 1000, engines, tmp_path)


def _mf_properties(rng, count):
    for _ in range(count):
        a, b, c, d = sorted(rng.uniform(-20, 20) for _ in range(4))
        mf = TrapezoidMF(a, b, c, d)
        # Bounds, plateau, and zero-outside.
        for x in (a - 1, a, (a + b) / 2, b, (b + c) / 2, c, (c + d) / 2, d, d + 1):
            mu = membership(mf, x)
            assert 0.0 <= mu <= 1.0
        assert membership(mf, (b + c) / 2) == 1.0
        assert membership(mf, a - 1e-9) == 0.0
        assert membership(mf, d + 1e-9) == 0.0
        # Piecewise linearity along both edges.
        t = rng.random()
        if b > a:
            assert membership(mf, a + t * (b - a)) == pytest.approx(t, abs=1e-9)
        if d > c:
            assert membership(mf, c + t * (d - c)) == pytest.approx(1 - t, abs=1e-9)


def _bilinearity(rng, count):
    for _ in range(count):
        p = rng.randint(1, 10)
        f1 = [rng.randint(0, 1) for _ in range(p)]
        f2 = [rng.randint(0, 1) for _ in range(p)]
        z1 = [rng.choice((-1, 0, 1)) for _ in range(p)]
        z2 = [rng.choice((-1, 0, 1)) for _ in range(p)]
        assert (sum((x + y) * z for x, y, z in zip(f1, f2, z1))
                == raw_preference(f1, z1) + raw_preference(f2, z1))
        assert (sum(f * (x + y) for f, x, y in zip(f1, z1, z2))
                == raw_preference(f1, z1) + raw_preference(f1, z2))


def _iqr_equivariance(rng, count):
    for _ in range(count):
        scores = [rng.uniform(-50, 50) for _ in range(rng.randint(2, 40))]
        base = compute_iqr(scores)[2]
        shift = rng.uniform(-100, 100)
        scale = rng.uniform(1e-3, 50)
        shifted = compute_iqr([s + shift for s in scores])[2]
        scaled = compute_iqr([s * scale for s in scores])[2]
        assert shifted == pytest.approx(base, abs=1e-9 * max(1, abs(base)))
        assert scaled == pytest.approx(scale * base, rel=1e-9, abs=1e-9)


def _phase_machine_fuzz(rng, request_count, engines, tmp_path):
    """Random request interleavings must preserve referential integrity
    and never produce a 5xx."""
    app = create_app(tmp_path / "fuzz-data", engines)
    with TestClient(app, raise_server_exceptions=False) as client:
        created = client.post("/sessions", json={
            "id": "fuzz",
            "features": [
                {"id": "f1", "kind": "continuous",
                 "direction": "below-mean-favorable"},
                {"id": "f2", "kind": "binary"}],
            "alternatives": [
                {"id": "a", "label": "", "features": {"f1": 1, "f2": 1}},
                {"id": "b", "label": "", "features": {"f1": 2, "f2": 0}}],
        })
        assert created.status_code == 201
        people = [f"p{i}" for i in range(6)]
        phases = ["setup", "voting", "discussion", "ranking", "feedback",
                  "closed"]

        def random_request():
            kind = rng.randrange(8)
            if kind == 0:
                return client.post("/sessions/fuzz/phase",
                                   json={"target": rng.choice(phases)})
            if kind == 1:
                return client.post("/sessions/fuzz/participants",
                                   json={"id": rng.choice(people)})
            if kind == 2:
                values = {"f1": rng.choice((-1, 0, 1, 2)),
                          "f2": rng.choice((-1, 0, 1))}
                return client.post("/sessions/fuzz/assessments",
                                   json={"participant": rng.choice(people + ["ghost"]),
                                         "values": values})
            if kind == 3:
                return client.post("/sessions/fuzz/messages", json={
                    "participant": rng.choice(people + ["ghost"]),
                    "alternative": rng.choice(["a", "b", "zz"]),
                    "text": rng.choice(["", "nice spot", "bad idea",
                                        "love it", "terrible noise"])})
            if kind == 4:
                return client.post("/sessions/fuzz/ranking")
            if kind == 5:
                return client.post("/sessions/fuzz/feedback", json={
                    "participant": rng.choice(people + ["ghost"]),
                    "agreement": rng.choice((0, 5, 9, 10)),
                    "confidence": rng.choice((0, 5, 9, 10))})
            if kind == 6:
                return client.get("/sessions/fuzz/consensus")
            return client.get("/sessions/fuzz")

        for _ in range(request_count):
            response = random_request()
            assert response.status_code in (200, 201, 404, 409, 422), (
                response.status_code, response.text)

        exported = client.get("/sessions/fuzz/export")
        assert exported.status_code == 200
        # from_document re-runs the full referential integrity check.
        final = from_document(exported.json())
        participants = final.participant_ids()
        assert {a.participant for a in final.assessments} <= participants
        assert {m.participant for m in final.messages} <= participants
        assert {f.participant for f in final.feedback} <= participants
        assert {m.alternative for m in final.messages} <= final.alternative_ids()


def test_batch_online_equivalence(engines, tmp_path):
    with Budget("batch/online equivalence (byte-identical report)", 10.0):
        with open(FIXTURE_SESSION, encoding="utf-8") as fh:
            fixture = json.load(fh)

        app = create_app(tmp_path / "api-data", engines)
        with TestClient(app) as client:
            created = client.post("/sessions", json={
                "id": fixture["id"],
                "features": fixture["features"],
                "alternatives": fixture["alternatives"],
                "affect": fixture["affect"],
                "consensus_thresholds": fixture["consensus_thresholds"],
            })
            assert created.status_code == 201
            sid = fixture["id"]
            for p in fixture["participants"]:
                assert client.post(f"/sessions/{sid}/participants",
                                   json=p).status_code == 201
            assert client.post(f"/sessions/{sid}/phase",
                               json={"target": "voting"}).status_code == 200
            for a in fixture["assessments"]:
                assert client.post(f"/sessions/{sid}/assessments",
                                   json=a).status_code == 201
            assert client.post(f"/sessions/{sid}/phase",
                               json={"target": "discussion"}).status_code == 200
            for m in fixture["messages"]:
                assert client.post(f"/sessions/{sid}/messages", json={
                    "participant": m["participant"],
                    "alternative": m["alternative"],
                    "text": m["text"]}).status_code == 201
            assert client.post(f"/sessions/{sid}/phase",
                               json={"target": "ranking"}).status_code == 200
            ranked = client.post(f"/sessions/{sid}/ranking")
            assert ranked.status_code == 200
            assert ranked.json()["top_ranked"] == "alter2"
            assert client.post(f"/sessions/{sid}/phase",
                               json={"target": "feedback"}).status_code == 200
            for f in fixture["feedback"]:
                assert client.post(f"/sessions/{sid}/feedback",
                                   json=f).status_code == 201
            consensus_view = client.get(f"/sessions/{sid}/consensus")
            assert consensus_view.status_code == 200
            assert consensus_view.json()["level"] == "High"
            assert client.post(f"/sessions/{sid}/phase",
                               json={"target": "closed"}).status_code == 200
            exported = client.get(f"/sessions/{sid}/export").json()

        api_session_path = tmp_path / "api-export.session"
        api_session_path.write_text(json.dumps(exported), encoding="utf-8")

        runner = CliRunner()
        out_api = tmp_path / "report-api.json"
        out_fixture = tmp_path / "report-fixture.json"
        assert runner.invoke(cli_main, [
            "run", "--session", str(api_session_path),
            "--out", str(out_api)]).exit_code == 0
        assert runner.invoke(cli_main, [
            "run", "--session", str(FIXTURE_SESSION),
            "--out", str(out_fixture)]).exit_code == 0
        assert out_api.read_bytes() == out_fixture.read_bytes()

        # The service's persisted numbers equal the batch re-derivation.
        report = json.loads(out_api.read_text())
        persisted_ranking = exported["ranking"]["ordered"]
        assert persisted_ranking == report["ranking"]["ordered"]
        persisted_scores = [f["score"] for f in exported["feedback"]]
        recomputed_scores = [f["score"] for f in report["feedback_scores"]]
        assert persisted_scores == recomputed_scores
        assert exported["consensus"]["iqr"] == report["consensus"]["iqr"]

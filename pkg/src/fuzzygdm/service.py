"""HTTP service exposing live decision sessions.

Thin FastAPI layer over the session module: pydantic models validate
request shapes (422 on violation), domain rules map to 409 (phase
violations, duplicates) and 404 (unknown ids). All computation lives in
the core package; handlers only orchestrate load-mutate-save cycles.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import session as sessions
from .consensus import ConsensusError, ConsensusThresholds
from .fuzzy import FuzzyError
from .preferences import Alternative, Direction, FeatureSpec, PreferenceError
from .session import (AffectConfig, DocumentError, DuplicateError, Engines,
                      Phase, PhaseError, SessionError, UnknownIdError)
from .store import SessionStore


class FeatureModel(BaseModel):
    id: str
    kind: Literal["continuous", "binary"]
    direction: Literal["above-mean-favorable", "below-mean-favorable"] | None = None


class AlternativeModel(BaseModel):
    id: str
    label: str = ""
    features: dict[str, float]


class AffectModel(BaseModel):
    alpha: float = 0.6
    beta: float = 0.4


class ThresholdsModel(BaseModel):
    high_max: float = 2.0
    medium_max: float = 4.0


class CreateSessionRequest(BaseModel):
    features: list[FeatureModel]
    alternatives: list[AlternativeModel]
    affect: AffectModel | None = None
    consensus_thresholds: ThresholdsModel = ThresholdsModel()
    id: str | None = None


class CreateSessionResponse(BaseModel):
    id: str
    phase: str


class PhaseRequest(BaseModel):
    target: Literal["setup", "voting", "discussion", "ranking", "feedback", "closed"]


class ParticipantRequest(BaseModel):
    id: str
    name: str = ""
    weight: float | None = None


class AssessmentRequest(BaseModel):
    participant: str
    values: dict[str, int]


class MessageRequest(BaseModel):
    participant: str
    alternative: str
    text: str


class FeedbackRequest(BaseModel):
    participant: str
    agreement: float = Field(ge=0, le=10)
    confidence: float = Field(ge=0, le=10)


class FeedbackResponse(BaseModel):
    participant: str
    agreement: float
    confidence: float
    score: float


class RankingEntryModel(BaseModel):
    alternative: str
    total_preference: float


class RankingResponse(BaseModel):
    ordered: list[RankingEntryModel]
    top_ranked: str


class ConsensusResponse(BaseModel):
    scores: list[float]
    q1: float
    q3: float
    iqr: float
    level: str
    notes: list[str]


def create_app(data_dir, engines: Engines | None = None,
               default_affect: AffectConfig | None = None) -> FastAPI:
    store = SessionStore(data_dir)
    engines = engines or Engines.load()
    default_affect = default_affect or AffectConfig()
    app = FastAPI(title="fuzzygdm", version="0.1.0")
    app.state.store = store
    app.state.engines = engines
    # The browser client is served from its own origin and only polls.
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(SessionError)
    async def _session_error(request: Request, exc: SessionError):
        if isinstance(exc, (PhaseError, DuplicateError)):
            status = 409
        elif isinstance(exc, UnknownIdError):
            status = 404
        else:
            status = 422
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.exception_handler(PreferenceError)
    @app.exception_handler(ConsensusError)
    @app.exception_handler(FuzzyError)
    async def _domain_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.post("/sessions", status_code=201, response_model=CreateSessionResponse)
    def create_session(body: CreateSessionRequest):
        affect = (AffectConfig(body.affect.alpha, body.affect.beta)
                  if body.affect is not None else default_affect)
        session = sessions.create_session(
            features=[FeatureSpec(f.id, f.kind,
                                  Direction(f.direction) if f.direction else None)
                      for f in body.features],
            alternatives=[Alternative(a.id, a.label, dict(a.features))
                          for a in body.alternatives],
            affect_config=affect,
            thresholds=ConsensusThresholds(body.consensus_thresholds.high_max,
                                           body.consensus_thresholds.medium_max),
            session_id=body.id,
        )
        store.create(session)
        return CreateSessionResponse(id=session.id, phase=session.phase.value)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.load(session_id)
        return _session_view(session, engines)

    @app.post("/sessions/{session_id}/phase")
    def set_phase(session_id: str, body: PhaseRequest):
        with store.mutate(session_id) as session:
            sessions.set_phase(session, Phase(body.target))
            return {"id": session.id, "phase": session.phase.value}

    @app.post("/sessions/{session_id}/participants", status_code=201)
    def add_participant(session_id: str, body: ParticipantRequest):
        with store.mutate(session_id) as session:
            p = sessions.add_participant(session, body.id, body.name, body.weight)
            return {"id": p.id, "name": p.name, "weight": p.weight}

    @app.post("/sessions/{session_id}/assessments", status_code=201)
    def submit_assessment(session_id: str, body: AssessmentRequest):
        with store.mutate(session_id) as session:
            a = sessions.submit_assessment(session, body.participant, body.values)
            return {"participant": a.participant, "values": a.values}

    @app.post("/sessions/{session_id}/messages", status_code=201)
    def post_message(session_id: str, body: MessageRequest):
        with store.mutate(session_id) as session:
            m = sessions.post_message(session, body.participant, body.alternative,
                                      body.text)
            score = sessions.message_affect(session, engines, m)
            return {
                "participant": m.participant, "alternative": m.alternative,
                "text": m.text, "timestamp": m.timestamp,
                "affect": {"sentiment": score.sentiment, "emotion": score.emotion,
                           "fused": score.fused},
            }

    @app.post("/sessions/{session_id}/ranking", response_model=RankingResponse)
    def compute_ranking(session_id: str):
        with store.mutate(session_id) as session:
            ranking = sessions.compute_ranking(session, engines)
            return RankingResponse(
                ordered=[RankingEntryModel(alternative=alt, total_preference=t)
                         for alt, t in ranking.ordered],
                top_ranked=ranking.top_ranked)

    @app.post("/sessions/{session_id}/feedback", status_code=201,
              response_model=FeedbackResponse)
    def submit_feedback(session_id: str, body: FeedbackRequest):
        with store.mutate(session_id) as session:
            entry = sessions.submit_feedback(session, engines, body.participant,
                                             body.agreement, body.confidence)
            return FeedbackResponse(
                participant=entry.participant, agreement=entry.agreement,
                confidence=entry.confidence, score=entry.score)

    @app.get("/sessions/{session_id}/consensus", response_model=ConsensusResponse)
    def consensus_report(session_id: str):
        with store.mutate(session_id) as session:
            report = sessions.build_consensus(session, engines)
            return ConsensusResponse(
                scores=list(report.scores), q1=report.q1, q3=report.q3,
                iqr=report.iqr, level=report.level, notes=list(report.notes))

    @app.get("/sessions/{session_id}/export")
    def export_session(session_id: str):
        session = store.load(session_id)
        return sessions.to_document(session)

    return app


def _session_view(session: sessions.Session, engines: Engines) -> dict:
    """Read model for clients: full document plus per-message affect badges."""
    doc = sessions.to_document(session)
    for row, message in zip(doc["messages"], session.messages):
        score = sessions.message_affect(session, engines, message)
        row["affect"] = {"sentiment": score.sentiment, "emotion": score.emotion,
                         "fused": score.fused}
    doc["voted"] = sorted({a.participant for a in session.assessments})
    doc["feedback_given"] = sorted({f.participant for f in session.feedback})
    return doc

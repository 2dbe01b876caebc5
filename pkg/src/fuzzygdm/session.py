"""Live decision sessions: phase machine, intake rules, computations.

A session walks Setup -> Voting -> Discussion -> Ranking -> Feedback ->
Closed, with a single backward edge Feedback -> Discussion ("reopen")
that clears ranking, feedback, and the consensus report. All intake is
validated against the current phase; computations are pure functions of
the persisted intake data, so recomputing a session always reproduces
the same ranking and report.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum

from . import affect, consensus, pipeline, preferences
from .consensus import ConsensusReport, ConsensusThresholds
from .pipeline import Ranking
from .preferences import Alternative, Assessment, Direction, FeatureSpec, PreferenceMatrix

SCHEMA_VERSION = 1
MAX_MESSAGE_LENGTH = 4096


class SessionError(ValueError):
    """Base for intake violations; subclasses map to HTTP status codes."""


class PhaseError(SessionError):
    pass


class DuplicateError(SessionError):
    pass


class UnknownIdError(SessionError):
    pass


class DocumentError(SessionError):
    """Malformed session document; carries the offending field path."""

    def __init__(self, message: str, field_path: str | None = None):
        self.field_path = field_path
        super().__init__(message if field_path is None
                         else f"{field_path}: {message}")


class Phase(str, Enum):
    SETUP = "setup"
    VOTING = "voting"
    DISCUSSION = "discussion"
    RANKING = "ranking"
    FEEDBACK = "feedback"
    CLOSED = "closed"


TRANSITIONS: dict[Phase, tuple[Phase, ...]] = {
    Phase.SETUP: (Phase.VOTING,),
    Phase.VOTING: (Phase.DISCUSSION,),
    Phase.DISCUSSION: (Phase.RANKING,),
    Phase.RANKING: (Phase.FEEDBACK,),
    Phase.FEEDBACK: (Phase.CLOSED, Phase.DISCUSSION),
    Phase.CLOSED: (),
}


@dataclass
class Participant:
    id: str
    name: str = ""
    weight: float | None = None


@dataclass
class ChatMessage:
    participant: str
    alternative: str
    text: str
    timestamp: str


@dataclass
class FeedbackEntry:
    participant: str
    agreement: float
    confidence: float
    score: float | None = None


@dataclass
class AffectConfig:
    alpha: float = 0.6
    beta: float = 0.4

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0 or abs(self.alpha + self.beta - 1.0) > 1e-9:
            raise SessionError(
                f"invalid affect weights: alpha={self.alpha}, beta={self.beta}")

    @classmethod
    def sentiment_only(cls) -> "AffectConfig":
        return cls(alpha=1.0, beta=0.0)


@dataclass
class Session:
    id: str
    phase: Phase
    created_at: str
    features: list[FeatureSpec]
    alternatives: list[Alternative]
    participants: list[Participant] = field(default_factory=list)
    assessments: list[Assessment] = field(default_factory=list)
    messages: list[ChatMessage] = field(default_factory=list)
    feedback: list[FeedbackEntry] = field(default_factory=list)
    affect_config: AffectConfig = field(default_factory=AffectConfig)
    consensus_thresholds: ConsensusThresholds = field(default_factory=ConsensusThresholds)
    preference_matrix: PreferenceMatrix | None = None
    ranking: Ranking | None = None
    consensus_report: ConsensusReport | None = None

    def participant_ids(self) -> set[str]:
        return {p.id for p in self.participants}

    def alternative_ids(self) -> set[str]:
        return {a.id for a in self.alternatives}


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def create_session(features: list[FeatureSpec],
                   alternatives: list[Alternative],
                   affect_config: AffectConfig | None = None,
                   thresholds: ConsensusThresholds | None = None,
                   session_id: str | None = None) -> Session:
    if len(alternatives) < 2:
        raise SessionError("need at least 2 alternatives")
    if not features:
        raise SessionError("need at least 1 feature")
    feature_ids = [f.id for f in features]
    if len(set(feature_ids)) != len(feature_ids):
        raise DuplicateError("duplicate feature ids")
    alt_ids = [a.id for a in alternatives]
    if len(set(alt_ids)) != len(alt_ids):
        raise DuplicateError("duplicate alternative ids")
    # Surfaces missing values and non-binary binaries before anything persists.
    preferences.normalize_features(features, alternatives)
    return Session(
        id=session_id or uuid.uuid4().hex[:12],
        phase=Phase.SETUP,
        created_at=_now(),
        features=list(features),
        alternatives=list(alternatives),
        affect_config=affect_config or AffectConfig(),
        consensus_thresholds=thresholds or ConsensusThresholds(),
    )


def set_phase(session: Session, target: Phase) -> None:
    if target not in TRANSITIONS[session.phase]:
        raise PhaseError(
            f"phase violation: cannot move {session.phase.value} -> {target.value}"
        )
    if session.phase is Phase.FEEDBACK and target is Phase.DISCUSSION:
        # Reopening invalidates everything derived from the closed round.
        session.preference_matrix = None
        session.ranking = None
        session.consensus_report = None
        session.feedback.clear()
    session.phase = target


def add_participant(session: Session, participant_id: str, name: str = "",
                    weight: float | None = None) -> Participant:
    if session.phase not in (Phase.SETUP, Phase.VOTING):
        raise PhaseError("phase violation: registration closed after voting")
    if participant_id in session.participant_ids():
        raise DuplicateError(f"participant {participant_id!r} already registered")
    if weight is not None and weight <= 0:
        raise SessionError("participant weight must be positive")
    participant = Participant(participant_id, name, weight)
    session.participants.append(participant)
    return participant


def submit_assessment(session: Session, participant_id: str,
                      values: dict[str, int]) -> Assessment:
    if session.phase is not Phase.VOTING:
        raise PhaseError("phase violation: assessments accepted only during voting")
    if participant_id not in session.participant_ids():
        raise UnknownIdError(f"unknown participant {participant_id!r}")
    if any(a.participant == participant_id for a in session.assessments):
        raise DuplicateError(f"participant {participant_id!r} already voted")
    feature_ids = [f.id for f in session.features]
    if set(values) != set(feature_ids):
        raise SessionError("invalid assessment: must cover exactly the feature set")
    for fid, z in values.items():
        if z not in (-1, 0, 1):
            raise SessionError(f"invalid assessment: {fid}={z!r} not in {{-1, 0, 1}}")
    assessment = Assessment(participant_id, dict(values))
    session.assessments.append(assessment)
    return assessment


def post_message(session: Session, participant_id: str, alternative_id: str,
                 text: str) -> ChatMessage:
    if session.phase is not Phase.DISCUSSION:
        raise PhaseError("phase violation: chat open only during discussion")
    if participant_id not in session.participant_ids():
        raise UnknownIdError(f"unknown participant {participant_id!r}")
    if alternative_id not in session.alternative_ids():
        raise UnknownIdError(f"unknown alternative {alternative_id!r}")
    if not text.strip():
        raise SessionError("empty message")
    if len(text) > MAX_MESSAGE_LENGTH:
        raise SessionError(f"message exceeds {MAX_MESSAGE_LENGTH} characters")
    message = ChatMessage(participant_id, alternative_id, text, _now())
    session.messages.append(message)
    return message


@dataclass(frozen=True)
class Engines:
    """Loaded lexicons and rule bases shared across computations."""

    sentiment_lexicon: affect.SentimentLexicon
    emotion_lexicon: affect.EmotionLexicon
    preference_fis: object
    feedback_fis: object

    @classmethod
    def load(cls, preference_path=None, feedback_path=None,
             sentiment_lexicon_path=None, emotion_lexicon_path=None) -> "Engines":
        return cls(
            sentiment_lexicon=affect.SentimentLexicon.load(sentiment_lexicon_path),
            emotion_lexicon=affect.EmotionLexicon.load(emotion_lexicon_path),
            preference_fis=pipeline.load_preference_fis(preference_path),
            feedback_fis=consensus.load_feedback_fis(feedback_path),
        )


def message_affect(session: Session, engines: Engines,
                   message: ChatMessage) -> affect.AffectScore:
    score, _ = affect.score_text(
        engines.sentiment_lexicon, engines.emotion_lexicon, message.text,
        alpha=session.affect_config.alpha, beta=session.affect_config.beta)
    return score


def participant_affects(session: Session,
                        engines: Engines) -> dict[tuple[str, str], float]:
    """Mean fused affect per (participant, alternative) over their messages."""
    buckets: dict[tuple[str, str], list[float]] = {}
    for message in session.messages:
        score = message_affect(session, engines, message)
        buckets.setdefault((message.participant, message.alternative),
                           []).append(score.fused)
    return {key: sum(vals) / len(vals) for key, vals in buckets.items()}


def panel_weights(session: Session) -> dict[str, float] | None:
    """Normalized explicit weights, or None for the uniform default."""
    explicit = [p for p in session.participants if p.weight is not None]
    if not explicit:
        return None
    if len(explicit) != len(session.participants):
        raise SessionError("either all participants carry weights or none")
    total = sum(p.weight for p in explicit)
    return {p.id: p.weight / total for p in explicit}


def compute_ranking(session: Session, engines: Engines) -> Ranking:
    if session.phase is not Phase.RANKING:
        raise PhaseError("phase violation: ranking computed in the ranking phase")
    voted = {a.participant for a in session.assessments}
    missing = sorted(session.participant_ids() - voted)
    if missing:
        raise SessionError(f"panel incomplete: missing assessments from {missing}")
    sentiments = participant_affects(session, engines)
    matrix = preferences.aggregate(
        session.features, session.alternatives, session.assessments,
        sentiments=sentiments, weights=panel_weights(session))
    totals = {
        alt: pipeline.total_preference(
            engines.preference_fis,
            matrix.collective_voting[alt],
            matrix.collective_sentiment[alt])
        for alt in matrix.alternatives
    }
    ranking = pipeline.rank(totals)
    session.preference_matrix = matrix
    session.ranking = ranking
    return ranking


def submit_feedback(session: Session, engines: Engines, participant_id: str,
                    agreement: float, confidence: float) -> FeedbackEntry:
    if session.phase is not Phase.FEEDBACK:
        raise PhaseError("phase violation: feedback accepted only during feedback")
    if participant_id not in session.participant_ids():
        raise UnknownIdError(f"unknown participant {participant_id!r}")
    if any(f.participant == participant_id for f in session.feedback):
        raise DuplicateError(f"participant {participant_id!r} already gave feedback")
    score = consensus.feedback_score(engines.feedback_fis, agreement, confidence)
    entry = FeedbackEntry(participant_id, float(agreement), float(confidence), score)
    session.feedback.append(entry)
    # New feedback invalidates any previously persisted report.
    session.consensus_report = None
    return entry


def build_consensus(session: Session, engines: Engines) -> ConsensusReport:
    if session.phase not in (Phase.FEEDBACK, Phase.CLOSED):
        raise PhaseError("phase violation: consensus needs the feedback phase")
    if session.consensus_report is not None:
        return session.consensus_report
    report = consensus.consensus_report(
        engines.feedback_fis,
        [(f.agreement, f.confidence) for f in session.feedback],
        session.consensus_thresholds)
    session.consensus_report = report
    return report


# --- session document (export/import) -------------------------------------

def to_document(session: Session) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "id": session.id,
        "phase": session.phase.value,
        "created_at": session.created_at,
        "affect": {"alpha": session.affect_config.alpha,
                   "beta": session.affect_config.beta},
        "consensus_thresholds": {
            "high_max": session.consensus_thresholds.high_max,
            "medium_max": session.consensus_thresholds.medium_max,
        },
        "features": [
            {"id": f.id, "kind": f.kind,
             **({"direction": f.direction.value} if f.direction else {})}
            for f in session.features
        ],
        "alternatives": [
            {"id": a.id, "label": a.label, "features": dict(a.feature_values)}
            for a in session.alternatives
        ],
        "participants": [
            {"id": p.id, "name": p.name,
             **({"weight": p.weight} if p.weight is not None else {})}
            for p in session.participants
        ],
        "assessments": [
            {"participant": a.participant, "values": dict(a.values)}
            for a in session.assessments
        ],
        "messages": [
            {"participant": m.participant, "alternative": m.alternative,
             "text": m.text, "timestamp": m.timestamp}
            for m in session.messages
        ],
        "feedback": [
            {"participant": f.participant, "agreement": f.agreement,
             "confidence": f.confidence,
             **({"score": f.score} if f.score is not None else {})}
            for f in session.feedback
        ],
    }
    if session.preference_matrix is not None:
        doc["preference_matrix"] = _matrix_to_dict(session.preference_matrix)
    if session.ranking is not None:
        doc["ranking"] = {
            "ordered": [{"alternative": alt, "total_preference": total}
                        for alt, total in session.ranking.ordered],
            "top_ranked": session.ranking.top_ranked,
        }
    if session.consensus_report is not None:
        r = session.consensus_report
        doc["consensus"] = {
            "scores": list(r.scores), "q1": r.q1, "q3": r.q3, "iqr": r.iqr,
            "level": r.level, "notes": list(r.notes),
        }
    return doc


def _matrix_to_dict(m: PreferenceMatrix) -> dict:
    return {
        "participants": list(m.participants),
        "alternatives": list(m.alternatives),
        "raw": {p: {alt: m.raw[(p, alt)] for alt in m.alternatives}
                for p in m.participants},
        "scaled": {p: {alt: m.scaled[(p, alt)] for alt in m.alternatives}
                   for p in m.participants},
        "collective_voting": dict(m.collective_voting),
        "collective_sentiment": dict(m.collective_sentiment),
        "weights": dict(m.weights),
    }


def _matrix_from_dict(data: dict) -> PreferenceMatrix:
    participants = tuple(data["participants"])
    alternatives = tuple(data["alternatives"])
    return PreferenceMatrix(
        participants=participants,
        alternatives=alternatives,
        raw={(p, alt): data["raw"][p][alt]
             for p in participants for alt in alternatives},
        scaled={(p, alt): data["scaled"][p][alt]
                for p in participants for alt in alternatives},
        collective_voting=dict(data["collective_voting"]),
        collective_sentiment=dict(data["collective_sentiment"]),
        weights=dict(data["weights"]),
    )


def _require(data: dict, key: str, kind, path: str):
    if key not in data:
        raise DocumentError("missing field", f"{path}.{key}")
    value = data[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise DocumentError(f"expected a number, got {type(value).__name__}",
                                f"{path}.{key}")
        return float(value)
    if not isinstance(value, kind):
        raise DocumentError(f"expected {kind.__name__}, got {type(value).__name__}",
                            f"{path}.{key}")
    return value


def from_document(doc: dict) -> Session:
    if not isinstance(doc, dict):
        raise DocumentError("session document must be an object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {version!r}",
                            "schema_version")
    try:
        phase = Phase(_require(doc, "phase", str, "$"))
    except ValueError:
        raise DocumentError(f"unknown phase {doc.get('phase')!r}", "phase") from None

    features = []
    for i, f in enumerate(_require(doc, "features", list, "$")):
        path = f"features[{i}]"
        direction = f.get("direction")
        try:
            features.append(FeatureSpec(
                id=_require(f, "id", str, path),
                kind=_require(f, "kind", str, path),
                direction=Direction(direction) if direction else None))
        except preferences.PreferenceError as exc:
            raise DocumentError(str(exc), path) from None
        except ValueError:
            raise DocumentError(f"unknown direction {direction!r}", path) from None

    alternatives = [
        Alternative(
            id=_require(a, "id", str, f"alternatives[{i}]"),
            label=a.get("label", ""),
            feature_values={k: float(v) for k, v in
                            _require(a, "features", dict, f"alternatives[{i}]").items()})
        for i, a in enumerate(_require(doc, "alternatives", list, "$"))
    ]
    affect_cfg = doc.get("affect", {})
    thresholds_cfg = doc.get("consensus_thresholds", {})

    try:
        affect_config = AffectConfig(alpha=float(affect_cfg.get("alpha", 0.6)),
                                     beta=float(affect_cfg.get("beta", 0.4)))
    except SessionError as exc:
        raise DocumentError(str(exc), "affect") from None
    try:
        thresholds = ConsensusThresholds(
            high_max=float(thresholds_cfg.get("high_max", consensus.HIGH_MAX_DEFAULT)),
            medium_max=float(thresholds_cfg.get("medium_max", consensus.MEDIUM_MAX_DEFAULT)))
    except consensus.ConsensusError as exc:
        raise DocumentError(str(exc), "consensus_thresholds") from None

    session = Session(
        id=_require(doc, "id", str, "$"),
        phase=phase,
        created_at=doc.get("created_at", _now()),
        features=features,
        alternatives=alternatives,
        affect_config=affect_config,
        consensus_thresholds=thresholds,
    )

    for i, p in enumerate(doc.get("participants", [])):
        session.participants.append(Participant(
            id=_require(p, "id", str, f"participants[{i}]"),
            name=p.get("name", ""),
            weight=p.get("weight")))
    for i, a in enumerate(doc.get("assessments", [])):
        path = f"assessments[{i}]"
        values = _require(a, "values", dict, path)
        for fid, z in values.items():
            if z not in (-1, 0, 1):
                raise DocumentError(f"assessment value {fid}={z!r}", path)
        session.assessments.append(Assessment(
            _require(a, "participant", str, path), {k: int(v) for k, v in values.items()}))
    for i, m in enumerate(doc.get("messages", [])):
        path = f"messages[{i}]"
        session.messages.append(ChatMessage(
            _require(m, "participant", str, path),
            _require(m, "alternative", str, path),
            _require(m, "text", str, path),
            m.get("timestamp", "")))
    for i, f in enumerate(doc.get("feedback", [])):
        path = f"feedback[{i}]"
        session.feedback.append(FeedbackEntry(
            _require(f, "participant", str, path),
            _require(f, "agreement", float, path),
            _require(f, "confidence", float, path),
            score=f.get("score")))

    _check_integrity(session)

    if "preference_matrix" in doc:
        session.preference_matrix = _matrix_from_dict(doc["preference_matrix"])
    if "ranking" in doc:
        r = doc["ranking"]
        session.ranking = Ranking(tuple(
            (entry["alternative"], float(entry["total_preference"]))
            for entry in r["ordered"]))
    if "consensus" in doc:
        c = doc["consensus"]
        session.consensus_report = ConsensusReport(
            scores=tuple(float(s) for s in c["scores"]),
            q1=float(c["q1"]), q3=float(c["q3"]), iqr=float(c["iqr"]),
            level=c["level"], notes=tuple(c.get("notes", ())))
    return session


def _check_integrity(session: Session) -> None:
    participants = session.participant_ids()
    alternatives = session.alternative_ids()
    feature_ids = {f.id for f in session.features}
    for a in session.assessments:
        if a.participant not in participants:
            raise DocumentError(f"assessment by unknown participant {a.participant!r}")
        if set(a.values) != feature_ids:
            raise DocumentError(f"assessment of {a.participant!r} does not match features")
    seen = [a.participant for a in session.assessments]
    if len(set(seen)) != len(seen):
        raise DocumentError("multiple assessments by one participant")
    for m in session.messages:
        if m.participant not in participants:
            raise DocumentError(f"message by unknown participant {m.participant!r}")
        if m.alternative not in alternatives:
            raise DocumentError(f"message about unknown alternative {m.alternative!r}")
    for f in session.feedback:
        if f.participant not in participants:
            raise DocumentError(f"feedback by unknown participant {f.participant!r}")
        if not 0 <= f.agreement <= 10 or not 0 <= f.confidence <= 10:
            raise DocumentError(f"feedback of {f.participant!r} out of range")
    seen = [f.participant for f in session.feedback]
    if len(set(seen)) != len(seen):
        raise DocumentError("multiple feedback entries by one participant")

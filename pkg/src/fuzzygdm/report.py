"""Offline pipeline run over a session document, producing a report.

The report re-derives everything from intake data (assessments, chat
messages, feedback pairs), so it doubles as an audit of any results
persisted by the live service: identical intake always yields a
byte-identical report. Timestamps never enter the report for that
reason; messages are identified by (participant, alternative, index).
"""

from __future__ import annotations

import json

from . import consensus, pipeline, preferences
from .session import Engines, Session, message_affect, panel_weights, participant_affects


class ReportError(ValueError):
    pass


def build_report(session: Session, engines: Engines) -> dict:
    """Run the full decision pipeline offline and collect every table."""
    if not session.assessments:
        raise ReportError("panel incomplete: no assessments in session")
    voted = {a.participant for a in session.assessments}
    registered = session.participant_ids() or voted
    missing = sorted(registered - voted)
    if missing:
        raise ReportError(f"panel incomplete: missing assessments from {missing}")

    boolean = preferences.normalize_features(session.features, session.alternatives)
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

    report = {
        "schema_version": 1,
        "kind": "gdm-report",
        "session_id": session.id,
        "affect": {"alpha": session.affect_config.alpha,
                   "beta": session.affect_config.beta},
        "normalized_features": {
            alt.id: boolean[alt.id] for alt in session.alternatives},
        "preference_values": {
            p: {alt: matrix.raw[(p, alt)] for alt in matrix.alternatives}
            for p in matrix.participants},
        "scaled_preference_values": {
            p: {alt: matrix.scaled[(p, alt)] for alt in matrix.alternatives}
            for p in matrix.participants},
        "collective_voting": dict(matrix.collective_voting),
        "message_affect": [
            {
                "participant": m.participant,
                "alternative": m.alternative,
                "index": i,
                "sentiment": score.sentiment,
                "emotion": score.emotion,
                "fused": score.fused,
            }
            for i, (m, score) in enumerate(
                (m, message_affect(session, engines, m)) for m in session.messages)
        ],
        "collective_sentiment": dict(matrix.collective_sentiment),
        "total_preferences": totals,
        "ranking": {
            "ordered": [{"alternative": alt, "total_preference": t}
                        for alt, t in ranking.ordered],
            "top_ranked": ranking.top_ranked,
        },
    }

    if len(session.feedback) >= 2:
        rep = consensus.consensus_report(
            engines.feedback_fis,
            [(f.agreement, f.confidence) for f in session.feedback],
            session.consensus_thresholds)
        report["feedback_scores"] = [
            {"participant": f.participant, "agreement": f.agreement,
             "confidence": f.confidence, "score": score}
            for f, score in zip(session.feedback, rep.scores)]
        report["consensus"] = {
            "q1": rep.q1, "q3": rep.q3, "iqr": rep.iqr,
            "level": rep.level, "notes": list(rep.notes),
        }
    else:
        report["feedback_scores"] = []
        report["consensus"] = None
    return report


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    """Human-readable table rendering of the report."""
    lines = [f"Session {report['session_id']}", ""]
    alts = list(report["normalized_features"])

    lines.append("Normalized feature matrix")
    for alt in alts:
        bits = " ".join(str(v) for v in report["normalized_features"][alt])
        lines.append(f"  {alt}: [{bits}]")

    lines.append("")
    lines.append("Scaled preference values (rows: alternatives)")
    participants = list(report["scaled_preference_values"])
    header = "  alt       " + "".join(f"{p:>10}" for p in participants) + "       avg"
    lines.append(header)
    for alt in alts:
        cells = "".join(
            f"{report['scaled_preference_values'][p][alt]:>10.0f}"
            for p in participants)
        lines.append(f"  {alt:<10}{cells}{report['collective_voting'][alt]:>10.1f}")

    lines.append("")
    lines.append("Collective sentiment")
    for alt in alts:
        lines.append(f"  {alt}: {report['collective_sentiment'][alt]:+.4f}")

    lines.append("")
    lines.append("Total preference scores")
    for entry in report["ranking"]["ordered"]:
        lines.append(f"  {entry['alternative']}: {entry['total_preference']:.2f}")
    lines.append(f"Top ranked: {report['ranking']['top_ranked']}")

    if report["consensus"]:
        lines.append("")
        lines.append("Feedback")
        for f in report["feedback_scores"]:
            lines.append(
                f"  {f['participant']}: agreement {f['agreement']:.0f}, "
                f"confidence {f['confidence']:.0f} -> {f['score']:.2f}")
        c = report["consensus"]
        lines.append(
            f"Consensus: IQR {c['iqr']:.2f} (Q1 {c['q1']:.2f}, Q3 {c['q3']:.2f}) "
            f"-> {c['level']}")
        for note in c["notes"]:
            lines.append(f"  note: {note}")
    else:
        lines.append("")
        lines.append("Consensus: not available (fewer than 2 feedback entries)")
    return "\n".join(lines) + "\n"

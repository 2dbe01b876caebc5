"""Command line front door: batch runs, ad-hoc scoring, and the service.

Exit codes: 0 success, 1 operational failure (port in use, bad data
directory), 2 schema/input violations, 3 incomplete panel.
"""

from __future__ import annotations

import errno
import json
import sys

import click

from . import affect, report as report_mod, session as sessions
from .session import DocumentError, Engines, SessionError


@click.group()
@click.version_option("0.1.0", prog_name="gdm")
def main():
    """Group decision sessions with fuzzy preference fusion."""


@main.command()
@click.option("--session", "session_path", required=True,
              type=click.Path(exists=False), help="Session document to replay.")
@click.option("--out", "out_path", required=True, type=click.Path(),
              help="Where to write the report (JSON).")
@click.option("--fis-pref", "--fis-config", "fis_pref", type=click.Path(),
              default=None, help="Preference FIS config override.")
@click.option("--fis-feedback", type=click.Path(), default=None,
              help="Feedback FIS config override.")
@click.option("--affect", "affect_mode",
              type=click.Choice(["sentiment-only", "fused"]), default=None,
              help="Override the session's affect weighting.")
@click.option("--pretty", type=click.Path(), default=None,
              help="Also write a human-readable rendering here.")
def run(session_path, out_path, fis_pref, fis_feedback, affect_mode, pretty):
    """Replay a session document through the full pipeline."""
    try:
        with open(session_path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        click.echo(f"error: cannot read {session_path}: {exc}", err=True)
        sys.exit(2)
    except json.JSONDecodeError as exc:
        click.echo(f"error: {session_path}:{exc.lineno}:{exc.colno}: {exc.msg}",
                   err=True)
        sys.exit(2)
    try:
        session = sessions.from_document(doc)
    except SessionError as exc:
        click.echo(f"error: invalid session document: {exc}", err=True)
        sys.exit(2)

    if affect_mode == "sentiment-only":
        session.affect_config = sessions.AffectConfig.sentiment_only()
    elif affect_mode == "fused":
        session.affect_config = sessions.AffectConfig()

    engines = _load_engines(fis_pref, fis_feedback)
    try:
        result = report_mod.build_report(session, engines)
    except report_mod.ReportError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)

    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(report_mod.render_json(result))
    if pretty:
        with open(pretty, "w", encoding="utf-8") as fh:
            fh.write(report_mod.render_text(result))
    top = result["ranking"]["top_ranked"]
    level = result["consensus"]["level"] if result["consensus"] else "n/a"
    click.echo(f"top ranked: {top}; consensus: {level}; report: {out_path}")


@main.command()
@click.option("--text", required=True, help="Text to score.")
@click.option("--sentiment-lexicon", type=click.Path(), default=None)
@click.option("--emotion-lexicon", type=click.Path(), default=None)
@click.option("--alpha", type=float, default=0.6, show_default=True)
@click.option("--beta", type=float, default=0.4, show_default=True)
def score(text, sentiment_lexicon, emotion_lexicon, alpha, beta):
    """Score a single text: sentiment, emotion vector, fused preference."""
    try:
        sent_lex = affect.SentimentLexicon.load(sentiment_lexicon)
        emo_lex = affect.EmotionLexicon.load(emotion_lexicon)
    except (OSError, affect.LexiconError) as exc:
        click.echo(f"error: cannot load lexicon: {exc}", err=True)
        sys.exit(2)
    try:
        result, vector = affect.score_text(sent_lex, emo_lex, text,
                                           alpha=alpha, beta=beta)
    except affect.LexiconError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"sentiment: {result.sentiment:+.4f}")
    click.echo("emotions:  " + ", ".join(
        f"{name}={getattr(vector, name):.3f}" for name in affect.EMOTIONS))
    click.echo(f"emotion:   {result.emotion:+.4f}")
    click.echo(f"fused:     {result.fused:+.4f} (alpha={result.alpha}, "
               f"beta={result.beta})")


@main.command()
@click.option("--addr", default="127.0.0.1:8000", show_default=True,
              help="host:port to listen on.")
@click.option("--data", "data_dir", required=True, type=click.Path(),
              help="Directory for session documents.")
@click.option("--fis-pref", "--fis-config", "fis_pref", type=click.Path(),
              default=None, help="Preference FIS config override.")
@click.option("--fis-feedback", type=click.Path(), default=None,
              help="Feedback FIS config override.")
@click.option("--affect-default",
              type=click.Choice(["sentiment-only", "fused"]), default="fused",
              show_default=True,
              help="Affect weighting for sessions that do not choose one.")
def serve(addr, data_dir, fis_pref, fis_feedback, affect_default):
    """Run the HTTP session service (blocks until terminated)."""
    import uvicorn

    from .service import create_app

    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        click.echo(f"error: --addr must be host:port, got {addr!r}", err=True)
        sys.exit(2)
    engines = _load_engines(fis_pref, fis_feedback)
    affect = (sessions.AffectConfig.sentiment_only()
              if affect_default == "sentiment-only" else sessions.AffectConfig())
    try:
        app = create_app(data_dir, engines, default_affect=affect)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    try:
        uvicorn.run(app, host=host, port=int(port), log_level="info")
    except SystemExit:
        raise
    except OSError as exc:
        if exc.errno in (errno.EADDRINUSE, errno.EACCES):
            click.echo(f"error: cannot bind {addr}: {exc}", err=True)
            sys.exit(1)
        raise


def _load_engines(fis_pref, fis_feedback) -> Engines:
    try:
        return Engines.load(preference_path=fis_pref, feedback_path=fis_feedback)
    except (OSError, ValueError) as exc:
        click.echo(f"error: cannot load engine config: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    main()

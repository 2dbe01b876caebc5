"""File-backed session store: one JSON document per session.

Writes go to a temp file in the same directory followed by an atomic
rename, so readers only ever see complete documents. Mutations to a
single session are serialized through a per-session lock; reads load
the latest committed snapshot without locking.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from contextlib import contextmanager
from pathlib import Path

from . import session as sessions
from .session import Session, UnknownIdError


class SessionStore:
    def __init__(self, data_dir):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        probe = self.data_dir / ".write-probe"
        try:
            probe.write_text("")
            probe.unlink()
        except OSError as exc:
            raise OSError(f"data directory {self.data_dir} not writable: {exc}") from exc
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _path(self, session_id: str) -> Path:
        if not session_id.replace("-", "").replace("_", "").isalnum():
            raise UnknownIdError(f"unknown session {session_id!r}")
        return self.data_dir / f"{session_id}.session.json"

    def _lock(self, session_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(session_id, threading.Lock())

    def save(self, session: Session) -> None:
        doc = sessions.to_document(session)
        payload = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
        path = self._path(session.id)
        fd, tmp = tempfile.mkstemp(dir=self.data_dir, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def load(self, session_id: str) -> Session:
        path = self._path(session_id)
        if not path.exists():
            raise UnknownIdError(f"unknown session {session_id!r}")
        with open(path, encoding="utf-8") as fh:
            return sessions.from_document(json.load(fh))

    def exists(self, session_id: str) -> bool:
        return self._path(session_id).exists()

    def list_ids(self) -> list[str]:
        return sorted(p.name.removesuffix(".session.json")
                      for p in self.data_dir.glob("*.session.json"))

    @contextmanager
    def mutate(self, session_id: str):
        """Load-modify-save under the session's lock; commits on success."""
        with self._lock(session_id):
            session = self.load(session_id)
            yield session
            self.save(session)

    def create(self, session: Session) -> None:
        with self._lock(session.id):
            if self.exists(session.id):
                raise sessions.DuplicateError(f"session {session.id!r} exists")
            self.save(session)

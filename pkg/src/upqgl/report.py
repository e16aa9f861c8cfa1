"""Machine-readable outcome of one verification task."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

SCHEMA = 1
STATUSES = ("pass", "fail", "skipped", "error")


@dataclass
class Report:
    check: str
    params: dict = field(default_factory=dict)
    status: str = "pass"
    residual: str = ""
    elapsed_ms: int = 0
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "pass" and self.residual:
            raise ValueError("a passing report carries no residual")

    @property
    def ok(self):
        return self.status == "pass"

    def to_dict(self):
        d = asdict(self)
        d["schema"] = SCHEMA
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        schema = d.pop("schema", SCHEMA)
        if schema != SCHEMA:
            raise ValueError(f"unsupported report schema {schema}")
        return cls(**d)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def sort_key(self):
        return (self.check, json.dumps(self.params, sort_keys=True))


def outcome(check, params, ok, residual="", notes=(), elapsed_ms=0):
    return Report(check, dict(params), "pass" if ok else "fail",
                  "" if ok else str(residual), elapsed_ms, list(notes))


@contextmanager
def timed():
    box = {}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = int(round((time.perf_counter() - t0) * 1000))


def stamp(fn):
    """Wrap a check so the Report carries its wall-clock time."""
    import functools

    @functools.wraps(fn)
    def wrapper(*a, **kw):
        t0 = time.perf_counter()
        rep = fn(*a, **kw)
        rep.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
        return rep
    return wrapper

"""Soft wall-clock budget for long computations.

``TRACEGATE_BUDGET_MS`` (milliseconds) caps the work done per field; the
heavy loops call :func:`check` and abort with
:class:`~tracegate.errors.TimeBudgetExceeded` once the deadline passes.
"""

import os
import time
from contextlib import contextmanager

from .errors import TimeBudgetExceeded

_deadline = None


def _from_env():
    raw = os.environ.get("TRACEGATE_BUDGET_MS")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


@contextmanager
def limit(ms=None):
    """Run a block under a deadline (defaults to the environment setting)."""
    global _deadline
    if ms is None:
        ms = _from_env()
    saved = _deadline
    _deadline = None if ms is None else time.monotonic() + ms / 1000
    try:
        yield
    finally:
        _deadline = saved


def check():
    if _deadline is not None and time.monotonic() > _deadline:
        raise TimeBudgetExceeded("per-field time budget exceeded")

"""Global numerical tolerance.

One relative threshold governs symmetry checks, numerical ranks and the
quadratic criteria.  It defaults to ``1e-9``; the ``SRANK_EPSILON``
environment variable overrides the default at import time and
:func:`set_epsilon` / :func:`epsilon_context` override it at run time.
"""

from __future__ import annotations

import contextlib
import os

DEFAULT_EPSILON = 1e-9

_epsilon = DEFAULT_EPSILON


def _parse(value) -> float:
    eps = float(value)
    if not (eps > 0.0 and eps < 1.0):
        raise ValueError(f"epsilon must lie in (0, 1), got {value!r}")
    return eps


def get_epsilon() -> float:
    return _epsilon


def set_epsilon(value: float) -> None:
    global _epsilon
    _epsilon = _parse(value)


def resolve(eps: float | None) -> float:
    """Return ``eps`` if given, otherwise the current global tolerance."""
    return _epsilon if eps is None else _parse(eps)


@contextlib.contextmanager
def epsilon_context(value: float):
    global _epsilon
    saved = _epsilon
    _epsilon = _parse(value)
    try:
        yield _epsilon
    finally:
        _epsilon = saved


if "SRANK_EPSILON" in os.environ:
    _epsilon = _parse(os.environ["SRANK_EPSILON"])

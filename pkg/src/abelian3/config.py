"""Runtime limits shared across the package."""

from __future__ import annotations

import os

DEFAULT_ELEMENT_BOUND = 4096
ELEMENT_BOUND_ENV = "ABELIAN3_ELEMENT_BOUND"


def element_bound() -> int:
    """Largest group order for which element sets may be materialized.

    Defaults to DEFAULT_ELEMENT_BOUND; override with the ABELIAN3_ELEMENT_BOUND
    environment variable. Read on every call so tests and long-lived processes
    can adjust it.
    """
    raw = os.environ.get(ELEMENT_BOUND_ENV)
    if raw is None:
        return DEFAULT_ELEMENT_BOUND
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ELEMENT_BOUND_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ELEMENT_BOUND_ENV} must be positive, got {value}")
    return value

from __future__ import annotations

import os

DEFAULT_ENUMERATION_CAP = 10**6
DEFAULT_FACE_CAP = 2_000_000
DEFAULT_SEARCH_CAP = 2_000_000


class CapExceeded(RuntimeError):
    """A configured resource cap was hit; the result is unknown, not negative."""

    def __init__(self, what: str, cap: int, detail: str = ""):
        self.what = what
        self.cap = cap
        msg = f"{what} exceeded cap {cap}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def face_cap() -> int:
    raw = os.environ.get("NEIGHBORLY_CAP_FACES")
    if raw is None or not raw.strip():
        return DEFAULT_FACE_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"NEIGHBORLY_CAP_FACES must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError("NEIGHBORLY_CAP_FACES must be positive")
    return value

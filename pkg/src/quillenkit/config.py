"""Process-wide size limits.

The entry cap is held in a context variable so concurrent computations can
run under different caps without sharing mutable state.
"""

import contextlib
import contextvars
import os

from .errors import SizeCapError

DEFAULT_ENTRY_CAP = 4_000_000
MAX_GROUP_ORDER = 24
MAX_DEGREE = 4

_entry_cap = contextvars.ContextVar("entry_cap", default=None)


def entry_cap() -> int:
    cap = _entry_cap.get()
    if cap is not None:
        return cap
    env = os.environ.get("QK_ENTRY_CAP")
    if env:
        return int(env)
    return DEFAULT_ENTRY_CAP


@contextlib.contextmanager
def override_entry_cap(cap: int):
    if cap < 1:
        raise ValueError("entry cap must be >= 1")
    token = _entry_cap.set(cap)
    try:
        yield cap
    finally:
        _entry_cap.reset(token)


def check_entries(rows: int, cols: int, what: str = "matrix") -> None:
    cap = entry_cap()
    if rows * cols > cap:
        raise SizeCapError(
            f"{what} of shape {rows}x{cols} has {rows * cols} entries, "
            f"above the entry cap {cap}"
        )

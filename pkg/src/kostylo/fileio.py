"""Shared output helpers: number formatting and atomic file writes.

All CSV numbers use '.' decimals, no thousands separators, and 12 significant
digits so reports are byte-stable across platforms. Files are written to a
temp path and renamed into place, so readers never observe partial output.
"""

from __future__ import annotations

import os
from contextlib import contextmanager


def fmt_number(value) -> str:
    if isinstance(value, bool):
        raise TypeError("fmt_number does not take booleans")
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".12g")


@contextmanager
def atomic_writer(path):
    """Open path for writing via a temp file renamed on success."""
    tmp = f"{path}.tmp"
    fh = open(tmp, "w", encoding="utf-8", newline="")
    try:
        yield fh
        fh.close()
        os.replace(tmp, path)
    except BaseException:
        fh.close()
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path, header: list[str], rows) -> None:
    """Plain comma-joined CSV; fields here never contain commas or quotes."""
    with atomic_writer(path) as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(str(f) if isinstance(f, str) else fmt_number(f) for f in row))
            fh.write("\n")

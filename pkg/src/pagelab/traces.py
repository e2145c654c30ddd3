"""Plain-text reference traces.

One page id per whitespace-separated token; lines whose first non-blank
character is ``#`` are comments.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable


class TraceParseError(ValueError):
    pass


def parse_trace(text: str) -> tuple[int, ...]:
    refs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.lstrip().startswith("#"):
            continue
        for token in line.split():
            try:
                page = int(token)
            except ValueError:
                raise TraceParseError(f"line {lineno}: {token!r} is not an integer") from None
            if page < 1:
                raise TraceParseError(f"line {lineno}: page ids must be positive, got {page}")
            refs.append(page)
    return tuple(refs)


def parse_inline(text: str) -> tuple[int, ...]:
    """Pages separated by commas and/or whitespace, e.g. ``"1,2,3"``."""
    return parse_trace(text.replace(",", " "))


def read_trace(path) -> tuple[int, ...]:
    return parse_trace(Path(path).read_text())


def format_trace(refs: Iterable[int], comment: str | None = None, per_line: int = 20) -> str:
    refs = list(refs)
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    for i in range(0, len(refs), per_line):
        lines.append(" ".join(str(p) for p in refs[i:i + per_line]))
    return "\n".join(lines) + "\n"


def write_trace(path, refs: Iterable[int], comment: str | None = None) -> None:
    Path(path).write_text(format_trace(refs, comment))

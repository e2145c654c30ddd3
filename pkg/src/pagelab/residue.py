"""Complete residue systems and the half-step sequence W used by the
unbounded-anomaly construction.

Residues are written as representatives in ``[1, n]``; the class of 0 is
rendered as ``n`` so that residues double as page numbers.
"""
from __future__ import annotations

from math import gcd
from typing import Sequence


def representative(a: int, n: int) -> int:
    """Smallest positive integer congruent to ``a`` modulo ``n``."""
    return (a - 1) % n + 1


def _check_odd(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise ValueError(f"expected an odd integer >= 3, got {n!r}")


def build_w(n: int) -> tuple[int, ...]:
    """W(n): ``w_i = 1 + (i - 1)(n - 1)/2 (mod n)`` for ``i = 1..n``."""
    _check_odd(n)
    step = (n - 1) // 2
    return tuple(representative(1 + i * step, n) for i in range(n))


def repeated_w(n: int, k: int) -> tuple[int, ...]:
    """W^k, the concatenation of ``k`` copies of W(n)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return build_w(n) * k


def is_complete_residue_system(seq: Sequence[int], n: int) -> bool:
    if n < 1 or len(seq) != n:
        return False
    return len({x % n for x in seq}) == n


def affine_image(seq: Sequence[int], a: int, d: int, n: int) -> tuple[int, ...]:
    """Map each ``c`` to ``a*c + d`` reduced into ``[1, n]``.

    A complete residue system stays complete when ``gcd(a, n) == 1``.
    """
    if gcd(a, n) != 1:
        raise ValueError(f"multiplier {a} is not coprime to {n}")
    return tuple(representative(a * c + d, n) for c in seq)


def window_is_crs(n: int, k: int, window_start: int) -> bool:
    """Whether the ``n`` consecutive entries of W^k starting at the 1-based
    position ``window_start`` form a complete residue system."""
    seq = repeated_w(n, k)
    if not 1 <= window_start <= len(seq) - n + 1:
        raise IndexError(f"window start {window_start} outside 1..{len(seq) - n + 1}")
    return is_complete_residue_system(seq[window_start - 1:window_start - 1 + n], n)


def has_period(seq: Sequence[int], period: int) -> bool:
    """Exact periodicity: ``seq[j + period] == seq[j]`` wherever both exist."""
    return all(seq[j + period] == seq[j] for j in range(len(seq) - period))

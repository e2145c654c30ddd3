"""Reference strings that make FIFO fault more with more memory.

Contents:

* the classical 12-reference string (3 vs 4 frames, ratio 10/9);
* the 7-page family ``U V^k`` whose ratio passes 2 and tends to 3;
* ``anomaly_prefix``, which drives a small FIFO memory into any prescribed
  control state while a larger one keeps loading pages cyclically;
* the odd-``n`` family with ratio tending to ``(n - 1)/2``, and a generator
  that exceeds any requested ratio.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .paging import FifoQueue, Policy, fifo_step, simulate
from .residue import build_w

CLASSICAL_STRING = (1, 2, 3, 4, 1, 2, 5, 1, 2, 3, 4, 5)

# The 34-reference prefix as originally printed: the 29 references that
# ANOMALY emits plus five trailing hits (7, 3, 6, 2, 5).
DISPROOF_PREFIX_34 = (
    1, 2, 3, 4, 5, 6, 7, 1, 2, 4, 5, 6, 7, 3, 1, 2, 4,
    5, 7, 3, 6, 2, 1, 4, 7, 3, 6, 2, 5, 7, 3, 6, 2, 5,
)
DISPROOF_TARGET = (7, 3, 6, 2, 5)


class ConstructionError(ValueError):
    pass


def classical_example():
    """The 12-reference string with its small and large frame counts."""
    return CLASSICAL_STRING, 3, 4


def _check_family_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 5 or n % 2 == 0:
        raise ConstructionError(f"the family needs an odd page count n >= 5, got {n!r}")


def target_state(n: int) -> tuple[int, ...]:
    """Small-memory control state ``(w_3, ..., w_n)`` of the odd-``n`` family."""
    _check_family_n(n)
    return build_w(n)[2:]


def cycle_block(n: int) -> tuple[int, ...]:
    """``(1, ..., n)`` repeated ``(n - 1)/2`` times."""
    _check_family_n(n)
    return tuple(range(1, n + 1)) * ((n - 1) // 2)


def anomaly_prefix(m: int, M: int, q: Sequence[int]) -> tuple[int, ...]:
    """Reference string leaving an ``m``-frame FIFO memory in control state ``q``.

    Pages come from ``{1, ..., M + 1}``. The same string, run with ``M``
    frames, loads pages in the cyclic order ``1, 2, ..., M + 1, 1, ...``.
    Every emitted reference is a fault for the small memory.
    """
    q = tuple(q)
    if not 1 <= m < M:
        raise ConstructionError(f"need 1 <= m < M, got m={m}, M={M}")
    if len(q) != m or len(set(q)) != m:
        raise ConstructionError(f"target {q} must hold {m} distinct pages")
    if any(not isinstance(b, int) or not 1 <= b <= M + 1 for b in q):
        raise ConstructionError(f"target {q} must use pages 1..{M + 1}")

    pages = range(1, M + 2)
    out = []
    small = FifoQueue((), m)

    def emit(page):
        nonlocal small
        out.append(page)
        small, _, _ = fifo_step(small, page)

    def lowest_absent(skip=None):
        return next(p for p in pages if p not in small and p != skip)

    for page in range(1, M + 1):
        emit(page)
    for i, b in enumerate(q):
        if b in small:
            while b in small:
                emit(lowest_absent())
            while q[0] in small:
                emit(lowest_absent(skip=b))
            for earlier in q[:i]:
                emit(earlier)
        emit(b)
    return tuple(out)


@dataclass(frozen=True)
class ConstructionSpec:
    n: int
    k: int
    target_state: tuple[int, ...]

    def __post_init__(self):
        _check_family_n(self.n)
        if self.k < 1:
            raise ConstructionError("k must be >= 1")
        t = self.target_state
        if len(t) != self.m or len(set(t)) != len(t) or not all(1 <= p <= self.n for p in t):
            raise ConstructionError(f"bad target state {t} for n={self.n}")

    @property
    def m(self) -> int:
        return self.n - 2

    @property
    def M(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class FamilyReport:
    spec: ConstructionSpec
    prefix_U: tuple[int, ...]
    block_V: tuple[int, ...]
    sync_blocks: int
    small_faults: int
    large_faults: int
    ratio: Fraction
    limit_ratio: Fraction
    prefix_small_faults: int
    prefix_large_faults: int
    block_small_faults: tuple[int, ...]
    block_large_faults: tuple[int, ...]
    periodic: bool  # every block restored both control states

    @property
    def full_string(self) -> tuple[int, ...]:
        return self.prefix_U + self.block_V * self.spec.k


def family_prefix(n: int):
    """Prefix after which the small memory holds ``target_state(n)`` and the
    large memory holds ``(2, ..., n)``.

    ANOMALY alone fixes the small state; the large memory ends on some cyclic
    window of the pages. When that window is not ``(2, ..., n)``, one extra
    cycle block realigns it without disturbing the small state. Returns
    ``(prefix, sync_blocks)``.
    """
    target = target_state(n)
    prefix = anomaly_prefix(n - 2, n - 1, target)
    aligned = tuple(range(2, n + 1))
    if simulate(Policy.FIFO, prefix, n - 1).final_state == aligned:
        return prefix, 0
    prefix = prefix + cycle_block(n)
    small = simulate(Policy.FIFO, prefix, n - 2).final_state
    large = simulate(Policy.FIFO, prefix, n - 1).final_state
    if small != target or large != aligned:
        raise ConstructionError(f"could not align the memories for n={n}")
    return prefix, 1


class _Pair:
    """Small and large FIFO memories fed the same references."""

    def __init__(self, m, M, refs):
        a = simulate(Policy.FIFO, refs, m)
        b = simulate(Policy.FIFO, refs, M)
        self.m, self.M = m, M
        self.small, self.large = a.final_state, b.final_state
        self.small_faults, self.large_faults = a.fault_count, b.fault_count

    def feed(self, refs):
        a = simulate(Policy.FIFO, refs, self.m, initial=self.small)
        b = simulate(Policy.FIFO, refs, self.M, initial=self.large)
        restored = a.final_state == self.small and b.final_state == self.large
        self.small, self.large = a.final_state, b.final_state
        self.small_faults += a.fault_count
        self.large_faults += b.fault_count
        return a.fault_count, b.fault_count, restored


def unbounded_family(n: int, k: int) -> FamilyReport:
    """Build and simulate ``prefix + V^k`` for odd ``n >= 5`` with ``n - 2``
    and ``n - 1`` frames."""
    _check_family_n(n)
    if k < 1:
        raise ConstructionError("k must be >= 1")
    spec = ConstructionSpec(n, k, target_state(n))
    prefix, sync = family_prefix(n)
    block = cycle_block(n)

    pair = _Pair(spec.m, spec.M, prefix)
    pre_small, pre_large = pair.small_faults, pair.large_faults
    small_blocks, large_blocks, periodic = [], [], True
    for _ in range(k):
        s, l, restored = pair.feed(block)
        small_blocks.append(s)
        large_blocks.append(l)
        periodic = periodic and restored

    return FamilyReport(
        spec=spec,
        prefix_U=prefix,
        block_V=block,
        sync_blocks=sync,
        small_faults=pair.small_faults,
        large_faults=pair.large_faults,
        ratio=Fraction(pair.large_faults, pair.small_faults),
        limit_ratio=Fraction(n - 1, 2),
        prefix_small_faults=pre_small,
        prefix_large_faults=pre_large,
        block_small_faults=tuple(small_blocks),
        block_large_faults=tuple(large_blocks),
        periodic=periodic,
    )


@dataclass(frozen=True)
class RatioTarget:
    target: Fraction
    n: int
    k: int
    m: int
    M: int
    refs: tuple[int, ...]
    small_faults: int
    large_faults: int
    ratio: Fraction


def geometry_for_ratio(L) -> int:
    """Smallest odd ``n >= 5`` with ``n > 2L + 1``."""
    L = Fraction(L)
    bound = 2 * L + 1
    n = int(bound) + 1  # smallest integer strictly above bound
    if n % 2 == 0:
        n += 1
    return max(n, 5)


def construct_for_ratio(L) -> RatioTarget:
    """A reference string whose FIFO anomaly ratio is strictly above ``L``.

    The number of cycle blocks is the least one that works, found by feeding
    blocks one at a time and checking the simulated fault counts.
    """
    L = Fraction(L)
    if L < 1:
        raise ConstructionError(f"target ratio must be >= 1, got {L}")
    n = geometry_for_ratio(L)
    m, M = n - 2, n - 1
    prefix, _ = family_prefix(n)
    block = cycle_block(n)

    pair = _Pair(m, M, prefix)
    k = 0
    while k == 0 or Fraction(pair.large_faults, pair.small_faults) <= L:
        pair.feed(block)
        k += 1

    refs = prefix + block * k
    small = simulate(Policy.FIFO, refs, m).fault_count
    large = simulate(Policy.FIFO, refs, M).fault_count
    if (small, large) != (pair.small_faults, pair.large_faults):
        raise ConstructionError("block-by-block and whole-string simulations disagree")
    return RatioTarget(L, n, k, m, M, refs, small, large, Fraction(large, small))

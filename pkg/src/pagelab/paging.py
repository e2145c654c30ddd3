"""FIFO, LRU and MIN page replacement automata with exact fault counting.

Pages are positive integers. Every state is an ordered tuple of resident
pages: for FIFO the eviction queue (oldest first), for LRU the recency list
(least recently used first), for MIN the load order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class Policy(str, enum.Enum):
    FIFO = "fifo"
    LRU = "lru"
    MIN = "min"


class InvalidStateError(ValueError):
    """A memory state breaks distinctness, capacity or page-id rules."""


class DegenerateInputError(ValueError):
    """A ratio or rate is undefined for the given input (division by zero)."""


def check_page(page) -> int:
    if isinstance(page, bool) or not isinstance(page, int) or page < 1:
        raise InvalidStateError(f"page ids are positive integers, got {page!r}")
    return page


def check_state(entries: Iterable[int], capacity: int) -> tuple[int, ...]:
    entries = tuple(entries)
    if isinstance(capacity, bool) or not isinstance(capacity, int) or capacity < 1:
        raise InvalidStateError(f"capacity must be a positive integer, got {capacity!r}")
    for page in entries:
        check_page(page)
    if len(set(entries)) != len(entries):
        raise InvalidStateError(f"state {entries} has repeated pages")
    if len(entries) > capacity:
        raise InvalidStateError(f"state {entries} exceeds capacity {capacity}")
    return entries


@dataclass(frozen=True)
class FifoQueue:
    """FIFO control state; ``entries[0]`` is the next victim."""

    entries: tuple[int, ...]
    capacity: int

    def __post_init__(self):
        object.__setattr__(self, "entries", check_state(self.entries, self.capacity))

    def __contains__(self, page):
        return page in self.entries

    def __len__(self):
        return len(self.entries)

    @property
    def full(self) -> bool:
        return len(self.entries) == self.capacity


@dataclass(frozen=True)
class SimulationResult:
    policy: Policy
    capacity: int
    fault_count: int
    fault_positions: tuple[int, ...]  # 0-based indices into the reference string
    faulted_pages: tuple[int, ...]
    final_state: tuple[int, ...]
    # state_trace[t] is the state after t references; state_trace[0] is the initial one
    state_trace: Optional[tuple[tuple[int, ...], ...]] = None


@dataclass(frozen=True)
class RatioReport:
    small_capacity: int
    large_capacity: int
    small_faults: int
    large_faults: int
    ratio: Fraction
    is_anomaly: bool


def fifo_step(state: FifoQueue, page: int):
    """One transition of the FIFO automaton.

    Returns ``(new_state, fault, evicted)``; ``evicted`` is None unless the
    queue was full and its head had to make room.
    """
    if page in state.entries:
        return state, False, None
    if len(state.entries) < state.capacity:
        return FifoQueue(state.entries + (page,), state.capacity), True, None
    head = state.entries[0]
    return FifoQueue(state.entries[1:] + (page,), state.capacity), True, head


def lru_step(state: Sequence[int], capacity: int, page: int):
    """One LRU transition on a recency list ordered least recent first."""
    state = tuple(state)
    if page in state:
        return tuple(p for p in state if p != page) + (page,), False, None
    if len(state) < capacity:
        return state + (page,), True, None
    return state[1:] + (page,), True, state[0]


def _next_use_table(refs: Sequence[int]):
    """``nxt[t]`` is the next index after ``t`` where ``refs[t]`` recurs (or None);
    ``first`` maps each page to its first index."""
    nxt: list[Optional[int]] = [None] * len(refs)
    seen: dict[int, int] = {}
    for t in range(len(refs) - 1, -1, -1):
        nxt[t] = seen.get(refs[t])
        seen[refs[t]] = t
    return nxt, seen


def _farthest(candidates) -> int:
    # candidates: (page, next occurrence or None); None means never again
    best_page, best_next = None, None
    for page, when in candidates:
        if best_page is None:
            best_page, best_next = page, when
        elif best_next is None:
            if when is None and page < best_page:
                best_page = page
        elif when is None or when > best_next:
            best_page, best_next = page, when
    return best_page


def min_victim(memory: Iterable[int], refs: Sequence[int], position: int) -> int:
    """Page of ``memory`` whose next use at or after ``position`` is farthest.

    Pages never used again tie at infinity; the smallest id among them is
    chosen.
    """
    memory = list(memory)
    if not memory:
        raise InvalidStateError("MIN needs a nonempty memory to pick a victim")
    candidates = []
    for page in memory:
        when = None
        for s in range(position, len(refs)):
            if refs[s] == page:
                when = s
                break
        candidates.append((page, when))
    return _farthest(candidates)


def simulate(policy, refs: Sequence[int], capacity: int, initial: Optional[Iterable[int]] = None,
             trace: bool = False) -> SimulationResult:
    """Run ``refs`` through ``policy`` with ``capacity`` frames.

    ``initial`` is a warm-start state, given in the same order the policy
    keeps (oldest first). Omitted means an empty memory.
    """
    policy = Policy(policy)
    refs = tuple(check_page(p) for p in refs)
    state = check_state(initial or (), capacity)

    positions, pages = [], []
    states = [state] if trace else None

    if policy is Policy.FIFO:
        queue = FifoQueue(state, capacity)
        for t, page in enumerate(refs):
            queue, fault, _ = fifo_step(queue, page)
            if fault:
                positions.append(t)
                pages.append(page)
            if trace:
                states.append(queue.entries)
        state = queue.entries
    elif policy is Policy.LRU:
        for t, page in enumerate(refs):
            state, fault, _ = lru_step(state, capacity, page)
            if fault:
                positions.append(t)
                pages.append(page)
            if trace:
                states.append(state)
    else:
        nxt, first = _next_use_table(refs)
        upcoming = {page: first.get(page) for page in state}
        order = list(state)
        for t, page in enumerate(refs):
            if page not in upcoming:
                positions.append(t)
                pages.append(page)
                if len(order) == capacity:
                    victim = _farthest(upcoming.items())
                    del upcoming[victim]
                    order.remove(victim)
                order.append(page)
            upcoming[page] = nxt[t]
            if trace:
                states.append(tuple(order))
        state = tuple(order)

    return SimulationResult(
        policy=policy,
        capacity=capacity,
        fault_count=len(positions),
        fault_positions=tuple(positions),
        faulted_pages=tuple(pages),
        final_state=state,
        state_trace=tuple(states) if trace else None,
    )


def fault_count(policy, refs: Sequence[int], capacity: int, initial=None) -> int:
    return simulate(policy, refs, capacity, initial).fault_count


def anomaly_ratio(refs: Sequence[int], m: int, M: int, policy=Policy.FIFO) -> RatioReport:
    """Exact ratio of faults with ``M`` frames to faults with ``m`` frames, cold start."""
    if not 1 <= m <= M:
        raise ValueError(f"need 1 <= m <= M, got m={m}, M={M}")
    small = fault_count(policy, refs, m)
    large = fault_count(policy, refs, M)
    if small == 0:
        raise DegenerateInputError("no faults with the small memory; ratio undefined")
    return RatioReport(m, M, small, large, Fraction(large, small), M > m and large > small)


def paging_rate_finite(policy, refs: Sequence[int], capacity: int) -> Fraction:
    if len(refs) == 0:
        raise DegenerateInputError("paging rate of an empty reference string is undefined")
    return Fraction(fault_count(policy, refs, capacity), len(refs))


def cyclic_string(n: int, cycles: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1)) * cycles


def cyclic_rate_estimate(policy, n: int, capacity: int, cycles: int) -> Fraction:
    """Fault rate over ``cycles`` passes of (1, ..., n) from an empty memory.

    Finite stand-in for the liminf paging rate of the infinite cycle.
    """
    if not 1 <= capacity < n:
        raise ValueError(f"need 1 <= capacity < n, got capacity={capacity}, n={n}")
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    return paging_rate_finite(policy, cyclic_string(n, cycles), capacity)

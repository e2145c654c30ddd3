"""Replay of the published counterexample numbers as exact checks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construct import (
    CLASSICAL_STRING, DISPROOF_PREFIX_34, DISPROOF_TARGET, anomaly_prefix, construct_for_ratio,
    cycle_block, target_state, unbounded_family,
)
from .paging import Policy, anomaly_ratio, simulate
from .residue import build_w, has_period, is_complete_residue_system, repeated_w, window_is_crs

CLASSICAL_STATES = (
    (), (1,), (1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 1), (4, 1, 2),
    (1, 2, 5), (1, 2, 5), (1, 2, 5), (2, 5, 3), (5, 3, 4), (5, 3, 4),
)


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def _pair(ratio: Fraction):
    return (ratio.numerator, ratio.denominator)


def _fifo(refs, capacity, initial=None):
    r = simulate(Policy.FIFO, refs, capacity, initial)
    return r.fault_count, r.final_state


def run_checks() -> list[Check]:
    checks = []

    def add(name, expected, compute):
        try:
            actual = compute()
        except Exception as exc:  # a broken build must report, not crash
            actual = f"error: {type(exc).__name__}: {exc}"
        checks.append(Check(name, expected, actual))

    add("classical m=3 faults/final", (9, (5, 3, 4)), lambda: _fifo(CLASSICAL_STRING, 3))
    add("classical M=4 faults/final", (10, (2, 3, 4, 5)), lambda: _fifo(CLASSICAL_STRING, 4))
    add("classical ratio", (10, 9), lambda: _pair(anomaly_ratio(CLASSICAL_STRING, 3, 4).ratio))
    add("classical m=3 control states", CLASSICAL_STATES,
        lambda: simulate(Policy.FIFO, CLASSICAL_STRING, 3, trace=True).state_trace)

    prefix = anomaly_prefix(5, 6, DISPROOF_TARGET)
    add("disproof prefix symbols", DISPROOF_PREFIX_34[:29], lambda: prefix)
    add("disproof prefix m=5", (29, DISPROOF_TARGET), lambda: _fifo(prefix, 5))
    add("disproof prefix M=6", (14, (2, 3, 4, 5, 6, 7)), lambda: _fifo(prefix, 6))
    add("printed 34-symbol prefix m=5", (29, DISPROOF_TARGET), lambda: _fifo(DISPROOF_PREFIX_34, 5))
    add("printed 34-symbol prefix M=6", (14, (2, 3, 4, 5, 6, 7)), lambda: _fifo(DISPROOF_PREFIX_34, 6))
    v = cycle_block(7)
    add("V block m=5 warm", (7, DISPROOF_TARGET), lambda: _fifo(v, 5, DISPROOF_TARGET))
    add("V block M=6 warm", (21, (2, 3, 4, 5, 6, 7)), lambda: _fifo(v, 6, (2, 3, 4, 5, 6, 7)))
    add("family n=7 k=7 ratio", (161, 78), lambda: _pair(unbounded_family(7, 7).ratio))
    add("U V^7 ratio from scratch", (161, 78), lambda: _pair(anomaly_ratio(prefix + v * 7, 5, 6).ratio))

    for n in (5, 7, 9, 11, 13):
        add(f"W({n}) residue system/windows/period", (True, True, True),
            lambda: (is_complete_residue_system(build_w(n), n),
                     all(window_is_crs(n, 4, s) for s in range(1, 3 * n + 2)),
                     has_period(repeated_w(n, 4), n)))

    for n in (5, 7, 9, 11, 13):
        t = target_state(n)
        big = tuple(range(2, n + 1))
        add(f"cycle block n={n} small", (n, t), lambda: _fifo(cycle_block(n), n - 2, t))
        add(f"cycle block n={n} large", (n * (n - 1) // 2, big), lambda: _fifo(cycle_block(n), n - 1, big))

    def ratio_target():
        result = construct_for_ratio(2)
        return result.n, result.ratio > 2

    add("ratio target L=2", (7, True), ratio_target)
    return checks

"""Searching small instance spaces for FIFO anomalies."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .paging import Policy, anomaly_ratio, simulate

# Refuse exhaustive spaces with more candidate strings than this.
MAX_ENUMERATION = 10**8


class SearchSpaceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpace:
    m: int
    M: int
    n: int
    max_len: int
    canonicalize: bool = True

    def __post_init__(self):
        if not 1 <= self.m < self.M:
            raise ValueError(f"need 1 <= m < M, got m={self.m}, M={self.M}")
        if self.n < self.M:
            raise ValueError(f"alphabet size {self.n} smaller than M={self.M}")
        if self.max_len < 1:
            raise ValueError("max_len must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    best_ratio: Fraction
    witness: tuple[int, ...]
    strings_examined: int
    exhausted: bool
    small_faults: int = 0
    large_faults: int = 0


def anomaly_feasible(m: int, M: int) -> bool:
    """Whether some reference string makes ``M`` FIFO frames fault more than ``m``.

    Holds exactly when ``M < 2m - 1`` (given at least ``M + 1`` pages).
    """
    if not 1 <= m < M:
        raise ValueError(f"need 1 <= m < M, got m={m}, M={M}")
    return M < 2 * m - 1


def count_strings(n: int, length: int, canonical: bool) -> int:
    """Number of strings of exactly ``length`` the enumeration visits."""
    if not canonical:
        return n**length
    # ways[j]: canonical strings using exactly j distinct pages
    ways = [1] + [0] * n
    for _ in range(length):
        new = [0] * (n + 1)
        for j, w in enumerate(ways):
            if w:
                new[j] += w * j
                if j < n:
                    new[j + 1] += w
        ways = new
    return sum(ways)


def space_size(space: SearchSpace) -> int:
    return sum(count_strings(space.n, L, space.canonicalize) for L in range(1, space.max_len + 1))


def _push(queue, cap, page):
    if page in queue:
        return queue, 0
    if len(queue) < cap:
        return queue + (page,), 1
    return queue[1:] + (page,), 1


def _better(large, small, best_large, best_small):
    return large * best_small > best_large * small


def exhaustive_search(space: SearchSpace, limit: Optional[int] = None) -> SearchResult:
    """Largest FIFO ratio f(M)/f(m) over every string of length 1..max_len.

    Lengths are visited shortest first and each length in lexicographic
    order, so ties go to the shortest, then lexicographically smallest,
    witness. With ``canonicalize`` only strings whose pages first appear in
    the order 1, 2, 3, ... are visited; relabeling pages never changes FIFO
    fault counts. ``limit`` caps the number of strings examined.
    """
    total = space_size(space)
    if total > MAX_ENUMERATION:
        raise SearchSpaceTooLarge(f"{total} strings exceed the enumeration guard {MAX_ENUMERATION}")

    m, M, n = space.m, space.M, space.n
    best = [0, 1, ()]  # large faults, small faults, witness
    examined = 0
    stopped = False

    def walk(length, prefix, used, small, large, fs, fl):
        nonlocal examined, stopped
        top = min(used + 1, n) if space.canonicalize else n
        for page in range(1, top + 1):
            if stopped:
                return
            s, ds = _push(small, m, page)
            l, dl = _push(large, M, page)
            prefix.append(page)
            if len(prefix) == length:
                examined += 1
                if _better(fl + dl, fs + ds, best[0], best[1]):
                    best[:] = [fl + dl, fs + ds, tuple(prefix)]
                if limit is not None and examined >= limit:
                    stopped = True
            else:
                walk(length, prefix, max(used, page), s, l, fs + ds, fl + dl)
            prefix.pop()

    for length in range(1, space.max_len + 1):
        walk(length, [], 0, (), (), 0, 0)
        if stopped:
            break

    return _validated(space, best[2], examined, not stopped or examined == total)


def _validated(space, witness, examined, exhausted):
    report = anomaly_ratio(witness, space.m, space.M, Policy.FIFO)
    return SearchResult(report.ratio, tuple(witness), examined, exhausted,
                        report.small_faults, report.large_faults)


def inclusion_check(policy, refs: Sequence[int], m: int, M: int):
    """Run both capacities side by side from cold start.

    Returns ``(holds, first_violation)``, where ``first_violation`` is the
    0-based index of the first reference after which the ``m``-frame memory
    is not a subset of the ``M``-frame one.
    """
    if not m < M:
        raise ValueError(f"need m < M, got m={m}, M={M}")
    small = simulate(policy, refs, m, trace=True).state_trace
    large = simulate(policy, refs, M, trace=True).state_trace
    for t in range(1, len(small)):
        if not set(small[t]) <= set(large[t]):
            return False, t - 1
    return True, None


def _fitness(refs, m, M):
    small = large = 0
    qs = ql = ()
    for page in refs:
        qs, ds = _push(qs, m, page)
        ql, dl = _push(ql, M, page)
        small += ds
        large += dl
    return large, small


def randomized_search(space: SearchSpace, seed: int, budget: int,
                      population: int = 40, mutation_rate: float = 0.05) -> SearchResult:
    """Genetic search for high FIFO ratios.

    Fitness is the exact ratio. The first evaluation is always the
    one-reference string ``(1,)`` (ratio 1), so the result never drops
    below the no-anomaly baseline. Reproducible for a fixed ``seed``.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = random.Random(seed)
    m, M, n, max_len = space.m, space.M, space.n, space.max_len
    evaluations = 0
    best = None

    def evaluate(refs):
        nonlocal evaluations, best
        evaluations += 1
        large, small = _fitness(refs, m, M)
        key = (large, small)
        if best is None or _better(large, small, best[0][0], best[0][1]):
            best = (key, refs)
        return key

    def fresh():
        length = rng.randint(1, max_len)
        return tuple(rng.randint(1, n) for _ in range(length))

    def mutate(refs):
        refs = list(refs)
        for i in range(len(refs)):
            if rng.random() < mutation_rate:
                refs[i] = rng.randint(1, n)
        roll = rng.random()
        if roll < 0.2 and len(refs) < max_len:
            refs.insert(rng.randint(0, len(refs)), rng.randint(1, n))
        elif roll < 0.4 and len(refs) > 1:
            del refs[rng.randrange(len(refs))]
        return tuple(refs)

    def crossover(a, b):
        i, j = rng.randint(0, len(a)), rng.randint(0, len(b))
        child = (a[:i] + b[j:])[:max_len]
        return child or a

    def pick(pool):
        contenders = rng.sample(pool, min(3, len(pool)))
        return max(contenders, key=lambda item: Fraction(item[1][0], item[1][1]))[0]

    pool = [((1,), evaluate((1,)))]
    while evaluations < budget and len(pool) < population:
        refs = fresh()
        pool.append((refs, evaluate(refs)))
    while evaluations < budget:
        if rng.random() < 0.7:
            child = crossover(pick(pool), pick(pool))
        else:
            child = pick(pool)
        child = mutate(child)
        score = evaluate(child)
        worst = min(range(len(pool)), key=lambda i: Fraction(pool[i][1][0], pool[i][1][1]))
        if Fraction(score[0], score[1]) >= Fraction(pool[worst][1][0], pool[worst][1][1]):
            pool[worst] = (child, score)

    return _validated(space, best[1], evaluations, False)

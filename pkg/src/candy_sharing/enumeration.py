"""State-space enumeration and the exhaustive verification harness."""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable, Iterator, Sequence

from .classify import (
    EQUITABLE,
    EQUIVOCAL,
    Kind,
    NotPeriodic,
    TheoremViolation,
    classify_periodic,
    monopoly,
    predict_outcome,
    predict_symmetric,
)
from .core import (
    CandyError,
    State,
    index_counts,
    is_symmetric,
    least_rotation,
    share_one,
    step_counts,
    tau_counts,
)
from .dynamics import DEFAULT_MAX_STEPS, detect_cycle

DEFAULT_BUDGET = 10**7
CHUNK_SIZE = 1024

THEOREMS = (
    "index-monotonicity",
    "tau-invariance",
    "abelian",
    "taxonomy",
    "prediction",
    "symmetric",
    "monopoly",
)


class BudgetExceeded(CandyError):
    pass


def count_states(n: int, m: int) -> int:
    """Number of weak compositions of m into n parts."""
    return math.comb(m + n - 1, n - 1)


def weak_compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of m into n parts, in colexicographic order."""
    if n < 1:
        raise CandyError(f"n must be positive, got {n}")
    c = [0] * n
    c[0] = m
    while True:
        yield tuple(c)
        i = 0
        while i < n and c[i] == 0:
            i += 1
        if i >= n - 1:
            return
        v = c[i]
        c[i] = 0
        c[0] = v - 1
        c[i + 1] += 1


def enumerate_states(
    n: int, m: int | None = None, unique: bool = False, budget: int = DEFAULT_BUDGET
) -> Iterator[State]:
    """Stream every state with n children and m candies (m defaults to n).

    With ``unique`` only the least rotation of each necklace is produced.
    """
    if m is None:
        m = n
    if n < 1 or m < 0:
        raise CandyError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    total = count_states(n, m)
    if total > budget:
        raise BudgetExceeded(f"{total} states for n={n}, m={m} exceeds budget {budget}")
    for c in weak_compositions(n, m):
        if unique:
            k = least_rotation(c)
            if c[k:] + c[:k] != c:
                continue
        yield State(c)


def random_states(n: int, m: int | None, count: int, seed: int) -> list[State]:
    """``count`` uniformly drawn weak compositions (stars and bars), reproducible."""
    if m is None:
        m = n
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        bars = sorted(rng.sample(range(m + n - 1), n - 1))
        edges = [-1, *bars, m + n - 1]
        out.append(State(tuple(edges[i + 1] - edges[i] - 1 for i in range(n))))
    return out


# -- checkers ----------------------------------------------------------------
#
# Each checker takes a raw count tuple and returns a list of failures, each a
# dict with "state", "expected", "observed". An empty list means the claim held.


def _fail(c, expected, observed) -> dict:
    return {"state": list(c), "expected": expected, "observed": observed}


def check_index_monotonicity(c: tuple[int, ...]) -> list[dict]:
    out = []
    before = index_counts(c)
    after = index_counts(step_counts(c))
    if after > before:
        out.append(_fail(c, f"index(f(S)) <= {before}", after))
    if max(c) >= 3 and after >= before:
        out.append(_fail(c, f"index(f(S)) < {before} since max >= 3", after))
    s = State(c)
    for i, ci in enumerate(c, 1):
        if ci < 2:
            continue
        shared = index_counts(share_one(s, i).counts)
        if shared > before:
            out.append(_fail(c, f"index after child {i} shares <= {before}", shared))
        elif (shared == before) != (ci == 2):
            out.append(
                _fail(c, f"index unchanged iff child {i} holds 2 (holds {ci})", shared)
            )
    return out


def check_tau_invariance(c: tuple[int, ...]) -> list[dict]:
    out = []
    t = tau_counts(c)
    after = tau_counts(step_counts(c))
    if after != t:
        out.append(_fail(c, t, after))
    for k in range(1, len(c)):
        r = tau_counts(c[k:] + c[:k])
        if r != t:
            out.append(_fail(c, t, f"rotation {k}: {r}"))
    s = State(c)
    for i, ci in enumerate(c, 1):
        if ci >= 2:
            r = tau_counts(share_one(s, i).counts)
            if r != t:
                out.append(_fail(c, t, f"child {i} shares: {r}"))
    return out


ABELIAN_ORDERS = 3
ABELIAN_SEED = 2024


def check_abelian(c: tuple[int, ...]) -> list[dict]:
    target = step_counts(c)
    sharers = [i for i, ci in enumerate(c, 1) if ci >= 2]
    # seeded from the state itself so the draw is independent of chunking
    rng = random.Random(f"{ABELIAN_SEED}:{c}")
    out = []
    for _ in range(ABELIAN_ORDERS):
        order = sharers[:]
        rng.shuffle(order)
        s = State(c)
        for i in order:
            s = share_one(s, i)
        if s.counts != target:
            out.append(_fail(c, list(target), f"order {order}: {list(s.counts)}"))
    return out


def check_taxonomy(c: tuple[int, ...]) -> list[dict]:
    out = []
    traj = detect_cycle(State(c), DEFAULT_MAX_STEPS)
    periodic = traj.transient_length == 0
    try:
        classify_periodic(State(c))
        classified = True
    except NotPeriodic:
        classified = False
    if classified != periodic:
        out.append(_fail(c, f"classifies={periodic}", f"classifies={classified}"))
    n = len(c)
    cycle_index = index_counts(traj.cycle[0].counts)
    for t in traj.cycle:
        try:
            cls = classify_periodic(t)
        except NotPeriodic as exc:
            out.append(_fail(c, "cycle state classifies", f"{t}: {exc}"))
            continue
        if cls.kind in (Kind.CLOCKWISE, Kind.ANTICLOCKWISE) and n % traj.period:
            out.append(_fail(c, f"period divides {n}", traj.period))
        if max(t.counts) > 2:
            out.append(_fail(c, "cycle entries <= 2", list(t.counts)))
        if index_counts(t.counts) != cycle_index:
            out.append(_fail(c, f"index {cycle_index} along cycle", list(t.counts)))
    return out


def check_prediction(c: tuple[int, ...]) -> list[dict]:
    s = State(c)
    report = predict_outcome(s)
    traj = detect_cycle(s, DEFAULT_MAX_STEPS)
    out = []
    observed = classify_periodic(traj.cycle[0])
    if observed != report.predicted:
        out.append(_fail(c, report.predicted.to_json(), observed.to_json()))
    for t in traj.cycle:
        if tau_counts(t.counts) != report.tau:
            out.append(_fail(c, f"tau {report.tau} on cycle", list(t.counts)))
    return out


def check_symmetric(c: tuple[int, ...]) -> list[dict]:
    s = State(c)
    report = predict_symmetric(s)
    observed = classify_periodic(detect_cycle(s, DEFAULT_MAX_STEPS).cycle[0])
    allowed = (EQUITABLE,) if s.n % 2 else (EQUITABLE, EQUIVOCAL)
    out = []
    if observed not in allowed or observed != report.predicted:
        out.append(_fail(c, report.predicted.to_json(), observed.to_json()))
    return out


def check_monopoly(c: tuple[int, ...]) -> list[dict]:
    n = len(c)
    cycle = {t.counts for t in detect_cycle(State(c), DEFAULT_MAX_STEPS).cycle}
    if n % 2:
        expected = {(1,) * n}
    else:
        expected = {(0, 2) * (n // 2), (2, 0) * (n // 2)}
    if cycle != expected:
        return [_fail(c, sorted(map(list, expected)), sorted(map(list, cycle)))]
    return []


CHECKERS: dict[str, Callable[[tuple[int, ...]], list[dict]]] = {
    "index-monotonicity": check_index_monotonicity,
    "tau-invariance": check_tau_invariance,
    "abelian": check_abelian,
    "taxonomy": check_taxonomy,
    "prediction": check_prediction,
    "symmetric": check_symmetric,
    "monopoly": check_monopoly,
}


# -- harness -----------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem: str
    n: list[int]
    states_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    # per ring size: (states checked, failures)
    by_n: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "n": list(self.n),
            "states_checked": self.states_checked,
            "failures": self.failures,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def csv_rows(self) -> list[dict]:
        return [
            {"theorem": self.theorem, "n": n, "states_checked": k, "failures": f}
            for n, (k, f) in sorted(self.by_n.items())
        ]


def run_checker(theorem: str, chunk: Sequence[tuple[int, ...]]) -> list[dict]:
    """Check one chunk of states; exceptions become failure entries."""
    check = CHECKERS[theorem]
    out = []
    for c in chunk:
        try:
            out.extend(check(c))
        except (CandyError, TheoremViolation) as exc:
            out.append(_fail(c, "no error", f"{type(exc).__name__}: {exc}"))
    return out


def _states_for(theorem: str, n: int, budget: int) -> Iterator[tuple[int, ...]]:
    if theorem == "monopoly":
        yield monopoly(n).counts
        return
    for s in enumerate_states(n, n, budget=budget):
        if theorem == "symmetric" and not is_symmetric(s):
            continue
        yield s.counts


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def check_states(
    theorem: str,
    states: Iterable[State | tuple[int, ...]],
    jobs: int = 1,
    label: Sequence[int] = (),
) -> VerificationReport:
    """Run a theorem's checker over an explicit collection of states."""
    if theorem not in CHECKERS:
        raise CandyError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    start = time.perf_counter()
    report = VerificationReport(theorem, list(label))
    by_n: dict[int, list[int]] = {}

    def tracked(it):
        for s in it:
            c = s.counts if isinstance(s, State) else tuple(s)
            entry = by_n.setdefault(len(c), [0, 0])
            entry[0] += 1
            yield c

    chunks = _chunks(tracked(states), CHUNK_SIZE)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map yields in submission order, so the merge is schedule-independent
            results = list(pool.map(run_checker, _repeat(theorem), chunks))
    else:
        results = [run_checker(theorem, chunk) for chunk in chunks]
    for failures in results:
        for f in failures:
            by_n[len(f["state"])][1] += 1
        report.failures.extend(failures)
    report.states_checked = sum(k for k, _ in by_n.values())
    report.by_n = {n: (k, f) for n, (k, f) in by_n.items()}
    report.elapsed = time.perf_counter() - start
    return report


def _repeat(x):
    while True:
        yield x


def verify(
    theorem: str,
    ns: Iterable[int],
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Check ``theorem`` on every relevant balanced state for each ring size."""
    if theorem not in CHECKERS:
        raise CandyError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if jobs < 1:
        raise CandyError(f"jobs must be >= 1, got {jobs}")
    ns = sorted(set(ns))
    if not ns or ns[0] < 1:
        raise CandyError(f"ring sizes must be positive, got {ns}")
    if theorem != "monopoly":
        for n in ns:
            total = count_states(n, n)
            if total > budget:
                raise BudgetExceeded(
                    f"n={n} has {total} balanced states, over the budget of {budget}"
                )

    def stream():
        for n in ns:
            yield from _states_for(theorem, n, budget)

    report = check_states(theorem, stream(), jobs=jobs, label=ns)
    for n in ns:
        report.by_n.setdefault(n, (0, 0))
    return report

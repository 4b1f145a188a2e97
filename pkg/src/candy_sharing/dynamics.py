"""Orbit iteration with exact transient/period detection."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CandyError, State, as_state, step_counts

DEFAULT_MAX_STEPS = 1_000_000


class CycleNotFound(CandyError):
    pass


@dataclass(frozen=True)
class Trajectory:
    initial: State
    transient_length: int
    period: int
    cycle: tuple[State, ...]
    # every state visited before the first repeat (transient then one lap of
    # the cycle); only kept when asked for
    steps: tuple[State, ...] | None = field(default=None, compare=False)

    @property
    def final(self) -> State:
        return self.cycle[0]

    def to_json(self) -> dict:
        return {
            "initial": list(self.initial.counts),
            "transient_length": self.transient_length,
            "period": self.period,
            "cycle": [list(s.counts) for s in self.cycle],
        }


def detect_cycle(
    s: State, max_steps: int = DEFAULT_MAX_STEPS, keep_steps: bool = False
) -> Trajectory:
    """Iterate the sharing map from ``s`` until a state repeats.

    Every visited state is stored with the step at which it was first seen,
    so the transient length and the minimal period come out exactly.
    """
    if max_steps < 1:
        raise CandyError(f"max_steps must be positive, got {max_steps}")
    s = as_state(s)
    seen: dict[tuple[int, ...], int] = {}
    order: list[tuple[int, ...]] = []
    c = s.counts
    for t in range(max_steps + 1):
        first = seen.get(c)
        if first is not None:
            cycle = tuple(State(x) for x in order[first:])
            steps = tuple(State(x) for x in order) if keep_steps else None
            return Trajectory(s, first, t - first, cycle, steps)
        seen[c] = t
        order.append(c)
        c = step_counts(c)
    raise CycleNotFound(f"no repeated state within {max_steps} steps from {s}")


def is_periodic(s: State, max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    return detect_cycle(s, max_steps).transient_length == 0


def orbit(s: State, steps: int) -> list[State]:
    """The first ``steps + 1`` states of the orbit, starting with ``s``."""
    out = [as_state(s)]
    c = out[0].counts
    for _ in range(steps):
        c = step_counts(c)
        out.append(State(c))
    return out

"""Periodic-state taxonomy and outcome prediction for the balanced game.

Every periodic state of the balanced game (m == n) is, up to rotation, one of

* the fixed state 1,1,...,1 (equitable),
* a concatenation of P=(0,2) and I=(1) blocks with at least one I
  (a wave travelling clockwise),
* the same with Pbar=(2,0) blocks (travelling anti-clockwise),
* the alternation 0,2,0,2,... for even n (equivocal, period 2).

Which one an orbit ends in is decided by ``tau`` alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import CandyError, State, as_state, is_symmetric, tau


class NotBalanced(CandyError):
    pass


class NotPeriodic(CandyError):
    pass


class NotSymmetric(CandyError):
    pass


class TheoremViolation(Exception):
    """A proven claim failed on a concrete state. Should never be raised."""


class Kind(enum.Enum):
    EQUITABLE = "equitable"
    CLOCKWISE = "clockwise"
    ANTICLOCKWISE = "anticlockwise"
    EQUIVOCAL = "equivocal"


@dataclass(frozen=True)
class PeriodicClass:
    kind: Kind
    p_count: int | None = None

    def __post_init__(self):
        biased = self.kind in (Kind.CLOCKWISE, Kind.ANTICLOCKWISE)
        if biased and (self.p_count is None or self.p_count < 1):
            raise ValueError(f"{self.kind.value} class needs a positive p_count")
        if not biased and self.p_count is not None:
            raise ValueError(f"{self.kind.value} class carries no p_count")

    def to_json(self) -> dict:
        out = {"class": self.kind.value}
        if self.p_count is not None:
            out["p_count"] = self.p_count
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PeriodicClass":
        return cls(Kind(obj["class"]), obj.get("p_count"))

    def __str__(self):
        if self.p_count is None:
            return self.kind.value
        return f"{self.kind.value}({self.p_count})"


EQUITABLE = PeriodicClass(Kind.EQUITABLE)
EQUIVOCAL = PeriodicClass(Kind.EQUIVOCAL)


def clockwise(p_count: int) -> PeriodicClass:
    return PeriodicClass(Kind.CLOCKWISE, p_count)


def anticlockwise(p_count: int) -> PeriodicClass:
    return PeriodicClass(Kind.ANTICLOCKWISE, p_count)


@dataclass(frozen=True)
class OutcomeReport:
    tau: int
    predicted: PeriodicClass

    def to_json(self) -> dict:
        return {"tau": self.tau, "predicted": self.predicted.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "OutcomeReport":
        return cls(obj["tau"], PeriodicClass.from_json(obj["predicted"]))


def _require_balanced(s: State):
    if not s.balanced:
        raise NotBalanced(f"state {s} holds {s.total} candies for {s.n} children")


def _tile(c: tuple[int, ...], lead: int) -> int | None:
    """Number of two-cell blocks if ``c`` splits into (lead, 2-lead) blocks and 1s."""
    n = len(c)
    follow = 2 - lead
    i = blocks = 0
    while i < n:
        if c[i] == 1:
            i += 1
        elif c[i] == lead and i + 1 < n and c[i + 1] == follow:
            i += 2
            blocks += 1
        else:
            return None
    return blocks


def _tile_any_rotation(c: tuple[int, ...], lead: int) -> int | None:
    for k in range(len(c)):
        blocks = _tile(c[k:] + c[:k], lead)
        if blocks is not None:
            return blocks
    return None


def classify_periodic(t: State) -> PeriodicClass:
    """Name the family a periodic balanced state belongs to.

    The structure is checked directly rather than taken on trust, so a state
    that is not periodic raises NotPeriodic.
    """
    t = as_state(t)
    _require_balanced(t)
    c = t.counts
    n = len(c)
    if all(x == 1 for x in c):
        return EQUITABLE
    if max(c) > 2:
        raise NotPeriodic(f"{t} has an entry above 2")
    if 1 not in c:
        # only 0s and 2s left; they must alternate all the way round
        if n % 2 == 0 and all(c[i] != c[i - 1] for i in range(n)):
            return EQUIVOCAL
        raise NotPeriodic(f"{t} has no 1s but is not the 0,2 alternation")
    cw = _tile_any_rotation(c, 0)
    acw = _tile_any_rotation(c, 2)
    if cw is not None and acw is not None:
        raise TheoremViolation(f"{t} tiles with both P and Pbar blocks")
    if cw is not None:
        return clockwise(cw)
    if acw is not None:
        return anticlockwise(acw)
    raise NotPeriodic(f"{t} does not split into P/I or Pbar/I blocks")


def class_from_tau(value: int, n: int) -> PeriodicClass:
    if value == 0:
        return EQUITABLE
    if 2 * value < n:
        return clockwise(value)
    if 2 * value == n:
        return EQUIVOCAL
    return anticlockwise(n - value)


def predict_outcome(s: State) -> OutcomeReport:
    """Long-run class of the orbit of ``s``, read off from tau without simulating."""
    s = as_state(s)
    _require_balanced(s)
    value = tau(s)
    return OutcomeReport(value, class_from_tau(value, s.n))


def predict_symmetric(s: State) -> OutcomeReport:
    """predict_outcome for mirror-symmetric states, checking they end equitable
    (odd n) or equitable/equivocal (even n)."""
    s = as_state(s)
    _require_balanced(s)
    if not is_symmetric(s):
        raise NotSymmetric(f"{s} has no mirror axis")
    report = predict_outcome(s)
    allowed = {0} if s.n % 2 else {0, s.n // 2}
    if report.tau not in allowed:
        raise TheoremViolation(
            f"symmetric state {s} has tau={report.tau}, expected one of {sorted(allowed)}"
        )
    return report


def monopoly(n: int) -> State:
    if n < 1:
        raise CandyError(f"n must be positive, got {n}")
    return State((n,) + (0,) * (n - 1))

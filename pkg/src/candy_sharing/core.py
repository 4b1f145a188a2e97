"""Ring states of the candy-sharing game and the functions defined on them.

Children sit in a ring, numbered clockwise 1..n. A state is the tuple of
candy counts. On each whistle every child holding at least two candies hands
one to each neighbour, all at once. Indices in the public API are 1-based to
match that numbering; internally everything is a plain 0-based tuple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from operator import mul
from typing import Iterable, Sequence


class CandyError(ValueError):
    """Base class for domain errors (bad input, violated preconditions)."""


class ParseError(CandyError):
    pass


class PreconditionError(CandyError):
    pass


@dataclass(frozen=True, slots=True)
class State:
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        if not counts:
            raise CandyError("a state needs at least one child")
        if not all(type(c) is int for c in counts) or min(counts) < 0:
            for pos, c in enumerate(counts, 1):
                if type(c) is not int:
                    raise CandyError(f"count at position {pos} is not an integer: {c!r}")
                if c < 0:
                    raise CandyError(f"count at position {pos} is negative: {c}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, *counts: int) -> "State":
        return cls(tuple(counts))

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def balanced(self) -> bool:
        return self.total == self.n

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __str__(self):
        return format_state(self)

    def __repr__(self):
        return f"State({format_state(self)})"


class Block(enum.Enum):
    """The three building blocks of periodic states."""

    P = (0, 2)
    PBAR = (2, 0)
    I = (1,)  # noqa: E741


def concat(*parts: Block | tuple[Block, int] | Sequence[int]) -> State:
    """Concatenate blocks into a state.

    Each part is a Block, a ``(Block, exponent)`` pair, or a raw count
    sequence. ``concat((Block.P, 1), (Block.I, 3))`` is the wave (0,2,1,1,1).
    """
    out: list[int] = []
    for part in parts:
        if isinstance(part, Block):
            out.extend(part.value)
        elif isinstance(part, tuple) and len(part) == 2 and isinstance(part[0], Block):
            block, k = part
            out.extend(block.value * k)
        else:
            out.extend(part)
    return State(tuple(out))


def parse_state(text: str) -> State:
    """Parse ``"0,2,1,1"`` into a State. Whitespace around tokens is ignored."""
    if text is None or not text.strip():
        raise ParseError("empty state: expected comma-separated nonnegative integers")
    counts = []
    for pos, raw in enumerate(text.split(","), 1):
        token = raw.strip()
        if not token:
            raise ParseError(f"empty token at position {pos}")
        try:
            value = int(token, 10)
        except ValueError:
            raise ParseError(f"non-numeric token {token!r} at position {pos}") from None
        if value < 0:
            raise ParseError(f"negative token {token!r} at position {pos}")
        counts.append(value)
    return State(tuple(counts))


def format_state(s: State | Sequence[int]) -> str:
    return ",".join(str(c) for c in s)


def as_state(s: State | Iterable[int]) -> State:
    return s if isinstance(s, State) else State(tuple(s))


# -- dynamics primitives -----------------------------------------------------


def step_counts(c: tuple[int, ...]) -> tuple[int, ...]:
    """One synchronous sharing round on a raw tuple (hot path, no validation)."""
    n = len(c)
    if n == 1:
        return c
    out = list(c)
    for i, ci in enumerate(c):
        if ci >= 2:
            out[i] -= 2
            # for n == 2 both neighbours are the same child, which then gets 2
            out[i - 1] += 1
            out[(i + 1) % n] += 1
    return tuple(out)


def step(s: State) -> State:
    """Apply the parallel sharing map f."""
    return State(step_counts(s.counts))


def share_one(s: State, child: int) -> State:
    """Let a single child (1-based) share, everyone else holding still."""
    n = s.n
    if not 1 <= child <= n:
        raise PreconditionError(f"child {child} out of range 1..{n}")
    i = child - 1
    if s.counts[i] < 2:
        raise PreconditionError(
            f"child {child} holds {s.counts[i]} candies; sharing needs at least 2"
        )
    out = list(s.counts)
    out[i] -= 2
    out[i - 1] += 1
    out[(i + 1) % n] += 1
    return State(tuple(out))


# -- index -------------------------------------------------------------------


def deficiency(s: State, start: int, length: int) -> int:
    """max(0, length - sum) of the cyclic substring starting at child ``start``."""
    n = s.n
    if not 1 <= length <= n:
        raise PreconditionError(f"length {length} out of range 1..{n}")
    c = s.counts
    total = sum(c[(start - 1 + j) % n] for j in range(length))
    return max(0, length - total)


def index_counts(c: Sequence[int]) -> int:
    n = len(c)
    # prefix sums over two laps so every cyclic window is a difference
    prefix = [0] * (2 * n + 1)
    for j in range(2 * n):
        prefix[j + 1] = prefix[j] + c[j % n]
    total = 0
    for k in range(1, n + 1):
        for i in range(n):
            d = k - (prefix[i + k] - prefix[i])
            if d > 0:
                total += d
    return total


def index(s: State) -> int:
    """Sum of deficiencies over every cyclic substring.

    All n starting positions are counted at every length 1..n, the full
    length included. For balanced states the full-length layer is zero.
    """
    return index_counts(s.counts)


# -- tau ---------------------------------------------------------------------


def tau_counts(c: Sequence[int]) -> int:
    n = len(c)
    offset = n // 2 if n % 2 == 0 else 0
    return (offset + sum(map(mul, range(1, n + 1), c))) % n


def tau(s: State) -> int:
    """Position-weighted candy sum plus a parity offset, modulo n.

    Conserved by sharing and by rotation when the state is balanced.
    """
    return tau_counts(s.counts)


# -- symmetries --------------------------------------------------------------


def rotate(s: State, k: int = 1) -> State:
    """Shift left k places; k=1 takes (a1, a2, ..., an) to (a2, ..., an, a1)."""
    k %= s.n
    c = s.counts
    return State(c[k:] + c[:k])


def reflect(s: State) -> State:
    return State(s.counts[::-1])


def least_rotation(c: Sequence[int]) -> int:
    """Booth's algorithm: offset of the lexicographically least rotation."""
    n = len(c)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        cj = c[j % n]
        i = f[j - k - 1]
        while i != -1 and cj != c[(k + i + 1) % n]:
            if cj < c[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if i == -1 and cj != c[(k + i + 1) % n]:
            if cj < c[(k + i + 1) % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def canonical_rotation(s: State) -> State:
    return rotate(s, least_rotation(s.counts))


def is_symmetric(s: State) -> bool:
    """True if the ring has a mirror axis (through a child or between two)."""
    c = s.counts
    r = c[::-1]
    n = len(c)
    return any(r[k:] + r[:k] == c for k in range(n))


def fixed_state(n: int) -> State:
    return State((1,) * n)

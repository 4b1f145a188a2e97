"""Slow, obviously-correct reference implementations used only by the tests.

None of these share code with the package: they work from the definitions
directly, by slicing, brute force and exhaustive search.
"""

from itertools import product


def step_by_transfers(c):
    """Sharing round written as an explicit list of (giver, receiver) moves."""
    n = len(c)
    moves = []
    for i in range(n):
        if c[i] >= 2:
            moves.append((i, (i - 1) % n))
            moves.append((i, (i + 1) % n))
    out = list(c)
    for giver, receiver in moves:
        out[giver] -= 1
        out[receiver] += 1
    return tuple(out)


def cyclic_substring(c, start, length):
    doubled = list(c) + list(c)
    return doubled[start : start + length]


def index_brute(c):
    n = len(c)
    total = 0
    for start in range(n):
        for length in range(1, n + 1):
            sub = cyclic_substring(c, start, length)
            if sum(sub) <= length:
                total += length - sum(sub)
    return total


def tau_brute(c):
    n = len(c)
    offset = n * ((-1) ** n + 1) // 4
    return (offset + sum((i + 1) * c[i] for i in range(n))) % n


def least_rotation_brute(c):
    c = tuple(c)
    return min(c[k:] + c[:k] for k in range(len(c)))


def has_mirror_axis(c):
    """Some reflection i -> (a - i) mod n of the positions fixes the string."""
    n = len(c)
    return any(all(c[i] == c[(a - i) % n] for i in range(n)) for a in range(n))


def transient_and_period(c, limit=10_000):
    """Smallest t, p with f^t(c) == f^(t+p)(c), by comparing the whole orbit."""
    orbit = [tuple(c)]
    for _ in range(limit):
        orbit.append(step_by_transfers(orbit[-1]))
    for t in range(len(orbit)):
        for p in range(1, len(orbit) - t):
            if orbit[t] == orbit[t + p]:
                return t, p, orbit[t : t + p]
    raise AssertionError("orbit did not close")


def compositions_brute(n, m):
    return {c for c in product(range(m + 1), repeat=n) if sum(c) == m}

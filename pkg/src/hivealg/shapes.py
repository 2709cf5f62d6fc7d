"""Partitions (non-negative dominant integer sequences) and skew shapes.

Partitions are plain tuples of ints.  Trailing zeros are meaningless:
(2, 1) and (2, 1, 0) label the same Young diagram, so everything here
normalizes on input and compares after zero-padding.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

Parts = tuple[int, ...]


def is_dominant(parts: Iterable[int]) -> bool:
    """True iff the sequence is weakly decreasing with all entries >= 0."""
    seq = tuple(parts)
    if any(p < 0 for p in seq):
        return False
    return all(a >= b for a, b in zip(seq, seq[1:]))


def normalize(parts: Iterable[int]) -> Parts:
    """Strip trailing zeros."""
    seq = tuple(parts)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def pad(parts: Iterable[int], length: int) -> Parts:
    """Zero-pad to the given length; reject nonzero parts beyond it."""
    seq = tuple(parts)
    if any(seq[length:]):
        raise ValueError(f"{seq} has more than {length} nonzero parts")
    return (seq + (0,) * length)[:length]


def size(parts: Iterable[int]) -> int:
    """Number of boxes |kappa|."""
    return sum(parts)


def contains(outer: Iterable[int], inner: Iterable[int]) -> bool:
    """Diagram containment: inner_i <= outer_i for all i."""
    a, b = tuple(outer), tuple(inner)
    length = max(len(a), len(b))
    return all(x >= y for x, y in zip(pad(a, length), pad(b, length)))


class SkewShape(NamedTuple):
    outer: Parts
    inner: Parts


def skew_shape(outer: Iterable[int], inner: Iterable[int]) -> SkewShape:
    """Validated skew shape outer/inner."""
    out, inn = normalize(outer), normalize(inner)
    if not is_dominant(out) or not is_dominant(inn):
        raise ValueError(f"{out}/{inn}: both shapes must be partitions")
    if not contains(out, inn):
        raise ValueError(f"{out}/{inn}: inner shape not contained in outer")
    return SkewShape(out, inn)


@lru_cache(maxsize=None)
def partitions_of(d: int, max_parts: int) -> tuple[Parts, ...]:
    """All partitions of d with at most max_parts parts, lexicographically
    decreasing."""
    if d < 0 or max_parts < 0:
        return ()
    found: list[Parts] = []

    def grow(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            found.append(tuple(prefix))
            return
        if len(prefix) == max_parts:
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            grow(remaining - part, part, prefix)
            prefix.pop()

    grow(d, d, [])
    return tuple(found)


def partitions_up_to(d: int, max_parts: int) -> list[Parts]:
    """All partitions with |kappa| <= d and at most max_parts parts, graded
    by size and lexicographically decreasing within each grade."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if max_parts < 1:
        raise ValueError("max_parts must be >= 1")
    return [p for k in range(d + 1) for p in partitions_of(k, max_parts)]

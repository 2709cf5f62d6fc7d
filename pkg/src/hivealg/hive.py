"""Hives: triangular integer arrays with rhombus and boundary constraints.

A hive of rank n is a triangular array h[i][j], 1 <= j <= i <= n+1, with
h[1][1] = 0, all three families of rhombus inequalities satisfied, and a
non-negative dominant boundary.  Hives form a monoid under entrywise
addition; the bottom-right corner h[n+1][n+1] grades it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .shapes import Parts, is_dominant

Rows = tuple[tuple[int, ...], ...]

# One inequality sum(coeff * h[pos]) >= 0, positions 1-based (row, col).
Inequality = tuple[tuple[tuple[int, int], int], ...]


class Violation(NamedTuple):
    kind: str  # "apex", "rhombus1/2/3", "lambda", "mu", "nu"
    i: int
    j: int
    detail: str


class MalformedArrayError(ValueError):
    """Entry count or row lengths do not form a triangular array."""


class InvalidHiveError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        head = "; ".join(v.detail for v in violations[:3])
        extra = f" (+{len(violations) - 3} more)" if len(violations) > 3 else ""
        super().__init__(f"not a valid hive: {head}{extra}")


class Boundary(NamedTuple):
    """Edge increments (lam, mu, nu), each a length-n integer vector."""

    lam: Parts
    mu: Parts
    nu: Parts


def triangle_size(n: int) -> int:
    return (n + 1) * (n + 2) // 2


def flat_index(i: int, j: int) -> int:
    """Row-major position of h[i][j] in the flat coordinate vector."""
    return i * (i - 1) // 2 + (j - 1)


def rank_for_length(count: int) -> int:
    """Rank n with (n+1)(n+2)/2 == count, or raise."""
    n = 1
    while triangle_size(n) < count:
        n += 1
    if triangle_size(n) != count:
        raise MalformedArrayError(f"{count} entries do not fill a triangle of rank >= 1")
    return n


@lru_cache(maxsize=None)
def rhombus_inequalities(n: int) -> tuple[tuple[int, int, int, Inequality], ...]:
    """All rhombus inequalities for rank n as (family, i, j, terms).

    Families 1..3 are the three orientations of a unit rhombus; each asserts
    obtuse-corner sum >= acute-corner sum, encoded as sum(coeff*entry) >= 0.
    """
    out = []
    for i in range(2, n + 1):
        for j in range(1, i):
            out.append((1, i, j, (((i, j), 1), ((i + 1, j + 1), 1),
                                  ((i + 1, j), -1), ((i, j + 1), -1))))
    for i in range(2, n + 1):
        for j in range(1, i):
            out.append((2, i, j, (((i, j), 1), ((i, j + 1), 1),
                                  ((i + 1, j + 1), -1), ((i - 1, j), -1))))
    for i in range(2, n + 1):
        for j in range(2, i + 1):
            out.append((3, i, j, (((i + 1, j), 1), ((i, j), 1),
                                  ((i + 1, j + 1), -1), ((i, j - 1), -1))))
    return tuple(out)


def _check_shape(rows: Iterable[Iterable[int]]) -> Rows:
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if not rows:
        raise MalformedArrayError("empty array")
    for i, row in enumerate(rows, start=1):
        if len(row) != i:
            raise MalformedArrayError(f"row {i} has {len(row)} entries, expected {i}")
    if len(rows) < 2:
        raise MalformedArrayError("rank must be at least 1 (need 2 rows)")
    return rows


def _edges(rows: Rows) -> Boundary:
    n = len(rows) - 1
    lam = tuple(rows[i + 1][i + 1] - rows[i][i] for i in range(n))
    mu = tuple(rows[i + 1][0] - rows[i][0] for i in range(n))
    nu = tuple(rows[n][j + 1] - rows[n][j] for j in range(n))
    return Boundary(lam, mu, nu)


def hive_violations(rows: Iterable[Iterable[int]]) -> list[Violation]:
    """Every violated hive condition, as (kind, i, j, message).

    Raises MalformedArrayError when the entries do not even form a triangle;
    constraint violations are reported, not raised.
    """
    rows = _check_shape(rows)
    n = len(rows) - 1
    found: list[Violation] = []
    if rows[0][0] != 0:
        found.append(Violation("apex", 1, 1, f"h[1][1] = {rows[0][0]}, expected 0"))
    for fam, i, j, terms in rhombus_inequalities(n):
        value = sum(c * rows[p - 1][q - 1] for (p, q), c in terms)
        if value < 0:
            found.append(Violation(f"rhombus{fam}", i, j,
                                   f"rhombus family {fam} fails at (i,j)=({i},{j}) by {-value}"))
    boundary = _edges(rows)
    for kind, edge in zip(("lambda", "mu", "nu"), boundary):
        if not is_dominant(edge):
            found.append(Violation(kind, 0, 0, f"boundary {kind} = {edge} is not dominant"))
    return found


@dataclass(frozen=True)
class Hive:
    """A validated hive.  Construct through from_rows/from_flat; direct
    construction skips validation and is reserved for internal fast paths."""

    n: int
    rows: Rows

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Hive":
        rows = _check_shape(rows)
        bad = hive_violations(rows)
        if bad:
            raise InvalidHiveError(bad)
        return cls(len(rows) - 1, rows)

    @classmethod
    def from_flat(cls, coords: Iterable[int]) -> "Hive":
        coords = tuple(int(v) for v in coords)
        n = rank_for_length(len(coords))
        rows = tuple(tuple(coords[flat_index(i, 1):flat_index(i, i) + 1])
                     for i in range(1, n + 2))
        return cls.from_rows(rows)

    @classmethod
    def zero(cls, n: int) -> "Hive":
        if n < 1:
            raise ValueError("rank must be >= 1")
        return cls(n, tuple((0,) * i for i in range(1, n + 2)))

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def to_flat(self) -> Parts:
        return tuple(v for row in self.rows for v in row)

    @property
    def degree(self) -> int:
        """Grading value h[n+1][n+1] = |lambda| = |mu| + |nu|."""
        return self.rows[-1][-1]

    def boundary(self) -> Boundary:
        return _edges(self.rows)

    def __add__(self, other: "Hive") -> "Hive":
        if not isinstance(other, Hive):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} != {other.n}")
        rows = tuple(tuple(a + b for a, b in zip(ra, rb))
                     for ra, rb in zip(self.rows, other.rows))
        # closed under addition: both summands satisfy every linear condition
        return Hive(self.n, rows)

    def __str__(self) -> str:
        return "; ".join(" ".join(str(v) for v in row) for row in self.rows)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Hive":
        hive = cls.from_rows(obj["rows"])
        if "n" in obj and obj["n"] != hive.n:
            raise ValueError(f"declared rank {obj['n']} does not match rows (rank {hive.n})")
        return hive


def difference(a: Hive, b: Hive) -> Hive | None:
    """a - b as a hive, or None when the difference leaves the cone."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} != {b.n}")
    rows = tuple(tuple(x - y for x, y in zip(ra, rb))
                 for ra, rb in zip(a.rows, b.rows))
    if hive_violations(rows):
        return None
    return Hive(a.n, rows)

"""Exact sparse polynomials in the 2n^2 matrix entries x[i][j], y[i][j].

Variables are ordered row-major across the combined n x 2n matrix: row 1's
x entries (by column), then row 1's y entries, then row 2, and so on.  The
term order is pure lexicographic in that variable order; under it the
leading term of any minor on increasing row and column sets is its main
diagonal, with coefficient +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, NamedTuple

Exponents = tuple[int, ...]


def variable_count(n: int) -> int:
    return 2 * n * n


def variable_index(n: int, kind: str, i: int, j: int) -> int:
    """Position of x[i][j] or y[i][j] in the significance order (0 = most
    significant)."""
    if kind not in ("x", "y") or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"no variable {kind}[{i}][{j}] for rank {n}")
    return (i - 1) * 2 * n + (0 if kind == "x" else n) + (j - 1)


@lru_cache(maxsize=None)
def variable_labels(n: int) -> tuple[tuple[str, int, int], ...]:
    """(kind, i, j) for each variable index."""
    out = []
    for i in range(1, n + 1):
        out.extend(("x", i, j) for j in range(1, n + 1))
        out.extend(("y", i, j) for j in range(1, n + 1))
    return tuple(out)


class Weight(NamedTuple):
    """Torus weight triple: row degrees, x-column degrees, y-column degrees."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    nu: tuple[int, ...]


class NotHomogeneousError(ValueError):
    pass


def _term_weight(n: int, exps: Exponents) -> Weight:
    lam, mu, nu = [0] * n, [0] * n, [0] * n
    for idx, e in enumerate(exps):
        if not e:
            continue
        kind, i, j = variable_labels(n)[idx]
        lam[i - 1] += e
        (mu if kind == "x" else nu)[j - 1] += e
    return Weight(tuple(lam), tuple(mu), tuple(nu))


class Polynomial:
    """Integer-coefficient polynomial, stored as {exponent tuple: coefficient}
    with no zero coefficients.  Treat instances as immutable."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Exponents, int] | None = None):
        self.n = n
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, 1)

    @classmethod
    def constant(cls, n: int, c: int) -> "Polynomial":
        return cls(n, {(0,) * variable_count(n): c} if c else {})

    @classmethod
    def variable(cls, n: int, kind: str, i: int, j: int) -> "Polynomial":
        exps = [0] * variable_count(n)
        exps[variable_index(n, kind, i, j)] = 1
        return cls(n, {tuple(exps): 1})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError(f"rank mismatch: {self.n} != {other.n}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.n, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Polynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.n)
            return Polynomial(self.n, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.n == other.n
                and self.terms == other.terms)

    __hash__ = None

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self) -> tuple[Exponents, int]:
        """Greatest term under the lexicographic order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def weight(self) -> Weight:
        """The common multidegree of all terms; raises NotHomogeneousError
        with two offending terms when they disagree."""
        if not self.terms:
            raise ValueError("zero polynomial has no weight")
        it = iter(self.terms)
        first = next(it)
        w = _term_weight(self.n, first)
        for exps in it:
            if _term_weight(self.n, exps) != w:
                raise NotHomogeneousError(
                    f"terms {render_monomial(self.n, first)} and "
                    f"{render_monomial(self.n, exps)} have different weights")
        return w

    def partial(self, kind: str, i: int, j: int) -> "Polynomial":
        idx = variable_index(self.n, kind, i, j)
        out: dict[Exponents, int] = {}
        for exps, c in self.terms.items():
            e = exps[idx]
            if e:
                key = exps[:idx] + (e - 1,) + exps[idx + 1:]
                out[key] = out.get(key, 0) + c * e
        return Polynomial(self.n, {k: v for k, v in out.items() if v})

    def evaluate(self, values: Iterable[int]) -> int:
        vals = tuple(values)
        if len(vals) != variable_count(self.n):
            raise ValueError(f"expected {variable_count(self.n)} values")
        total = 0
        for exps, c in self.terms.items():
            prod = c
            for v, e in zip(vals, exps):
                if e:
                    prod *= v ** e
            total += prod
        return total

    # -- rendering and serialization ----------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = render_monomial(self.n, exps)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("- " if c < 0 else "+ ") + body)
        head = pieces[0][2:] if pieces[0][0] == "+" else "-" + pieces[0][2:]
        return " ".join([head] + pieces[1:])

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {len(self.terms)} terms)"

    def to_json_obj(self) -> list[dict]:
        out = []
        for exps in sorted(self.terms, reverse=True):
            entry = {}
            for idx, e in enumerate(exps):
                if e:
                    kind, i, j = variable_labels(self.n)[idx]
                    entry[f"{kind}{i}{j}"] = e
            out.append({"coeff": str(self.terms[exps]), "exps": entry})
        return out

    @classmethod
    def from_json_obj(cls, n: int, obj: list[dict]) -> "Polynomial":
        terms: dict[Exponents, int] = {}
        for item in obj:
            exps = [0] * variable_count(n)
            for name, e in item["exps"].items():
                kind, i, j = name[0], int(name[1]), int(name[2])
                exps[variable_index(n, kind, i, j)] = int(e)
            c = int(item["coeff"])
            if c:
                terms[tuple(exps)] = terms.get(tuple(exps), 0) + c
        return cls(n, {k: v for k, v in terms.items() if v})


def render_monomial(n: int, exps: Exponents) -> str:
    parts = []
    for idx, e in enumerate(exps):
        if e:
            kind, i, j = variable_labels(n)[idx]
            parts.append(f"{kind}[{i}][{j}]" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) if parts else "1"


def monomial_exponents(n: int, factors: Iterable[tuple[str, int, int]]) -> Exponents:
    """Exponent tuple of a product of variables given as (kind, i, j)."""
    exps = [0] * variable_count(n)
    for kind, i, j in factors:
        exps[variable_index(n, kind, i, j)] += 1
    return tuple(exps)


def raising_derivation(factor: int, k: int, p: Polynomial) -> Polynomial:
    """Infinitesimal simple-root raising operator on the k-th root of one of
    the three group factors: factor 1 acts on rows of both matrix blocks
    (x[k][j] d/dx[k+1][j] + y[k][j] d/dy[k+1][j], summed over j), factor 2
    on x-columns, factor 3 on y-columns.  A polynomial is invariant under
    the product of the three unipotent groups iff every one of the 3(n-1)
    operators annihilates it."""
    n = p.n
    if factor not in (1, 2, 3):
        raise ValueError("factor must be 1, 2, or 3")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in 1..{n - 1}")
    pairs = []  # (index gaining a power, index differentiated)
    if factor == 1:
        for j in range(1, n + 1):
            pairs.append((variable_index(n, "x", k, j), variable_index(n, "x", k + 1, j)))
            pairs.append((variable_index(n, "y", k, j), variable_index(n, "y", k + 1, j)))
    elif factor == 2:
        for i in range(1, n + 1):
            pairs.append((variable_index(n, "x", i, k), variable_index(n, "x", i, k + 1)))
    else:
        for i in range(1, n + 1):
            pairs.append((variable_index(n, "y", i, k), variable_index(n, "y", i, k + 1)))
    out: dict[Exponents, int] = {}
    for exps, c in p.terms.items():
        for src, tgt in pairs:
            e = exps[tgt]
            if e:
                lst = list(exps)
                lst[tgt] -= 1
                lst[src] += 1
                key = tuple(lst)
                s = out.get(key, 0) + c * e
                if s:
                    out[key] = s
                else:
                    del out[key]
    return Polynomial(n, out)


# ---------------------------------------------------------------------------
# Determinants and minors

def _parity(perm: tuple[int, ...]) -> int:
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def det(matrix: list[list["Polynomial"]]) -> Polynomial:
    """Determinant of a square matrix of polynomials, by permutation
    expansion (intended for sizes up to 5)."""
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise ValueError("matrix is not square")
    n = matrix[0][0].n
    total = Polynomial.zero(n)
    for perm in permutations(range(m)):
        prod = Polynomial.constant(n, _parity(perm))
        for r in range(m):
            prod = prod * matrix[r][perm[r]]
        total = total + prod
    return total


@dataclass(frozen=True)
class ColumnTableau:
    """A single column: `empty` empty boxes then strictly increasing entries.

    Labels the minor of the n x 2n matrix [X | Y] on rows 1..empty+k and
    columns 1..empty (from X) followed by the entry columns (from Y).
    """

    empty: int
    entries: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.empty + len(self.entries)


def minor(n: int, col: ColumnTableau) -> Polynomial:
    """The determinant labeled by a column tableau."""
    ent = col.entries
    if col.empty < 0 or any(e < 1 or e > n for e in ent):
        raise ValueError(f"invalid column tableau {col} for rank {n}")
    if any(a >= b for a, b in zip(ent, ent[1:])):
        raise ValueError(f"column entries {ent} must strictly increase")
    if col.size > n or col.size == 0:
        raise ValueError(f"column size {col.size} out of range for rank {n}")
    columns = [("x", c) for c in range(1, col.empty + 1)] + [("y", e) for e in ent]
    matrix = [[Polynomial.variable(n, kind, r, c) for kind, c in columns]
              for r in range(1, col.size + 1)]
    return det(matrix)

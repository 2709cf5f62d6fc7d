"""Littlewood-Richardson coefficients by three routes, graded dimension
counts m_d, and Hilbert-Poincare series (enumerated and closed form)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .hive import Hive, rhombus_inequalities
from .shapes import Parts, contains, is_dominant, normalize, pad, partitions_of
from .tableau import enumerate_tableaux

SeriesPrefix = tuple[int, ...]

# Numerator coefficients and denominator factor exponents of the closed-form
# series: the rank-n series is numerator(t) / prod (1 - t^e) over the listed
# exponents e.
SERIES_NUMERATOR: dict[int, tuple[int, ...]] = {
    2: (1,),
    3: (1, 0, 0, 0, 0, 0, -1),
    4: (1, -2, -2, 10, -2, -24, 22, 32, -54, -18, 80, -14, -72, 34, 44, -18,
        -25,
        -18, 44, 34, -72, -14, 80, -18, -54, 32, 22, -24, -2, 10, -2, -2, 1),
}
SERIES_DENOMINATOR: dict[int, tuple[int, ...]] = {
    2: (1, 1, 2, 2, 2),
    3: (1, 1, 2, 2, 2, 3, 3, 3, 3, 4),
    4: (1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 12, 12, 12, 12),
}


@lru_cache(maxsize=None)
def _fill_plan(n: int):
    """Interior entries in row-major order, each rhombus inequality attached
    to the last interior entry it mentions (boundary-only ones kept apart).

    Attached inequalities are split as (coeff on that entry, residual terms),
    so interval bounds fall out once everything earlier is placed.
    """
    interior = tuple((i, j) for i in range(3, n + 1) for j in range(2, i))
    order = {pos: k for k, pos in enumerate(interior)}
    boundary_only: list[tuple[tuple[int, int, int], ...]] = []
    attached: list[list] = [[] for _ in interior]
    for _fam, _i, _j, terms in rhombus_inequalities(n):
        ks = [order[pos] for pos, _ in terms if pos in order]
        flat_terms = tuple((p - 1, q - 1, c) for (p, q), c in terms)
        if not ks:
            boundary_only.append(flat_terms)
        else:
            k = max(ks)
            pivot = interior[k]
            coeff = next(c for pos, c in terms if pos == pivot)
            rest = tuple((p - 1, q - 1, c) for (p, q), c in terms if (p, q) != pivot)
            attached[k].append((coeff, rest))
    return interior, tuple(boundary_only), tuple(tuple(a) for a in attached)


def _iter_hive_rows(n: int, lam: Parts, mu: Parts, nu: Parts) -> Iterator[tuple]:
    """Yield the row tuples of every hive with the given boundary.

    Inputs must be dominant, zero-padded to length n, with
    sum(lam) == sum(mu) + sum(nu); edges are fixed by partial sums and only
    strictly interior entries are searched.
    """
    interior, boundary_only, attached = _fill_plan(n)
    arr = [[0] * i for i in range(1, n + 2)]
    acc = 0
    for i in range(n):  # left edge: partial sums of mu
        acc += mu[i]
        arr[i + 1][0] = acc
    acc = 0
    for i in range(n):  # right edge: partial sums of lam
        acc += lam[i]
        arr[i + 1][i + 1] = acc
    acc = arr[n][0]
    for j in range(n):  # bottom edge: |mu| plus partial sums of nu
        acc += nu[j]
        arr[n][j + 1] = acc

    for terms in boundary_only:
        if sum(c * arr[i][j] for i, j, c in terms) < 0:
            return

    def fill(k: int) -> Iterator[tuple]:
        if k == len(interior):
            yield tuple(tuple(row) for row in arr)
            return
        i, j = interior[k]
        low, high = None, None
        for coeff, rest in attached[k]:
            s = sum(c * arr[p][q] for p, q, c in rest)
            if coeff > 0:
                low = -s if low is None else max(low, -s)
            else:
                high = s if high is None else min(high, s)
        row = arr[i - 1]
        for v in range(low, high + 1):
            row[j - 1] = v
            yield from fill(k + 1)
        row[j - 1] = 0

    yield from fill(0)


def _boundary_triple(n, lam, mu, nu) -> tuple[Parts, Parts, Parts] | None:
    """Normalize a boundary triple, or None when no hive can carry it."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    for name, p in (("lambda", lam), ("mu", mu), ("nu", nu)):
        if not is_dominant(p):
            raise ValueError(f"{name} = {p} is not a partition")
    if max(len(lam), len(mu), len(nu)) > n:
        return None
    if sum(lam) != sum(mu) + sum(nu):
        return None
    return pad(lam, n), pad(mu, n), pad(nu, n)


def enumerate_hives(n, lam, mu, nu) -> list[Hive]:
    """All hives with boundary (lam, mu, nu), in search order."""
    triple = _boundary_triple(n, lam, mu, nu)
    if triple is None:
        return []
    return [Hive(n, rows) for rows in _iter_hive_rows(n, *triple)]


@lru_cache(maxsize=None)
def _hive_count(n: int, lam: Parts, mu: Parts, nu: Parts) -> int:
    return sum(1 for _ in _iter_hive_rows(n, lam, mu, nu))


def lr_coefficient(n, lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient for GL(n), counted by hives."""
    triple = _boundary_triple(n, lam, mu, nu)
    if triple is None:
        return 0
    lam, mu, nu = triple
    if nu < mu:  # symmetric in (mu, nu); canonical order shares the cache
        mu, nu = nu, mu
    return _hive_count(n, lam, mu, nu)


def lr_via_tableaux(n, lam, mu, nu) -> int:
    """Independent count of the same coefficient by tableau enumeration."""
    return len(enumerate_tableaux(n, lam, mu, nu))


def md_sum(n: int, d: int) -> int:
    """Sum of LR coefficients over triples with |lambda| = |mu| + |nu| = d,
    all parts bounded by n: the degree-d dimension of the hive algebra."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    total = 0
    lams = partitions_of(d, n)
    for j in range(d + 1):
        for mu in partitions_of(j, n):
            for nu in partitions_of(d - j, n):
                cap = (mu[0] if mu else 0) + (nu[0] if nu else 0)
                for lam in lams:
                    if lam and lam[0] > cap:
                        continue
                    if not (contains(lam, mu) and contains(lam, nu)):
                        continue
                    total += lr_coefficient(n, lam, mu, nu)
    return total


def hp_series_enumerated(n: int, max_degree: int, threads: int = 1) -> SeriesPrefix:
    """Coefficients m_0..m_D of the Hilbert-Poincare series, by enumeration."""
    degrees = range(max_degree + 1)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return tuple(pool.map(lambda d: md_sum(n, d), degrees))
    return tuple(md_sum(n, d) for d in degrees)


def hp_series_closed_form(numerator, denominator_exponents, max_degree: int) -> SeriesPrefix:
    """Expand numerator(t) / prod (1 - t^e) as a power series up to t^D."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    coeffs = [0] * (max_degree + 1)
    for k, c in enumerate(numerator):
        if k > max_degree:
            break
        coeffs[k] = int(c)
    for e in denominator_exponents:
        if e < 1:
            raise ValueError(f"denominator exponent {e} must be positive")
        for k in range(e, max_degree + 1):
            coeffs[k] += coeffs[k - e]
    return tuple(coeffs)


def hp_series_reference(n: int, max_degree: int) -> SeriesPrefix:
    """Closed-form series for n = 2, 3, 4 from the tabulated presentation data."""
    if n not in SERIES_NUMERATOR:
        raise ValueError(f"no closed-form series data for rank {n}")
    return hp_series_closed_form(SERIES_NUMERATOR[n], SERIES_DENOMINATOR[n], max_degree)


# ---------------------------------------------------------------------------
# Schur-product oracle

@lru_cache(maxsize=None)
def schur_monomials(n: int, lam: Parts) -> dict:
    """Schur polynomial s_lam in n variables as {exponent vector: coefficient},
    summing x^weight over semistandard tableaux of shape lam."""
    lam = normalize(lam)
    if len(lam) > n:
        return {}
    result: dict[tuple, int] = {}
    cells = [(i, c) for i in range(len(lam)) for c in range(lam[i])]
    fill = {}
    weight = [0] * n

    def place(k: int) -> None:
        if k == len(cells):
            key = tuple(weight)
            result[key] = result.get(key, 0) + 1
            return
        i, c = cells[k]
        lo = max(fill.get((i, c - 1), 1), fill.get((i - 1, c), 0) + 1)
        for v in range(lo, n + 1):
            fill[(i, c)] = v
            weight[v - 1] += 1
            place(k + 1)
            weight[v - 1] -= 1
        fill.pop((i, c), None)

    place(0)
    return result


@lru_cache(maxsize=None)
def _schur_product_expansion(n: int, mu: Parts, nu: Parts) -> dict:
    """Expand s_mu * s_nu in the Schur basis by peeling leading monomials.

    The lex-leading monomial of a symmetric polynomial is x^lam for a
    partition lam, with the full coefficient of s_lam; subtract and repeat.
    """
    product: dict[tuple, int] = {}
    right = schur_monomials(n, nu)
    for w1, c1 in schur_monomials(n, mu).items():
        for w2, c2 in right.items():
            key = tuple(a + b for a, b in zip(w1, w2))
            c = product.get(key, 0) + c1 * c2
            if c:
                product[key] = c
            else:
                del product[key]
    expansion: dict[Parts, int] = {}
    while product:
        lead = max(product)
        if normalize(lead) != normalize(sorted(lead, reverse=True)):
            raise ArithmeticError(f"leading weight {lead} is not a partition")
        coeff = product[lead]
        expansion[normalize(lead)] = coeff
        for w, c in schur_monomials(n, normalize(lead)).items():
            c = product.get(w, 0) - coeff * c
            if c:
                product[w] = c
            else:
                product.pop(w, None)
    return expansion


def lr_via_schur(n, lam, mu, nu) -> int:
    """Third route: coefficient of s_lam in the product s_mu * s_nu."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    for name, p in (("lambda", lam), ("mu", mu), ("nu", nu)):
        if not is_dominant(p):
            raise ValueError(f"{name} = {p} is not a partition")
    if max(len(lam), len(mu), len(nu)) > n or sum(lam) != sum(mu) + sum(nu):
        return 0
    return _schur_product_expansion(n, mu, nu).get(lam, 0)

"""Exact counts of plane multi-edge trees.

Everything here works on Python integers and :class:`fractions.Fraction`.
Height-restricted counts are available three independent ways:

* ``formula``: an alternating sum of weighted trinomial coefficients
  ``[v^k](1 + 3v + v^2)^(n-1)``;
* ``series``: coefficients of the height-bounded generating functions,
  iterating ``T_h = (1 - z) / (1 - z - z T_{h-1})`` on truncated series;
* ``brute``: exhaustive enumeration (small sizes only).
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from pathlib import Path

from .series import TruncatedSeries
from .trees import iter_multi_edge

__all__ = [
    "CACHE_ENV_VAR",
    "HeightCountTable",
    "VertexCountTable",
    "a_n",
    "a_n_list",
    "trinomial_131",
    "trinomial_row",
    "count_height_gt",
    "count_height_eq",
    "count_height_table_series",
    "height_table",
    "count_vertices_eq",
    "vertex_table",
    "vertex_weights",
    "fuss_catalan",
    "expected_height_exact",
    "vertex_moments_exact",
    "bfile",
]

log = logging.getLogger(__name__)

#: Directory for the on-disk cache of series height tables. Caching is off
#: when the variable is unset.
CACHE_ENV_VAR = "MULTIEDGE_CACHE_DIR"

HEIGHT_METHODS = ("formula", "series", "brute")


# -- total counts ----------------------------------------------------------

_A = [1]


def a_n(n: int) -> int:
    """Number of plane multi-edge trees with ``n`` edges.

    The generating function satisfies ``T = 1 - z + z T + z T^2``, whose
    coefficients obey, for ``n >= 2``::

        (n + 1) A_n = (6n - 3) A_{n-1} - 5 (n - 2) A_{n-2}

    The quadratic convolution form of the functional equation is kept as a
    test oracle.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    A = _A
    while len(A) <= n:
        m = len(A)
        if m == 1:
            A.append(1)
            continue
        q, r = divmod((6 * m - 3) * A[m - 1] - 5 * (m - 2) * A[m - 2], m + 1)
        assert r == 0
        A.append(q)
    return A[n]


def a_n_list(n_max: int) -> list[int]:
    a_n(n_max)
    return _A[: n_max + 1]


def bfile(n_max: int) -> str:
    """OEIS b-file text ``n a(n)`` for ``n = 0..n_max``."""
    return "".join(f"{n} {a}\n" for n, a in enumerate(a_n_list(n_max)))


# -- weighted trinomials ---------------------------------------------------


@lru_cache(maxsize=64)
def trinomial_row(n: int) -> tuple[int, ...]:
    """Coefficients of ``(1 + 3v + v^2)^n``, ``2n + 1`` entries.

    Uses ``P (3 + 2v) n = (1 + 3v + v^2) P'``, which gives
    ``(k+1) c_{k+1} = 3(n-k) c_k + (2n-k+1) c_{k-1}``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = [0] * (2 * n + 1)
    c[0] = 1
    prev = 0
    for k in range(0, 2 * n):
        num = 3 * (n - k) * c[k] + (2 * n - k + 1) * prev
        q, r = divmod(num, k + 1)
        assert r == 0, "trinomial recurrence must divide exactly"
        prev = c[k]
        c[k + 1] = q
    return tuple(c)


def trinomial_131(n: int, k: int) -> int:
    """``[v^k](1 + 3v + v^2)^n``; zero for ``k`` outside ``0..2n``."""
    if k < 0 or k > 2 * n:
        return 0
    return trinomial_row(n)[k]


# -- height ----------------------------------------------------------------


def count_height_gt(n: int, h: int) -> int:
    """Number of multi-edge trees with ``n`` edges and height ``> h``."""
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    if n == 0:
        return 0
    row = trinomial_row(n - 1)
    top = 2 * (n - 1)

    def t(k):
        return row[k] if 0 <= k <= top else 0

    total = 0
    j = n - (h + 1)
    while j >= 0:
        total += t(j) - 2 * t(j - 2) + t(j - 4)
        j -= h + 2
    return total


def count_height_eq(n: int, h: int) -> int:
    """Number of multi-edge trees with ``n`` edges and height exactly ``h``."""
    if h < 0:
        return 0
    if h == 0:
        return 1 if n == 0 else 0
    return count_height_gt(n, h - 1) - count_height_gt(n, h)


@dataclass(frozen=True)
class HeightCountTable:
    """Exact height profile of the trees of size ``n``.

    ``rows[h] = (count_gt, count_eq)`` for ``h = 0..h_max``.
    """

    n: int
    rows: dict[int, tuple[int, int]]

    @property
    def total(self) -> int:
        return sum(eq for _, eq in self.rows.values())

    def _row(self, h: int) -> tuple[int, int]:
        if h in self.rows:
            return self.rows[h]
        top = max(self.rows)
        # beyond the last row only when that row already shows no taller tree
        if h > top and self.rows[top][0] == 0:
            return (0, 0)
        raise ValueError(f"height {h} is outside the rows computed for n={self.n}")

    def count_gt(self, h: int) -> int:
        return self._row(h)[0]

    def count_eq(self, h: int) -> int:
        return self._row(h)[1]

    def nonzero(self) -> dict[int, int]:
        """Heights that occur, mapped to their counts."""
        return {h: eq for h, (_, eq) in self.rows.items() if eq}

    def to_csv(self, all_rows: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["h", "count_eq", "count_gt"])
        for h, (gt, eq) in sorted(self.rows.items()):
            if all_rows or eq:
                w.writerow([h, eq, gt])
        return buf.getvalue()


def _table_from_gt(n: int, gt: list[int], total: int) -> HeightCountTable:
    rows = {}
    prev = total  # number of trees with height > -1
    for h, g in enumerate(gt):
        rows[h] = (g, prev - g)
        prev = g
    return HeightCountTable(n, rows)


def _series_matrix(n_max: int, h_max: int) -> list[list[int]]:
    """``M[h][n] = [z^n] T_h(z)`` for ``h <= h_max``, ``n <= n_max``."""
    cache_file = None
    cache_dir = os.environ.get(CACHE_ENV_VAR)
    if cache_dir:
        cache_file = Path(cache_dir) / f"height_series_{n_max}_{h_max}.json"
        if cache_file.exists():
            log.debug("loading %s", cache_file)
            data = json.loads(cache_file.read_text())
            return [[int(x) for x in row] for row in data]
    one = TruncatedSeries.constant(1, n_max)
    one_minus_z = TruncatedSeries([1, -1], n_max)
    T = one
    M = [list(T.coeffs)]
    for _ in range(h_max):
        T = one_minus_z * (one_minus_z - T.shift(1)).reciprocal()
        M.append(list(T.coeffs))
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(json.dumps([[str(x) for x in row] for row in M]))
        log.debug("wrote %s", cache_file)
    return M


def count_height_table_series(n_max: int, h_max: int | None = None) -> list[HeightCountTable]:
    """Height tables for every size ``0..n_max`` from the ``T_h`` series.

    Row ``h`` is present for ``h <= min(n, h_max)``. Totals come from
    ``T_{n_max}``, which agrees with ``T`` up to ``z^{n_max}``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    h_max = n_max if h_max is None else h_max
    M = _series_matrix(n_max, max(h_max, n_max))
    tables = []
    for n in range(n_max + 1):
        total = M[n][n]
        gt = [total - M[h][n] for h in range(min(n, h_max) + 1)]
        tables.append(_table_from_gt(n, gt, total))
    return tables


def height_table(n: int, method: str = "formula", ceiling: int | None = None) -> HeightCountTable:
    """Rows ``h = 0..n`` of the height profile for size ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "formula":
        gt = [count_height_gt(n, h) for h in range(n + 1)]
        return _table_from_gt(n, gt, a_n(n))
    if method == "series":
        return count_height_table_series(n)[n]
    if method == "brute":
        hist = [0] * (n + 1)
        total = 0
        for t in iter_multi_edge(n, ceiling):
            hist[t.height] += 1
            total += 1
        rows, above = {}, total
        for h in range(n + 1):
            above -= hist[h]
            rows[h] = (above, hist[h])
        return HeightCountTable(n, rows)
    raise ValueError(f"unknown method {method!r}; choose from {HEIGHT_METHODS}")


def expected_height_exact(n: int) -> Fraction:
    """``E(H_n) = sum_{h >= 0} P(H_n > h)`` as an exact fraction."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(sum(count_height_gt(n, h) for h in range(n)), a_n(n))


# -- vertices --------------------------------------------------------------


def count_vertices_eq(n: int, k: int) -> int:
    """Number of multi-edge trees with ``n`` edges and ``k`` vertices.

    A plane tree with ``k`` vertices (Catalan many) plus a composition of
    ``n`` into ``k - 1`` positive parts.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1 if k == 1 else 0
    if not 2 <= k <= n + 1:
        return 0
    q, r = divmod(comb(2 * k - 2, k - 1), k)
    assert r == 0
    return q * comb(n - 1, k - 2)


@dataclass(frozen=True)
class VertexCountTable:
    n: int
    rows: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.rows.values())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "count"])
        for k, c in sorted(self.rows.items()):
            w.writerow([k, c])
        return buf.getvalue()


def vertex_weights(n: int) -> list[tuple[int, int]]:
    """``(k, count_vertices_eq(n, k))`` for every feasible ``k``, built by
    exact ratio updates of the Catalan and binomial factors."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [(1, 1)]
    out = []
    cat, binom = 1, 1  # Catalan(k - 1) and C(n - 1, k - 2) at k = 2
    for k in range(2, n + 2):
        out.append((k, cat * binom))
        m, j = k, k - 1  # advance to Catalan(m) and C(n - 1, j)
        cat, r1 = divmod(cat * 2 * (2 * m - 1), m + 1)
        binom, r2 = divmod(binom * (n - j), j)
        assert r1 == 0 and r2 == 0
    return out


def vertex_table(n: int) -> VertexCountTable:
    return VertexCountTable(n, dict(vertex_weights(n)))


def vertex_moments_exact(n: int) -> tuple[Fraction, Fraction]:
    """Exact mean and variance of the vertex count at size ``n``."""
    table = vertex_table(n)
    total = table.total
    s1 = sum(k * c for k, c in table.rows.items())
    s2 = sum(k * k * c for k, c in table.rows.items())
    mean = Fraction(s1, total)
    return mean, Fraction(s2, total) - mean * mean


# -- d-ary -----------------------------------------------------------------


def fuss_catalan(d: int, n: int) -> int:
    """``binom(nd, n-1) / n``: d-ary trees with ``n`` vertices."""
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    q, r = divmod(comb(n * d, n - 1), n)
    assert r == 0
    return q

"""Truncated formal power series with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable

__all__ = ["TruncatedSeries"]


class TruncatedSeries:
    """Power series ``c_0 + c_1 z + ... + c_N z^N`` modulo ``z^(N+1)``.

    Coefficients are Python integers, so every operation is exact up to the
    truncation order. Binary operations require equal orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = [int(x) for x in coeffs][: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, value: int, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def z(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> int:
        if 0 <= n <= self.order:
            return self.coeffs[n]
        if n < 0:
            return 0
        raise IndexError(f"coefficient {n} lies beyond the truncation order {self.order}")

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)}, order={self.order})"

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def scalar_mul(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries([k * a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scalar_mul(other)
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        # skip leading zeros of either factor; shifts by z are common here
        lo_a = next((i for i, x in enumerate(a) if x), N + 1)
        lo_b = next((i for i, x in enumerate(b) if x), N + 1)
        out = [0] * (N + 1)
        for i in range(lo_a, N + 1 - lo_b):
            ai = a[i]
            if ai:
                for j in range(lo_b, N + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, N)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``z^k`` and truncate."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    def reciprocal(self) -> "TruncatedSeries":
        """``1/a`` up to the truncation order; ``a[0]`` must be 1 or -1."""
        a = self.coeffs
        c0 = a[0]
        if c0 not in (1, -1):
            raise ValueError(f"reciprocal needs a unit constant term, got {c0}")
        N = self.order
        b = [0] * (N + 1)
        b[0] = c0
        nz = [(j, a[j]) for j in range(1, N + 1) if a[j]]
        for k in range(1, N + 1):
            acc = 0
            for j, aj in nz:
                if j > k:
                    break
                acc += aj * b[k - j]
            b[k] = -c0 * acc
        return TruncatedSeries(b, N)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self.coeffs, order)

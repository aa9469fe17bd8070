"""Exact arithmetic on truncated formal power series in q.

A :class:`Series` holds the coefficients of q^0 .. q^N for a fixed
truncation order N, as plain Python integers, so every computation is
exact at any coefficient size.  Binary operations truncate to the smaller
operand order and never extrapolate past known coefficients.  Values are
immutable; every operation returns a fresh Series.

Multiplication is the schoolbook Cauchy convolution.  At the orders this
package targets (N up to a couple thousand) that is fast enough, and it
keeps the arithmetic trivially auditable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional


@dataclass(frozen=True)
class Mismatch:
    """First index at which two series disagree, with both values."""

    index: int
    left: int
    right: int

    def __str__(self) -> str:
        return f"coefficient {self.index}: {self.left} != {self.right}"


class Series:
    """Integer power series in q, truncated at a fixed order (inclusive).

    Equality compares coefficientwise up to the smaller of the two orders,
    so a series agrees with any of its own truncations.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> int:
        """Coefficient of q^n.  Out of 0..order is an error, never a guess."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    __getitem__ = coeff

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"Series([{head}{tail}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # prefix equality is not hash-compatible

    def truncate(self, order: int) -> Series:
        """Drop coefficients above `order` (which must not exceed self.order)."""
        if not 0 <= order <= self.order:
            raise IndexError(f"truncation order {order} outside 0..{self.order}")
        return Series(self.coeffs[: order + 1])

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        return Series(x + y for x, y in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        return Series(x - y for x, y in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> Series:
        return Series(-x for x in self.coeffs)

    def __mul__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a = self.coeffs[: n + 1]
        b = other.coeffs[: n + 1]
        out = []
        for m in range(n + 1):
            window = b[m::-1]
            out.append(sum(x * y for x, y in zip(a, window)))
        return Series(out)

    def inverse(self) -> Series:
        """Multiplicative inverse, requiring constant term +1 or -1.

        Uses the standard recurrence b_0 = a_0, b_n = -a_0 * sum_{k=1..n}
        a_k b_{n-k}, which keeps everything inside the integers.
        """
        a = self.coeffs
        if a[0] not in (1, -1):
            raise ValueError(
                f"series with constant term {a[0]} has no integer inverse"
            )
        n = self.order
        b = [a[0]] + [0] * n
        for m in range(1, n + 1):
            acc = sum(x * y for x, y in zip(a[1 : m + 1], b[m - 1 :: -1]))
            b[m] = -a[0] * acc
        return Series(b)

    def power(self, k: int) -> Series:
        """k-th power by repeated multiplication; negative k inverts first."""
        if k < 0:
            return self.inverse().power(-k)
        result = constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    __pow__ = power

    def substitute(self, k: int, sign: int = 1) -> Series:
        """Map q to sign * q^k: coefficient n moves to k*n with weight sign^n.

        The result keeps the same truncation order, so only source
        coefficients with k*n <= order survive.
        """
        if k < 1:
            raise ValueError(f"substitution stride must be >= 1, got {k}")
        if sign not in (1, -1):
            raise ValueError(f"substitution sign must be +1 or -1, got {sign}")
        n = self.order
        out = [0] * (n + 1)
        s = 1
        for i, c in enumerate(self.coeffs):
            if i * k > n:
                break
            out[i * k] = s * c
            s *= sign
        return Series(out)

    def reduce_mod(self, modulus: int) -> Series:
        """Coefficientwise least non-negative residue mod `modulus` (>= 2)."""
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        return Series(c % modulus for c in self.coeffs)


def constant(c: int, order: int) -> Series:
    """The constant series c + 0*q + ... truncated at `order`."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return Series([c] + [0] * order)


def q_power(k: int, order: int) -> Series:
    """The monomial q^k at the given order (zero series if k > order)."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    out = [0] * (order + 1)
    if k <= order:
        out[k] = 1
    return Series(out)


@lru_cache(maxsize=256)
def pochhammer(sign: int, a: int, b: int, order: int) -> Series:
    """Truncated infinite product prod_{k>=0} (1 - sign * q^{a+k*b}).

    sign=+1 builds (q^a; q^b)_oo, sign=-1 builds (-q^a; q^b)_oo.  Each
    factor is applied as a sparse in-place update, touching only the
    entries it can reach, so the total work is far below a full product.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if a < 1 or b < 1:
        raise ValueError(f"pochhammer needs a >= 1 and b >= 1, got a={a}, b={b}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    c = [0] * (order + 1)
    c[0] = 1
    e = a
    while e <= order:
        for i in range(order, e - 1, -1):
            c[i] -= sign * c[i - e]
        e += b
    return Series(c)


def equal_upto(a: Series, b: Series, order: int) -> Optional[Mismatch]:
    """Compare coefficients 0..order; None on agreement, else the first gap."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if order > a.order or order > b.order:
        raise IndexError(
            f"comparison order {order} exceeds a series order "
            f"({a.order} vs {b.order})"
        )
    for i in range(order + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return Mismatch(i, a.coeffs[i], b.coeffs[i])
    return None

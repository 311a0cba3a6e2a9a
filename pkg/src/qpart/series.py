"""Exact truncated power series in one formal variable q over the integers.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N for a fixed
truncation order N; every operation is exact integer arithmetic modulo
q^(N+1).  The q-Pochhammer builders cover the finite products
(1 +- q^a)(1 +- q^(a+s))... and their infinite limits, which is all the
machinery the partition generating functions in this package need.

Coefficients are plain Python integers, so arithmetic can never wrap.  The
engine still enforces the 64-bit representation bound declared for this
artifact: any coefficient reaching |c| >= 2**63 raises
:class:`CoefficientOverflowError` instead of silently producing a value that
a fixed-width consumer could not hold.
"""

from __future__ import annotations

from dataclasses import dataclass

COEFF_LIMIT = 1 << 63

PLUS = 1
MINUS = -1


class SeriesError(Exception):
    """Base class for series-engine failures."""


class OrderMismatchError(SeriesError):
    """Two series of different truncation orders were combined."""


class NonUnitConstantError(SeriesError):
    """Reciprocal requested for a series whose constant term is not +-1."""


class CoefficientOverflowError(SeriesError):
    """A coefficient left the supported 64-bit signed range."""


def _check_bounds(coeffs) -> None:
    for c in coeffs:
        if c >= COEFF_LIMIT or c <= -COEFF_LIMIT:
            raise CoefficientOverflowError(
                f"coefficient magnitude {abs(c)} exceeds 2**63"
            )


# In-place kernels on coefficient lists.  `sign` is +1 or -1, i.e. the
# factor is (1 + sign*q^m).  Both run in O(order) and are the workhorses
# behind every Pochhammer product and reciprocal in this module.

def _mul_factor(coeffs: list, m: int, sign: int) -> None:
    if m <= 0:
        raise ValueError("factor exponent must be positive")
    for i in range(len(coeffs) - 1, m - 1, -1):
        coeffs[i] += sign * coeffs[i - m]


def _div_factor(coeffs: list, m: int, sign: int) -> None:
    if m <= 0:
        raise ValueError("factor exponent must be positive")
    for i in range(m, len(coeffs)):
        coeffs[i] -= sign * coeffs[i - m]


@dataclass(frozen=True)
class EqualityReport:
    """Verdict of a coefficientwise comparison over a window of indices.

    On failure, ``index`` is the smallest mismatching exponent and ``left``
    / ``right`` are the two coefficients found there.
    """

    equal: bool
    index: int | None = None
    left: int | None = None
    right: int | None = None


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer coefficient vector c[0..N] of a series known modulo q^(N+1)."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise SeriesError("a truncated series needs at least the q^0 term")
        _check_bounds(self.coeffs)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "TruncatedSeries":
        """Build from any iterable; pad with zeros up to `order` if given."""
        cs = list(coeffs)
        if order is not None:
            if len(cs) > order + 1:
                raise SeriesError("more coefficients than order allows")
            cs.extend([0] * (order + 1 - len(cs)))
        return cls(tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    @classmethod
    def monomial(cls, coefficient: int, exponent: int, order: int) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if 0 <= exponent <= order:
            cs[exponent] = coefficient
        return cls(tuple(cs))

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        if not 0 <= i <= self.order:
            raise IndexError(f"exponent {i} outside [0, {self.order}]")
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def scale(self, factor: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(factor * a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at the common order."""
        self._require_same_order(other)
        n = self.order
        out = [0] * (n + 1)
        bs = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n - i + 1):
                    b = bs[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def shift(self, c: int) -> "TruncatedSeries":
        """Multiply by q^c: coefficient i of the result is coefficient i-c."""
        if c < 0:
            raise SeriesError("shift distance must be non-negative")
        if c == 0:
            return self
        n = self.order
        if c > n:
            return TruncatedSeries.zero(n)
        return TruncatedSeries((0,) * c + self.coeffs[: n + 1 - c])

    def reciprocal(self) -> "TruncatedSeries":
        """Inverse r with self * r == 1 up to the order.

        Requires constant term +1 or -1; everything this package inverts
        (Pochhammer products) has one.
        """
        a = self.coeffs
        if a[0] not in (1, -1):
            raise NonUnitConstantError(
                f"cannot invert series with constant term {a[0]}"
            )
        n = self.order
        out = [0] * (n + 1)
        out[0] = a[0]
        for i in range(1, n + 1):
            acc = 0
            for j in range(1, i + 1):
                if a[j]:
                    acc += a[j] * out[i - j]
            out[i] = -a[0] * acc
        return TruncatedSeries(tuple(out))

    def halve(self) -> "TruncatedSeries":
        """Divide every coefficient by 2, requiring exact divisibility."""
        for i, c in enumerate(self.coeffs):
            if c % 2:
                raise SeriesError(f"coefficient of q^{i} is odd: {c}")
        return TruncatedSeries(tuple(c // 2 for c in self.coeffs))

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "TruncatedSeries":
        series = cls(tuple(int(c) for c in data["coeffs"]))
        if series.order != int(data["order"]):
            raise SeriesError("coefficient count disagrees with declared order")
        return series

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*q^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def series_sum(terms, order: int) -> TruncatedSeries:
    """Sum an iterable of equal-order series; empty sum is the zero series."""
    acc = [0] * (order + 1)
    for t in terms:
        if t.order != order:
            raise OrderMismatchError("summand order differs from target order")
        for i, c in enumerate(t.coeffs):
            acc[i] += c
    return TruncatedSeries(tuple(acc))


def pochhammer_finite(sign: int, start_exp: int, step: int, terms: int,
                      order: int) -> TruncatedSeries:
    """Product of `terms` factors (1 + sign*q^(start_exp + i*step)).

    Zero terms gives the one series.  Factors whose exponent exceeds the
    order are still part of the product but cannot touch coefficients
    <= order, so they are skipped.
    """
    if sign not in (PLUS, MINUS):
        raise ValueError("sign must be +1 or -1")
    if terms < 0:
        raise ValueError("number of factors must be non-negative")
    if start_exp < 1 or step < 1:
        raise ValueError("start exponent and step must be positive")
    coeffs = [1] + [0] * order
    for i in range(terms):
        m = start_exp + i * step
        if m > order:
            break
        _mul_factor(coeffs, m, sign)
    _check_bounds(coeffs)
    return TruncatedSeries(tuple(coeffs))


def pochhammer_infinite(sign: int, start_exp: int, step: int,
                        order: int) -> TruncatedSeries:
    """Infinite product limit: exactly the factors with exponent <= order.

    Later factors are 1 + O(q^(order+1)) and cannot change any retained
    coefficient.
    """
    if start_exp < 1:
        raise ValueError("start exponent must be positive")
    terms_needed = max(0, (order - start_exp) // step + 1)
    return pochhammer_finite(sign, start_exp, step, terms_needed, order)


def pochhammer_infinite_starts(sign: int, order: int) -> list[TruncatedSeries]:
    """All tail products over start exponents at step 1, in one sweep.

    Entry m-1 is the infinite product of (1 + sign*q^j) for j >= m, for
    m = 1 .. order+1.  Built by the downward recurrence
    tail(m) = (1 + sign*q^m) * tail(m+1), which costs O(order^2) total
    instead of O(order^2) per entry.
    """
    coeffs = [1] + [0] * order
    out: list[tuple[int, ...]] = [tuple(coeffs)]
    for m in range(order, 0, -1):
        _mul_factor(coeffs, m, sign)
        out.append(tuple(coeffs))
    out.reverse()
    _check_bounds(out[0])
    return [TruncatedSeries(t) for t in out]


def compare_series(a: TruncatedSeries, b: TruncatedSeries,
                   start: int = 0) -> EqualityReport:
    """Coefficientwise equality over exponents [start, order]."""
    if a.order != b.order:
        raise OrderMismatchError(f"order mismatch: {a.order} vs {b.order}")
    for i in range(max(start, 0), a.order + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return EqualityReport(False, i, a.coeffs[i], b.coeffs[i])
    return EqualityReport(True)

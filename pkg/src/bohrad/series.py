"""Truncated real power-series arithmetic.

A series is a coefficient vector c[0..K] for a fixed truncation order K;
index n holds the coefficient of z^n.  Every operation keeps the order
fixed (uniform truncation), so a result is the exact Taylor data of the
represented operation up to z^K whenever that is well defined (it is for
sums, Cauchy products, composition with series vanishing at 0, the
exponential of such series, and the t-weighted integral).

Each series carries ``tail_hint``, a heuristic bound on the dropped tail
evaluated at r = 1/3, computed from the last two stored coefficients.  It
is reported alongside results but never silently added to a value.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

DEFAULT_ORDER = 64

# tail_hint is a geometric extrapolation |c_K| r^K / (1 - rho*r) at this radius,
# with rho = |c_K / c_{K-1}| clamped to [0, 2].
TAIL_REFERENCE_RADIUS = 1.0 / 3.0
_TAIL_RATIO_CLAMP = 2.0


class OrderMismatchError(ValueError):
    """Operands of a binary series operation have different orders."""


def _tail_hint(coeffs: np.ndarray) -> float:
    k = coeffs.size - 1
    if k == 0:
        return 0.0
    c_last = abs(float(coeffs[-1]))
    if c_last == 0.0:
        return 0.0
    c_prev = abs(float(coeffs[-2]))
    rho = _TAIL_RATIO_CLAMP if c_prev == 0.0 else min(c_last / c_prev, _TAIL_RATIO_CLAMP)
    r = TAIL_REFERENCE_RADIUS
    return c_last * r**k / (1.0 - rho * r)


def _mul_arrays(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    return np.convolve(a, b)[: order + 1]


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Real power series truncated at a fixed order.

    ``coeffs`` must hold exactly ``order + 1`` finite entries.  Instances
    are immutable (the coefficient array is locked) and safe to share.
    """

    coeffs: np.ndarray
    order: int | None = None
    tail_hint: float = field(init=False)

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        order = arr.size - 1 if self.order is None else int(self.order)
        if arr.size != order + 1:
            raise ValueError(
                f"expected {order + 1} coefficients for order {order}, got {arr.size}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "tail_hint", _tail_hint(arr))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        c = np.zeros(order + 1)
        c[0] = 1.0
        return cls(c)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series z."""
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, degree: int, order: int = DEFAULT_ORDER, scale: float = 1.0) -> "TruncatedSeries":
        if not 0 <= degree <= order:
            raise ValueError(f"monomial degree {degree} outside 0..{order}")
        c = np.zeros(order + 1)
        c[degree] = scale
        return cls(c)

    # -- ring operations ----------------------------------------------

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(self.coeffs + other.coeffs)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(self.coeffs - other.coeffs)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        """Cauchy product truncated at the common order; scalars rescale."""
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries(_mul_arrays(self.coeffs, other.coeffs, self.order))
        if isinstance(other, (int, float)):
            return TruncatedSeries(self.coeffs * float(other))
        return NotImplemented

    __rmul__ = __mul__

    # -- analytic operations ------------------------------------------

    def compose(self, w: "TruncatedSeries") -> "TruncatedSeries":
        """Taylor coefficients of self(w(z)) truncated at the order.

        Requires w(0) = 0, which makes the truncated composition exact:
        the coefficient of z^n only sees coefficients of self up to n.
        """
        self._check_order(w)
        if w.coeffs[0] != 0.0:
            raise ValueError("composition requires w(0) = 0")
        k = self.order
        wc = w.coeffs
        # Horner from the top coefficient down.
        acc = np.zeros(k + 1)
        acc[0] = self.coeffs[k]
        for n in range(k - 1, -1, -1):
            acc = _mul_arrays(acc, wc, k)
            acc[0] += self.coeffs[n]
        return TruncatedSeries(acc)

    def exp(self) -> "TruncatedSeries":
        """exp(self) for a series with zero constant term.

        Uses the recurrence from (exp g)' = g' exp g:
        e_0 = 1, e_n = (1/n) sum_{m=1}^{n} m g_m e_{n-m}.
        """
        if self.coeffs[0] != 0.0:
            raise ValueError("exp requires zero constant term")
        k = self.order
        weighted = self.coeffs * np.arange(k + 1)
        e = np.zeros(k + 1)
        e[0] = 1.0
        for n in range(1, k + 1):
            e[n] = np.dot(weighted[1 : n + 1], e[n - 1 :: -1]) / n
        return TruncatedSeries(e)

    def integrate_over_t(self) -> "TruncatedSeries":
        """int_0^z self(t)/t dt: divides coefficient n by n, constant stays 0.

        Requires a zero constant term so the integrand has no pole.
        """
        if self.coeffs[0] != 0.0:
            raise ValueError("integrate_over_t requires zero constant term")
        out = np.zeros(self.order + 1)
        n = np.arange(1, self.order + 1)
        out[1:] = self.coeffs[1:] / n
        return TruncatedSeries(out)

    def derivative(self) -> "TruncatedSeries":
        """Coefficientwise derivative by index shift; order is preserved."""
        out = np.zeros(self.order + 1)
        out[:-1] = self.coeffs[1:] * np.arange(1, self.order + 1)
        return TruncatedSeries(out)

    def times_z(self) -> "TruncatedSeries":
        """Multiply by z: shift indices up by one, dropping the top term."""
        out = np.zeros(self.order + 1)
        out[1:] = self.coeffs[:-1]
        return TruncatedSeries(out)

    # -- evaluation ----------------------------------------------------

    def eval(self, r: float) -> float:
        """Signed evaluation sum c_n r^n for |r| < 1."""
        if not -1.0 < r < 1.0:
            raise ValueError(f"evaluation point {r} outside (-1, 1)")
        return float(npoly.polyval(r, self.coeffs))

    def eval_abs(self, r: float) -> float:
        """Majorant evaluation sum |c_n| r^n for 0 <= r < 1."""
        if not 0.0 <= r < 1.0:
            raise ValueError(f"majorant evaluation point {r} outside [0, 1)")
        return float(npoly.polyval(r, np.abs(self.coeffs)))

    def __repr__(self) -> str:
        head = np.array2string(self.coeffs[: min(5, self.order + 1)], precision=6)
        return f"TruncatedSeries(order={self.order}, coeffs={head}...)"

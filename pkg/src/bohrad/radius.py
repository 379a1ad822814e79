"""Radius equations and their bracketed root solvers.

For a family extremal series with coefficient moduli a_n (a_1 = 1) and
boundary distance rs, the solved equation is

    G(r) = fhat(r^m) + fhat(r) - p(r) - rs = 0,

where fhat(r) = sum |a_n| r^n and p(r) removes the head of the second
sum: p = 0 for N = 1, p = r for N = 2, p = r + sum_{n=2}^{N-1} |a_n| r^n
for N >= 3.  In the Bohr limit (m -> infinity with N = 1) the fhat(r^m)
term is dropped.  G is strictly increasing with G(0) < 0 < G(1-), so the
root is located by bisection and polished with a few guarded Newton steps.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly

from .catalog import PsiSpec, janowski, janowski_coeff_bound
from .extremal import ExtremalPair, build_extremal_pair
from .series import DEFAULT_ORDER

_BRACKET_HI = 1.0 - 1e-9
_UNIQUENESS_GRID = 64
_EXACT_TAIL_EPS = 1e-16


class Family(str, Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"


class Mode(str, Enum):
    BOHR_ROGOSINSKI = "bohr-rogosinski"
    BOHR_LIMIT = "bohr-limit"


class BracketError(RuntimeError):
    """The radius equation did not change sign on the search bracket."""


@dataclass(frozen=True)
class RadiusProblem:
    psi: PsiSpec
    family: Family = Family.STARLIKE
    m: int = 1
    N: int = 1
    mode: Mode = Mode.BOHR_ROGOSINSKI
    order: int = DEFAULT_ORDER
    tol: float = 1e-10

    def __post_init__(self):
        if self.m < 1 or self.N < 1:
            raise ValueError("m and N must be positive integers")
        if not 0.0 < self.tol < 1e-3:
            raise ValueError(f"tol must lie in (0, 1e-3), got {self.tol}")
        if self.N > self.order:
            raise ValueError(f"N={self.N} exceeds the truncation order {self.order}")


@dataclass(frozen=True)
class RadiusResult:
    psi: str
    family: str
    m: int
    N: int
    mode: str
    r0: float
    rb: float
    bracket: tuple[float, float]
    iterations: int
    residual: float
    sharp: bool

    def to_json_dict(self) -> dict:
        return {
            "psi": self.psi,
            "family": self.family,
            "m": self.m,
            "N": self.N,
            "mode": self.mode,
            "r0": self.r0,
            "rb": self.rb,
            "residual": self.residual,
            "iterations": self.iterations,
            "sharp": self.sharp,
        }


def _majorant_terms(problem: RadiusProblem, pair: ExtremalPair) -> np.ndarray:
    series = pair.f0 if problem.family == Family.STARLIKE else pair.l0
    return np.abs(series.coeffs)


def _koebe(problem: RadiusProblem, pair: ExtremalPair) -> float:
    if problem.family == Family.STARLIKE:
        return pair.koebe_starlike
    return pair.koebe_convex


def g_function(problem: RadiusProblem, pair: ExtremalPair, r: float) -> float:
    """Value of the radius equation at r in [0, 1)."""
    if not 0.0 <= r < 1.0:
        raise ValueError(f"radius argument must lie in [0, 1), got {r}")
    terms = _majorant_terms(problem, pair)
    rstar = _koebe(problem, pair)
    fhat_r = float(npoly.polyval(r, terms))
    if problem.mode == Mode.BOHR_LIMIT:
        return fhat_r - rstar
    head = float(npoly.polyval(r, terms[: problem.N])) if problem.N >= 2 else 0.0
    return float(npoly.polyval(r**problem.m, terms)) + fhat_r - head - rstar


def _bracketed_root(g: Callable[[float], float], tol: float,
                    check_unique: bool = True,
                    hi: float = _BRACKET_HI) -> tuple[float, tuple[float, float], int, float]:
    lo = 0.0
    g_lo, g_hi = g(lo), g(hi)
    if not (g_lo < 0.0 < g_hi):
        raise BracketError(
            f"no sign change on [{lo}, {hi}]: G(lo)={g_lo:.3e}, G(hi)={g_hi:.3e}"
        )
    if check_unique:
        values = [g(lo + (hi - lo) * i / _UNIQUENESS_GRID) for i in range(_UNIQUENESS_GRID + 1)]
        changes = sum(1 for a, b in zip(values, values[1:]) if (a < 0.0) != (b < 0.0))
        if changes != 1:
            warnings.warn(
                f"radius equation shows {changes} sign changes on the scan grid; "
                "the reported root is the bisection limit of the outermost bracket",
                RuntimeWarning,
                stacklevel=3,
            )
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    root = 0.5 * (lo + hi)
    # Guarded Newton polish; bisection already guarantees the bracket, the
    # polish only sharpens the residual (centered finite-difference slope).
    h = max(1e-7 * max(root, 1e-3), 0.25 * tol)
    residual = g(root)
    for _ in range(3):
        slope = (g(root + h) - g(root - h)) / (2.0 * h)
        if slope <= 0.0:
            break
        candidate = root - residual / slope
        if not lo < candidate < hi:
            break
        cand_residual = g(candidate)
        if abs(cand_residual) >= abs(residual):
            break
        root, residual = candidate, cand_residual
    return root, (lo, hi), iterations, residual


def _clamped(r0: float, exact_bounds: bool) -> float:
    return r0 if exact_bounds else min(r0, 1.0 / 3.0)


def solve(problem: RadiusProblem, pair: ExtremalPair | None = None) -> RadiusResult:
    """Solve the radius equation for the given problem."""
    if pair is None:
        pair = build_extremal_pair(problem.psi, problem.order)
    r0, bracket, iterations, residual = _bracketed_root(
        lambda r: g_function(problem, pair, r), problem.tol
    )
    rb = _clamped(r0, problem.psi.exact_bounds)
    series = pair.f0 if problem.family == Family.STARLIKE else pair.l0
    sharp = bool(rb == r0 and np.all(series.coeffs[1:] > 0.0))
    return RadiusResult(
        psi=problem.psi.label,
        family=problem.family.value,
        m=problem.m,
        N=problem.N,
        mode=problem.mode.value,
        r0=r0,
        rb=rb,
        bracket=bracket,
        iterations=iterations,
        residual=residual,
        sharp=sharp,
    )


def solve_janowski_exact(d: float, e: float, m: int = 1, N: int = 1,
                         tol: float = 1e-10,
                         mode: Mode = Mode.BOHR_ROGOSINSKI) -> RadiusResult:
    """Solve the closed-form Janowski radius equation.

    For E != 0 the equation is

        r^m (1 + E r^m)^((D-E)/E) + A(r)
            + sum_{n=max(N,2)}^inf prod_{k=0}^{n-2} |E-D+Ek|/(k+1) r^n
            - (1 - E)^((D-E)/E) = 0,

    with A(r) = r exactly when N = 1 (the tail's n = 1 term, whose
    coefficient is 1).  For E = 0 the extremal function degenerates to
    z e^(Dz) and the equation becomes

        r^m e^(D r^m) + r e^(D r) - J(r) - e^(-D) = 0,

    where J removes the head of the full sum: J = 0 for N = 1, J = r for
    N = 2, and J = r + sum_{n=2}^{N-1} D^(n-1)/(n-1)! r^n for N >= 3.
    The infinite tail is summed termwise until the increment drops below
    1e-16.  In Bohr-limit mode the r^m term is dropped and N is 1.
    """
    spec = janowski(d, e)
    if m < 1 or N < 1:
        raise ValueError("m and N must be positive integers")
    if mode == Mode.BOHR_LIMIT:
        N = 1
    p = None if e == 0.0 else (d - e) / e

    def f0_closed(r: float) -> float:
        if e == 0.0:
            return r * math.exp(d * r)
        return r * (1.0 + e * r) ** p

    rstar = spec.koebe_closed

    def tail_from(n_start: int, r: float) -> float:
        # prod_n r^n summed termwise; the coefficient ratio tends to |E| r < 1.
        prod = janowski_coeff_bound(d, e, n_start) if n_start >= 2 else 1.0
        term = prod * r**n_start
        total = 0.0
        n = n_start
        while abs(term) >= _EXACT_TAIL_EPS:
            total += term
            n += 1
            term *= abs(e - d + e * (n - 2)) / (n - 1) * r
            if n > 200000:  # unreachable for r <= _BRACKET_HI
                raise RuntimeError("tail summation failed to terminate")
        return total

    def g(r: float) -> float:
        tail = tail_from(max(N, 2), r) + (r if N == 1 else 0.0)
        if mode == Mode.BOHR_LIMIT:
            return tail - rstar
        return f0_closed(r**m) + tail - rstar

    # Termwise tails decay slowly as r -> 1 when |E| is near 1, so expand
    # the bracket top from 0.9 only as far as the sign change requires.
    hi = 0.9
    while g(hi) <= 0.0 and hi < _BRACKET_HI:
        hi = min(1.0 - 0.25 * (1.0 - hi), _BRACKET_HI)
    r0, bracket, iterations, residual = _bracketed_root(g, tol, hi=hi)
    sharp = _janowski_coeffs_positive(d, e)
    return RadiusResult(
        psi=spec.label,
        family=Family.STARLIKE.value,
        m=m,
        N=N,
        mode=mode.value,
        r0=r0,
        rb=r0,
        bracket=bracket,
        iterations=iterations,
        residual=residual,
        sharp=sharp,
    )


def _janowski_coeffs_positive(d: float, e: float, upto: int = DEFAULT_ORDER) -> bool:
    # t_n = prod (D - E - Ek)/(k+1); every factor is positive iff E <= 0.
    if e <= 0.0:
        return True
    return all(d - e - e * k > 0.0 for k in range(upto - 1))


@dataclass(frozen=True)
class Sweep:
    axis: str
    values: tuple[int, ...]
    results: tuple[RadiusResult, ...]
    monotone_nondecreasing: bool


def sweep(problem: RadiusProblem, n_values=None, m_values=None) -> Sweep:
    """Solve over a grid in N or in m; the extremal pair is built once.

    Whether the solved radii are nondecreasing along the grid is reported
    as a diagnostic, not asserted.
    """
    if (n_values is None) == (m_values is None):
        raise ValueError("exactly one of n_values and m_values must be given")
    axis, values = ("N", n_values) if n_values is not None else ("m", m_values)
    values = tuple(int(v) for v in values)
    if not values:
        raise ValueError(f"empty sweep range for {axis}")
    pair = build_extremal_pair(problem.psi, problem.order)
    results = []
    for v in values:
        kwargs = {"N": v} if axis == "N" else {"m": v}
        sub = RadiusProblem(
            psi=problem.psi, family=problem.family,
            m=kwargs.get("m", problem.m), N=kwargs.get("N", problem.N),
            mode=problem.mode, order=problem.order, tol=problem.tol,
        )
        results.append(solve(sub, pair))
    radii = [res.r0 for res in results]
    monotone = all(b >= a - 1e-12 for a, b in zip(radii, radii[1:]))
    return Sweep(axis=axis, values=values, results=tuple(results),
                 monotone_nondecreasing=monotone)

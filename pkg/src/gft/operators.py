"""Convolution operators and the radial integral iteration on series coefficients.

Raising and lowering act diagonally: coefficient a_k picks up a factor
1 / multiplier(sigma, n, k - 1) or multiplier(sigma, n, k - 1).  The
iteration of unit-constant series is the same diagonal action one index
over, plus an independent quadrature route used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import OperatorParams, multiplier_row, tau_coeffs, tau_inv_coeffs
from .series import (
    SchlichtSeries,
    TruncatedSeries,
    convolve,
    evaluate_grid,
    require_unit_constant,
)


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite Gauss-Legendre settings for the radial integral oracle.

    Panels shrink geometrically (ratio 1/2) toward the inner endpoint so
    that endpoint factors u**a with a > -1 are resolved to near machine
    accuracy; a uniform split cannot reach 1e-8 once a < 0.
    """

    panels: int = 64
    rule: str = "gauss-legendre-12"

    def __post_init__(self) -> None:
        if self.panels < 16:
            raise ValueError("need at least 16 panels")
        self.points()

    def points(self) -> int:
        head, _, tail = self.rule.rpartition("-")
        if head != "gauss-legendre" or not tail.isdigit() or int(tail) < 2:
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        return int(tail)


def _scaled_schlicht(f: SchlichtSeries, factors: np.ndarray) -> SchlichtSeries:
    c = f.coeffs.copy()
    c[2:] *= factors
    return SchlichtSeries(TruncatedSeries(c))


def apply_L(params: OperatorParams, f: SchlichtSeries) -> SchlichtSeries:
    """Raising operator: a_k -> a_k / multiplier(sigma, n, k - 1) for k >= 2.

    Same action as convolving with tau(sigma, 0) * tau_inv(sigma, n); the
    direct route keeps it to one division per coefficient.
    """
    if f.order < 2:
        return f
    row = multiplier_row(params.sigma, params.n, f.order - 1)
    return _scaled_schlicht(f, 1.0 / row)


def apply_l(params: OperatorParams, f: SchlichtSeries) -> SchlichtSeries:
    """Lowering operator: a_k -> a_k * multiplier(sigma, n, k - 1) for k >= 2."""
    if f.order < 2:
        return f
    row = multiplier_row(params.sigma, params.n, f.order - 1)
    return _scaled_schlicht(f, row)


def ruscheweyh(sigma: float, f: SchlichtSeries) -> SchlichtSeries:
    """Order-sigma derivative-type operator: Hadamard product with z / (1 - z)**(sigma + 1)."""
    if sigma <= -1.0:
        raise ValueError("require sigma > -1")
    t = tau_coeffs(OperatorParams(sigma, 0), f.order)
    return SchlichtSeries(convolve(f.inner, t))


def noor(sigma: float, f: SchlichtSeries) -> SchlichtSeries:
    """Integral-type companion: Hadamard product with the inverse kernel."""
    if sigma <= -1.0:
        raise ValueError("require sigma > -1")
    t = tau_inv_coeffs(OperatorParams(sigma, 0), f.order)
    return SchlichtSeries(convolve(f.inner, t))


def iterate_step_closed(sigma: float, m: int, p: TruncatedSeries) -> TruncatedSeries:
    """Single radial integration step in closed form: c_k -> (sigma - m + 1) / (sigma - m + 1 + k) c_k."""
    if m < 1 or sigma - (m - 1) <= 0.0:
        raise ValueError("step m needs m >= 1 and sigma - (m - 1) > 0")
    k = np.arange(1, p.order + 1)
    c = p.coeffs.copy()
    c[1:] *= (sigma - m + 1.0) / (sigma - m + 1.0 + k)
    return TruncatedSeries(c)


def iterate_closed(params: OperatorParams, p: TruncatedSeries) -> TruncatedSeries:
    """n-fold iterate of a unit-constant series: c_k -> multiplier(sigma, n, k) c_k."""
    require_unit_constant(p)
    if params.n == 0:
        return p
    row = multiplier_row(params.sigma, params.n, p.order)
    c = p.coeffs.copy()
    c[1:] *= row
    return TruncatedSeries(c)


def deiterate(params: OperatorParams, q: TruncatedSeries) -> TruncatedSeries:
    """Inverse of iterate_closed: divide coefficient k by multiplier(sigma, n, k)."""
    if params.n == 0:
        return q
    row = multiplier_row(params.sigma, params.n, q.order)
    c = q.coeffs.copy()
    c[1:] /= row
    return TruncatedSeries(c)


def iterate_quadrature_step(
    sigma: float,
    m: int,
    p_prev: TruncatedSeries,
    z: complex,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """One radial integration step evaluated by quadrature at a single point.

    The step sends p to (sigma - m + 1) z**-(sigma - m + 1) int_0^z t**(sigma - m) p(t) dt
    along the straight segment from 0.  Substituting t = u z cancels the
    principal-branch powers of z exactly and leaves the real-parameter
    integral (sigma - m + 1) int_0^1 u**(sigma - m) p(u z) du, which is what
    gets integrated here.  No coefficient multiplier enters, so the result
    is an independent check on the closed form.
    """
    if m < 1 or sigma - (m - 1) <= 0.0:
        raise ValueError("step m needs m >= 1 and sigma - (m - 1) > 0")
    z = complex(z)
    if z == 0:
        raise ValueError("z = 0 is excluded; the limiting value is p(0)")
    if abs(z) >= 1.0:
        raise ValueError("quadrature point must satisfy 0 < |z| < 1")
    cfg = QuadratureConfig() if cfg is None else cfg
    nodes, weights = np.polynomial.legendre.leggauss(cfg.points())
    alpha = sigma - m
    total = 0.0 + 0.0j
    hi = 1.0
    for j in range(cfg.panels):
        lo = 0.0 if j == cfg.panels - 1 else hi / 2.0
        mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
        u = mid + half * nodes
        total += half * np.sum(weights * u**alpha * evaluate_grid(p_prev, u * z))
        hi = lo
    return complex((sigma - m + 1.0) * total)


def salagean_iterate(alpha: float, n: int, p: TruncatedSeries) -> TruncatedSeries:
    """Single-parameter iterated transform: c_k -> (alpha / (alpha + k))**n c_k."""
    if alpha <= 0.0:
        raise ValueError("require alpha > 0")
    if int(n) != n or n < 0:
        raise ValueError("iteration count n must be a nonnegative integer")
    require_unit_constant(p)
    k = np.arange(1, p.order + 1)
    c = p.coeffs.copy()
    c[1:] *= (alpha / (alpha + k)) ** int(n)
    return TruncatedSeries(c)


def bernardi(c: float, f: SchlichtSeries) -> SchlichtSeries:
    """Weighted integral mean of a normalized series: a_k -> (c + 1) / (c + k) a_k."""
    if c + 1.0 <= 0.0:
        raise ValueError("require c > -1")
    k = np.arange(2, f.order + 1)
    return _scaled_schlicht(f, (c + 1.0) / (c + k))


def recurrence_residual(params: OperatorParams, p_n: TruncatedSeries, p_prev: TruncatedSeries) -> float:
    """Max coefficientwise residual of (lam + k) c_k(level n) == lam c_k(level n - 1).

    lam = sigma - (n - 1).  This is the differential recurrence tying each
    iterate to the previous one: lam p_n + z p_n' = lam p_prev, checked
    coefficient by coefficient so no evaluation tail enters.
    """
    if params.n < 1:
        raise ValueError("the recurrence needs n >= 1")
    lam = params.sigma - (params.n - 1)
    order = min(p_n.order, p_prev.order)
    k = np.arange(0, order + 1)
    lhs = (lam + k) * p_n.coeffs[: order + 1]
    rhs = lam * p_prev.coeffs[: order + 1]
    return float(np.max(np.abs(lhs - rhs)))

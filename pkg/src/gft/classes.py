"""Positive-real-part classes, their members, extremals, and sharp bounds.

Membership is decided on circle grids with an explicit truncation allowance:
a truncated member can dip below the threshold near the boundary purely
because of the dropped tail, so the boolean tests fail only when the margin
is negative by more than tail + tolerance.  All closed-form bounds pad
their partial sums outward by the exact (or dominating geometric) tail so
the returned intervals contain the untruncated values.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .kernels import OperatorParams, multiplier, multiplier_row
from .operators import apply_L, deiterate, iterate_closed
from .series import (
    HerglotzMixture,
    SchlichtSeries,
    TruncatedSeries,
    default_order,
    evaluate_grid,
    herglotz_expand,
    require_unit_constant,
    tail_bound,
)


@dataclass(frozen=True)
class ClassSpec:
    """Class label (sigma, n, beta): members have raised ratio with real part above beta."""

    params: OperatorParams
    beta: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.beta < 1.0:
            raise ValueError("beta must lie in [0, 1)")

    @property
    def sigma(self) -> float:
        return self.params.sigma

    @property
    def n(self) -> int:
        return self.params.n


@dataclass(frozen=True)
class CircleGrid:
    """Sampling grid for circle checks: radii, angular resolution, slack."""

    radii: tuple = (0.5, 0.9, 0.99)
    angular_samples: int = 720
    tolerance: float = 1e-9

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii or any(not 0.0 < r < 1.0 for r in radii):
            raise ValueError("radii must lie strictly between 0 and 1")
        if self.angular_samples < 16:
            raise ValueError("need at least 16 angular samples")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        object.__setattr__(self, "radii", radii)

    def describe(self) -> dict:
        return {
            "radii": list(self.radii),
            "angular_samples": self.angular_samples,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class MembershipResult:
    """Per-radius margins of a sampled real-part threshold test.

    observed[i] is (min sampled real part on circle i) - threshold; padded[i]
    adds the truncation-tail allowance for that radius plus the grid
    tolerance.  verdict is "fail" when some padded margin is negative,
    "pass" when every observed margin is already positive, and
    "inconclusive" in between, where the sign is a truncation artifact.
    The boolean view treats only decisive failures as False, so genuine
    members are never rejected for tail reasons.
    """

    radii: tuple
    observed: tuple
    padded: tuple
    verdict: str

    def __bool__(self) -> bool:
        return self.verdict != "fail"

    @property
    def margin(self) -> float:
        return min(self.padded)


def circle_points(r: float, samples: int) -> np.ndarray:
    """Equally spaced points on |z| = r, starting at the positive real axis."""
    theta = 2.0 * np.pi * np.arange(samples) / samples
    return r * np.exp(1j * theta)


def min_re_on_circle(s, r: float, samples: int) -> float:
    """Minimum sampled real part of the series on the circle |z| = r."""
    if not 0.0 < r < 1.0:
        raise ValueError("radius must lie strictly between 0 and 1")
    return float(np.min(evaluate_grid(s, circle_points(r, samples)).real))


def real_part_test(s, threshold: float, grid: CircleGrid | None = None, coeff_bound: float = 2.0) -> MembershipResult:
    """Threshold test Re s > threshold on every grid circle, tail-aware."""
    grid = CircleGrid() if grid is None else grid
    observed, padded = [], []
    for r in grid.radii:
        low = min_re_on_circle(s, r, grid.angular_samples)
        observed.append(low - threshold)
        padded.append(low - threshold + tail_bound(coeff_bound, s.order, r) + grid.tolerance)
    verdict = "fail" if any(p < 0.0 for p in padded) else (
        "pass" if all(o > 0.0 for o in observed) else "inconclusive"
    )
    return MembershipResult(tuple(grid.radii), tuple(observed), tuple(padded), verdict)


def membership_in_P(p: TruncatedSeries, beta: float = 0.0, grid: CircleGrid | None = None) -> MembershipResult:
    """Sampled test for real part above beta; coefficient bound 2 fixes the tail."""
    require_unit_constant(p)
    if not 0.0 <= beta < 1.0:
        raise ValueError("beta must lie in [0, 1)")
    return real_part_test(p, beta, grid)


def is_in_P_beta(p: TruncatedSeries, beta: float = 0.0, grid: CircleGrid | None = None) -> bool:
    return bool(membership_in_P(p, beta, grid))


def membership_in_iterated_P(q: TruncatedSeries, params: OperatorParams, grid: CircleGrid | None = None) -> MembershipResult:
    """Test for the iterated family: undo the iteration, then test real part > 0."""
    require_unit_constant(q)
    return real_part_test(deiterate(params, q), 0.0, grid)


def is_in_Pn_sigma(q: TruncatedSeries, params: OperatorParams, grid: CircleGrid | None = None) -> bool:
    return bool(membership_in_iterated_P(q, params, grid))


def p_series_of(f: SchlichtSeries, beta: float) -> TruncatedSeries:
    """Unit-constant series (f / z - beta) / (1 - beta) behind a class member."""
    if not 0.0 <= beta < 1.0:
        raise ValueError("beta must lie in [0, 1)")
    c = f.coeffs[1:] / (1.0 - beta)
    c[0] = 1.0
    return TruncatedSeries(c)


def member_from_p(spec: ClassSpec, p_iter: TruncatedSeries) -> SchlichtSeries:
    """Normalized series z (beta + (1 - beta) p) from an already-iterated unit-constant series."""
    require_unit_constant(p_iter)
    c = np.zeros(p_iter.order + 2, dtype=np.complex128)
    c[1] = 1.0
    c[2:] = (1.0 - spec.beta) * p_iter.coeffs[1:]
    return SchlichtSeries(TruncatedSeries(c))


def membership_in_B(f: SchlichtSeries, spec: ClassSpec, grid: CircleGrid | None = None) -> MembershipResult:
    """Class test through the iterated family: (f / z - beta) / (1 - beta) must pass it."""
    return membership_in_iterated_P(p_series_of(f, spec.beta), spec.params, grid)


def is_in_B(f: SchlichtSeries, spec: ClassSpec, grid: CircleGrid | None = None) -> bool:
    return bool(membership_in_B(f, spec, grid))


def membership_in_B_direct(f: SchlichtSeries, spec: ClassSpec, grid: CircleGrid | None = None) -> MembershipResult:
    """Route through the raising operator: Re((L f) / z) > beta on the grid.

    Must agree with membership_in_B: the two observed margins differ by the
    exact factor (1 - beta), and the tail allowances scale the same way.
    """
    g = apply_L(spec.params, f)
    ratio = TruncatedSeries(g.coeffs[1:])
    return real_part_test(ratio, spec.beta, grid, coeff_bound=2.0 * (1.0 - spec.beta))


def random_mixture(rng: np.random.Generator, max_atoms: int = 8) -> HerglotzMixture:
    """Random finite mixture of circle point masses with convex weights."""
    count = int(rng.integers(1, max_atoms + 1))
    angles = rng.uniform(0.0, 2.0 * np.pi, count)
    raw = rng.random(count) + 1e-9
    w = raw / raw.sum()
    w[-1] = 1.0 - float(w[:-1].sum())  # kill rounding drift before the convexity check
    return HerglotzMixture(tuple((complex(np.exp(1j * a)), float(wi)) for a, wi in zip(angles, w)))


def random_member_B(spec: ClassSpec, seed, order: int | None = None) -> SchlichtSeries:
    """Seeded random class member built from a mixture pushed through the iteration."""
    n = default_order() if order is None else int(order)
    rng = np.random.default_rng(seed)
    p0 = herglotz_expand(random_mixture(rng), n - 1)
    return member_from_p(spec, iterate_closed(spec.params, p0))


def inflate_to_non_member(spec: ClassSpec, seed, order: int | None = None, grid: CircleGrid | None = None) -> SchlichtSeries:
    """Doubles one early coefficient of a random member until membership decisively fails."""
    f = random_member_B(spec, seed, order)
    rng = np.random.default_rng((0xBAD, seed) if np.isscalar(seed) else (0xBAD, *seed))
    idx = int(rng.integers(2, min(7, f.order + 1)))
    c = np.array(f.coeffs)
    for _ in range(64):
        c[idx] = 2.0 * c[idx] if c[idx] != 0 else 1.0
        candidate = SchlichtSeries(TruncatedSeries(c))
        if not membership_in_B(candidate, spec, grid):
            return candidate
    raise RuntimeError("coefficient inflation failed to leave the class")


def extremal_B_upper(spec: ClassSpec, order: int | None = None) -> SchlichtSeries:
    """Member with every coefficient on its sharp bound: a_k = 2 (1 - beta) multiplier(sigma, n, k - 1)."""
    n = default_order() if order is None else int(order)
    row = multiplier_row(spec.sigma, spec.n, n - 1)
    c = np.zeros(n + 1, dtype=np.complex128)
    c[1] = 1.0
    c[2:] = 2.0 * (1.0 - spec.beta) * row
    return SchlichtSeries(TruncatedSeries(c))


def extremal_B_lower(spec: ClassSpec, order: int | None = None) -> SchlichtSeries:
    """Alternating-sign extremal; its modulus on the positive axis attains the lower growth bound."""
    n = default_order() if order is None else int(order)
    row = multiplier_row(spec.sigma, spec.n, n - 1)
    k = np.arange(2, n + 1)
    c = np.zeros(n + 1, dtype=np.complex128)
    c[1] = 1.0
    c[2:] = 2.0 * (1.0 - spec.beta) * row * (-1.0) ** (k - 1)
    return SchlichtSeries(TruncatedSeries(c))


def multiplier_tail(sigma: float, n: int, order: int, r: float) -> float:
    """Upper bound on sum_{k > order} multiplier(sigma, n, k) r**k.

    For n >= 0 the multipliers do not increase in k, so the geometric bound
    with the last computed value dominates.  For n = -1 the sum is evaluated
    exactly from the two classical geometric identities.
    """
    if n >= 0:
        return multiplier(sigma, n, order) * r ** (order + 1) / (1.0 - r)
    g = r ** (order + 1) / (1.0 - r)
    kg = r ** (order + 1) * ((order + 1) - order * r) / (1.0 - r) ** 2
    return ((sigma + 1.0) * g + kg) / (sigma + 1.0)


def growth_partials(spec: ClassSpec, r: float, order: int) -> tuple:
    """Lower/upper partial growth sums at radius r, plus the shared tail bound."""
    row = multiplier_row(spec.sigma, spec.n, order - 1)
    k = np.arange(2, order + 1)
    scale = 2.0 * (1.0 - spec.beta)
    upper = r + scale * float(np.sum(row * r**k))
    lower = r + scale * float(np.sum(row * (-1.0) ** (k - 1) * r**k))
    tail = scale * multiplier_tail(spec.sigma, spec.n, order - 1, r) * r
    return lower, upper, tail


def growth_bounds(spec: ClassSpec, r: float, order: int | None = None) -> tuple:
    """Sharp modulus envelope (lower, upper) for members at |z| = r, padded outward."""
    if not 0.0 < r < 1.0:
        raise ValueError("radius must lie strictly between 0 and 1")
    n = default_order() if order is None else int(order)
    lower, upper, tail = growth_partials(spec, r, n)
    return lower - tail, upper + tail


def covering_constant(spec: ClassSpec, tol: float = 1e-7) -> float:
    """Radius of the disk around 0 contained in every member image.

    Alternating series 1 + 2 (1 - beta) sum_{j >= 1} (-1)**j multiplier(sigma, n, j).
    Terms decrease to zero only for n >= 1, so n = 0 is rejected.  Summation
    stops once the first omitted term (which bounds the remainder) drops
    below tol.
    """
    if spec.n < 1:
        raise ValueError("the covering series diverges for n = 0")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    scale = 2.0 * (1.0 - spec.beta)
    total = 1.0
    start = 1
    chunk = 1_000_000
    while True:
        j = np.arange(start, start + chunk, dtype=np.float64)
        term = np.full(chunk, scale)
        for m in range(1, spec.n + 1):
            term *= (spec.sigma - m + 1.0) / (spec.sigma + j - m + 1.0)
        total += float(np.sum(np.where(j.astype(np.int64) % 2 == 0, term, -term)))
        if term[-1] < tol:
            return total
        start += chunk


def distortion_bounds(spec: ClassSpec, r: float, order: int | None = None) -> tuple:
    """Envelope (m, M) for |(sigma - n) f / z + f'| over the class at |z| = r.

    Both ends are lam * (1 + 2 (1 - beta) S(x)) with lam = sigma - (n - 1),
    S(x) = sum_{k >= 1} multiplier(sigma, n - 1, k) x**k, and x = -r, +r.
    The n = 0 case runs through the n = -1 multiplier extension.  Partial
    sums are padded outward so the interval contains the true pair.

    M is always a valid upper bound and is attained on the positive axis by
    the maximal-coefficient extremal.  m is a valid class-wide floor for
    n >= 1 (sharp, attained by the alternating extremal); for n = 0 it is
    the value the alternating extremal attains but not a floor, since there
    is no shallower iterate whose real-part bound would enforce it.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("radius must lie strictly between 0 and 1")
    n = default_order() if order is None else int(order)
    row = multiplier_row(spec.sigma, spec.n - 1, n)
    k = np.arange(1, n + 1)
    s_plus = float(np.sum(row * r**k))
    s_minus = float(np.sum(row * (-r) ** k))
    tail = multiplier_tail(spec.sigma, spec.n - 1, n, r)
    lam = spec.sigma - (spec.n - 1)
    scale = 2.0 * (1.0 - spec.beta)
    upper = lam * (1.0 + scale * (s_plus + tail))
    lower = lam * (1.0 + scale * (s_minus - tail))
    return lower, upper


BOUNDS_COLUMNS = (
    "sigma",
    "n",
    "beta",
    "r",
    "m_lower",
    "M_upper",
    "growth_lower",
    "growth_upper",
    "covering_constant",
)


def bounds_rows(specs, radii, order: int | None = None, covering_tol: float = 1e-7) -> list:
    """Closed-form bound table, one row per (spec, radius); covering blank for n = 0."""
    rows = []
    for spec in specs:
        cov = covering_constant(spec, covering_tol) if spec.n >= 1 else None
        for r in radii:
            m_lower, m_upper = distortion_bounds(spec, r, order)
            g_lower, g_upper = growth_bounds(spec, r, order)
            rows.append(
                {
                    "sigma": spec.sigma,
                    "n": spec.n,
                    "beta": spec.beta,
                    "r": float(r),
                    "m_lower": m_lower,
                    "M_upper": m_upper,
                    "growth_lower": g_lower,
                    "growth_upper": g_upper,
                    "covering_constant": cov,
                }
            )
    return rows


def write_bounds_csv(rows, stream) -> None:
    """Write bound rows as CSV with the fixed column order; None becomes empty."""
    writer = csv.DictWriter(stream, fieldnames=BOUNDS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: ("" if row[key] is None else repr(row[key])) for key in BOUNDS_COLUMNS})

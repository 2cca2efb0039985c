"""Truncated power series, disk convolution operators, and sharp-bound verification."""

from .classes import (
    CircleGrid,
    ClassSpec,
    MembershipResult,
    bounds_rows,
    covering_constant,
    distortion_bounds,
    extremal_B_lower,
    extremal_B_upper,
    growth_bounds,
    inflate_to_non_member,
    is_in_B,
    is_in_P_beta,
    is_in_Pn_sigma,
    membership_in_B,
    membership_in_B_direct,
    membership_in_P,
    membership_in_iterated_P,
    min_re_on_circle,
    random_member_B,
    write_bounds_csv,
)
from .kernels import (
    OperatorParams,
    extremal_iterate,
    multiplier,
    pochhammer,
    tau_coeffs,
    tau_inv_coeffs,
)
from .operators import (
    QuadratureConfig,
    apply_L,
    apply_l,
    bernardi,
    deiterate,
    iterate_closed,
    iterate_quadrature_step,
    iterate_step_closed,
    noor,
    recurrence_residual,
    ruscheweyh,
    salagean_iterate,
)
from .series import (
    HerglotzMixture,
    SchlichtSeries,
    TruncatedSeries,
    combine_convex,
    convolve,
    default_order,
    differentiate,
    evaluate,
    from_json,
    herglotz_expand,
    shift_to_beta,
    to_json,
)
from .verify import VerificationReport, check_injectivity_sampled, default_lattice, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "CircleGrid",
    "ClassSpec",
    "HerglotzMixture",
    "MembershipResult",
    "OperatorParams",
    "QuadratureConfig",
    "SchlichtSeries",
    "TruncatedSeries",
    "VerificationReport",
    "apply_L",
    "apply_l",
    "bernardi",
    "bounds_rows",
    "check_injectivity_sampled",
    "combine_convex",
    "convolve",
    "covering_constant",
    "default_lattice",
    "default_order",
    "deiterate",
    "differentiate",
    "distortion_bounds",
    "evaluate",
    "extremal_B_lower",
    "extremal_B_upper",
    "extremal_iterate",
    "from_json",
    "growth_bounds",
    "herglotz_expand",
    "inflate_to_non_member",
    "is_in_B",
    "is_in_P_beta",
    "is_in_Pn_sigma",
    "iterate_closed",
    "iterate_quadrature_step",
    "iterate_step_closed",
    "membership_in_B",
    "membership_in_B_direct",
    "membership_in_P",
    "membership_in_iterated_P",
    "min_re_on_circle",
    "multiplier",
    "noor",
    "pochhammer",
    "random_member_B",
    "recurrence_residual",
    "ruscheweyh",
    "run_all",
    "run_suite",
    "salagean_iterate",
    "shift_to_beta",
    "tau_coeffs",
    "tau_inv_coeffs",
    "to_json",
    "write_bounds_csv",
]

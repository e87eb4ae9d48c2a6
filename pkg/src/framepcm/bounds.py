"""Constants and two-sided bounds for the limiting error, plus rate fits.

The two-sided estimates for the 1-D integrals take the form

    lower_coef(eps) * delta^{s} / r^{s-1}  <=  |integral|  <=  upper_coef * delta^{s} / r^{s-1}

(s = n + 1/2 for the even sine power, s = n + 1 for the odd one), valid
for eps = frac(r/delta) inside a parity-specific window and r/delta above
an empirical threshold.  The classical fixed-phase coefficient kernels are

    M1(eps) = 4/5 |cos(2 pi eps - 3 pi/4)|   - 5/4 sum_{k>=2} k^{-(2n+1)/2}
    M2(eps) = 7/8 |cos(2 pi eps -   pi/2)|   - 8/7 sum_{k>=2} k^{-(n+1)}

Note a genuine subtlety verified numerically by this package: the cosine
phase of the leading Bessel term actually depends on the order
(omega = pi*order/2 + pi/4), so the fixed phases above only match orders n
of the right parity.  ``order_matched_phase=True`` switches both kernels
to the order-matched phase; with the fixed phase, the even-case lower
bound is empirically FALSE for n = 2 near eps = 3/8 (see the package
tests), while the order-matched variant never over-claims.  Both variants
are exposed, nothing is silently patched.

Zeta tails are evaluated with a certified partial-sum + integral-test
bracket.  ``scaling_slope_fit`` recovers the exponent (d+1)/2 of the sharp
decay rate from log-log sweeps at fixed eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from functools import lru_cache

import numpy as np

from .limit_error import Method, angular_constant, integral_even, integral_odd, limiting_error
from .quantization import QuantScheme

__all__ = [
    "BoundReport",
    "SandwichResult",
    "zeta_tail",
    "M1_constant",
    "M2_constant",
    "I_constant",
    "I_constant_sine_product",
    "lower_bound",
    "sandwich_check",
    "scaling_slope_fit",
    "EVEN_WINDOW",
    "ODD_WINDOW",
    "DEFAULT_R_MIN",
    "BOUND_CSV_FIELDS",
]

# eps-windows where the lower bounds are claimed, and the empirical
# "r/delta big enough" threshold (measured by sweeping R; below ~50 the
# asymptotic envelope slack is not yet dominant).
EVEN_WINDOW = (0.25, 0.5)
ODD_WINDOW = (1.0 / 6.0, 1.0 / 3.0)
DEFAULT_R_MIN = 50.0

# closed windows: membership must not flip on the float noise picked up
# when eps is reconstructed as frac(r/delta) at large r
_WINDOW_SLACK = 1e-9


def _in_window(eps: float, window) -> bool:
    return window[0] - _WINDOW_SLACK <= eps <= window[1] + _WINDOW_SLACK


@lru_cache(maxsize=None)
def zeta_tail(p: float, kmax: int = 10 ** 6) -> float:
    """sum_{k>=2} k^{-p} with a certified partial-sum + integral-test bracket.

    The bracket midpoint is returned; its half-width is ~kmax^{-p}/2,
    far below every tolerance used here.
    """
    if p <= 1:
        raise ValueError("tail diverges for p <= 1")
    ks = np.arange(2, kmax + 1, dtype=float)
    partial = float(np.sum(ks ** -p))
    lo = (kmax + 1) ** (1 - p) / (p - 1)
    hi = kmax ** (1 - p) / (p - 1)
    return partial + 0.5 * (lo + hi)


def M1_constant(eps: float, n: int, order_matched_phase: bool = False) -> float:
    """Even-case lower-bound kernel; may legitimately be negative outside
    the window [1/4, 1/2].  ``order_matched_phase`` replaces the fixed
    3 pi/4 phase by the order's own asymptotic phase (2n+1) pi/4."""
    if n < 2:
        raise ValueError("even-case kernel needs n >= 2")
    phase = (2 * n + 1) * math.pi / 4.0 if order_matched_phase else 3.0 * math.pi / 4.0
    return 0.8 * abs(math.cos(2 * math.pi * eps - phase)) - 1.25 * zeta_tail((2 * n + 1) / 2.0)


def M2_constant(eps: float, n: int, order_matched_phase: bool = False) -> float:
    """Odd-case lower-bound kernel on [1/6, 1/3]; order-matched phase is
    (n+1) pi/2 in place of the fixed pi/2."""
    if n < 1:
        raise ValueError("odd-case kernel needs n >= 1")
    phase = (n + 1) * math.pi / 2.0 if order_matched_phase else math.pi / 2.0
    return 0.875 * abs(math.cos(2 * math.pi * eps - phase)) - (8.0 / 7.0) * zeta_tail(n + 1.0)


def I_constant(d: int) -> float:
    """Angular constant lifting the 1-D integral bounds to the d-dim limit.

    Defined so that C * delta^{(d+1)/2} / r^{(d-1)/2} with
    C = (1-D coefficient) * I is literally a bound on the independently
    computed limiting error: I = d * c_d with c_d the exact surface-measure
    ratio.  See ``I_constant_sine_product`` for the other reading.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    return d * angular_constant(d)


def I_constant_sine_product(d: int) -> float:
    """The raw product-of-|sin|^p reading of the angular factor:
    d * prod_{p=1}^{d-3} int_0^{2pi} |sin|^p.

    Positive like ``I_constant`` but not normalized against the surface
    measure, so it does not reproduce the computed limit; both readings
    are reported by the CLI for transparency.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    out = float(d)
    for p in range(1, d - 2):
        # int_0^{2pi} |sin t|^p dt = 2 * Wallis integral over [0, pi]
        out *= 2.0 * math.sqrt(math.pi) * math.gamma((p + 1) / 2.0) / math.gamma(p / 2.0 + 1.0)
    return out


@dataclass(frozen=True)
class BoundReport:
    d: int
    r: float
    delta: float
    eps: float
    lower: float
    upper_scaling: float
    M: float
    I_const: float
    C_const: float
    window_ok: bool

    def to_dict(self) -> dict:
        return asdict(self)


BOUND_CSV_FIELDS = ["d", "r", "delta", "eps", "lower", "upper_scaling", "M",
                    "I_const", "C_const", "window_ok"]


def _parity_pieces(d: int):
    if d % 2 == 0:
        n = d // 2
        window = EVEN_WINDOW
    else:
        n = (d - 1) // 2
        window = ODD_WINDOW
    return n, window


def _even_coefs(eps: float, n: int, order_matched_phase: bool):
    base = math.factorial(n - 1) * math.comb(2 * n - 2, n - 1) / (2 ** (2 * n - 2) * math.pi ** n)
    low = base * M1_constant(eps, n, order_matched_phase)
    up = 1.25 * base * (1.0 + zeta_tail((2 * n + 1) / 2.0))
    return low, up


def _odd_coefs(eps: float, n: int, order_matched_phase: bool):
    base = math.factorial(n - 1) / math.pi ** (n + 1)
    low = base * M2_constant(eps, n, order_matched_phase)
    up = (8.0 / 7.0) * base * (1.0 + zeta_tail(n + 1.0))
    return low, up


def lower_bound(d: int, r: float, delta: float,
                order_matched_phase: bool = False) -> BoundReport:
    """Full report for the limiting-error lower bound at (d, r, delta).

    Outside the parity window the bound is not claimed: lower = 0 and
    window_ok = False (report, never extrapolate).
    """
    if d < 3:
        raise ValueError("need d >= 3")
    if not (r > 0 and delta > 0):
        raise ValueError("need r, delta > 0")
    R = r / delta
    eps = R - math.floor(R)
    n, window = _parity_pieces(d)
    if d % 2 == 0:
        low_c, up_c = _even_coefs(eps, n, order_matched_phase)
        M = M1_constant(eps, n, order_matched_phase)
    else:
        low_c, up_c = _odd_coefs(eps, n, order_matched_phase)
        M = M2_constant(eps, n, order_matched_phase)
    I = I_constant(d)
    scale = delta ** ((d + 1) / 2.0) / r ** ((d - 1) / 2.0)
    window_ok = _in_window(eps, window)
    lower = I * low_c * scale if window_ok and low_c > 0 else 0.0
    return BoundReport(
        d=d, r=r, delta=delta, eps=eps,
        lower=lower,
        upper_scaling=I * up_c * scale,
        M=M,
        I_const=I,
        C_const=I * low_c,
        window_ok=window_ok,
    )


@dataclass(frozen=True)
class SandwichResult:
    """Outcome of the two-sided check on a 1-D integral.

    ``status`` is "ok" when the hypotheses held and the check ran;
    otherwise it explains which hypothesis was unmet and ``holds`` is None.
    """

    lower: float
    upper: float
    integral_abs: float | None
    holds: bool | None
    status: str


def sandwich_check(r: float, delta: float, n: int, parity: str,
                   r_min: float = DEFAULT_R_MIN,
                   order_matched_phase: bool = False,
                   method=Method.QUADRATURE,
                   tol: float | None = None) -> SandwichResult:
    """Evaluate lower <= |integral| <= upper for the chosen parity.

    A negative lower coefficient (possible for the order-matched phase at
    unlucky eps) degrades the lower bound to 0, which is still an honest
    claim.  Window or threshold violations return a hypothesis-unmet
    status instead of a boolean.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    R = r / delta
    eps = R - math.floor(R)
    window = EVEN_WINDOW if parity == "even" else ODD_WINDOW
    if parity == "even" and n < 2:
        raise ValueError("even-case sandwich needs n >= 2")
    if parity == "odd" and n < 1:
        raise ValueError("odd-case sandwich needs n >= 1")
    if not _in_window(eps, window):
        return SandwichResult(math.nan, math.nan, None, None,
                              f"hypothesis unmet: eps={eps:.6g} outside window {window}")
    if R < r_min:
        return SandwichResult(math.nan, math.nan, None, None,
                              f"hypothesis unmet: R={R:.6g} below threshold {r_min}")
    if parity == "even":
        low_c, up_c = _even_coefs(eps, n, order_matched_phase)
        scale = delta ** (n + 0.5) / r ** (n - 0.5)
        integral = integral_even(r, delta, n, method=method, tol=tol)
    else:
        low_c, up_c = _odd_coefs(eps, n, order_matched_phase)
        scale = delta ** (n + 1) / r ** n
        integral = integral_odd(r, delta, n, method=method, tol=tol)
    lower = max(low_c, 0.0) * scale
    upper = up_c * scale
    val = abs(integral)
    return SandwichResult(lower, upper, val, bool(lower <= val <= upper), "ok")


def scaling_slope_fit(d: int, r: float, eps_fixed: float, k_range) -> float:
    """Least-squares slope of log(limiting error) vs log(delta).

    The sweep uses delta_k = r / (k + eps_fixed) so the fractional part is
    pinned to eps_fixed at every point; the expected slope is (d+1)/2.
    Requires eps_fixed inside the parity window and at least 4 points.
    """
    ks = [int(k) for k in k_range]
    if len(ks) < 4:
        raise ValueError("need at least 4 sweep points")
    _, window = _parity_pieces(d)
    if not _in_window(eps_fixed, window):
        raise ValueError(f"eps_fixed={eps_fixed} outside the parity window {window}")
    logs_d, logs_v = [], []
    for k in ks:
        delta = r / (k + eps_fixed)
        res = limiting_error(np.concatenate(([r], np.zeros(d - 1))), QuantScheme(delta))
        logs_d.append(math.log(delta))
        logs_v.append(math.log(res.value))
    slope, _ = np.polyfit(logs_d, logs_v, 1)
    return float(slope)

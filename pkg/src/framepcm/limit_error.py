"""The N -> infinity reconstruction error, computed three independent ways.

For an asymptotically equidistributed unit-norm tight frame sequence the
reconstruction error converges to

    lim E = d * || int_{S^{d-1}} Delta(x . z) z dnu(z) ||,

dnu the normalized surface measure and Delta the sawtooth quantization
error.  Rotating x onto the first axis reduces this to a 1-D integral:
with r = ||x||, n = d//2 (even d) or (d-1)//2 (odd d),

    lim E = d * c_d * | int_0^pi Delta(r cos t) cos t sin^{d-2} t dt |,

where c_d = Gamma(d/2)/(sqrt(pi) Gamma((d-1)/2)) is the ratio of the
surface measures of S^{d-2} and S^{d-1} (the constant is cross-validated
by the Monte Carlo route; for r < delta/2 the whole expression collapses
to exactly r, which pins it down).

The 1-D integral is computed two ways that check each other:

* QUADRATURE -- Gauss-Legendre on each smooth piece, the pieces cut at
  every jump cos t = delta(k+1/2)/r of the sawtooth;
* BESSEL_SERIES -- the closed form through the alternating Bessel sums
  (the Fourier expansion of the sawtooth composed with the finite
  cosine-projection identities), delegated to
  ``special_fn.alternating_bessel_sum``.

MONTE_CARLO integrates the sphere integral directly and is the coarse
referee for both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .quantization import QuantScheme, SignalSpec
from .special_fn import PrecisionExhausted, alternating_bessel_sum_info, gauss_legendre

__all__ = [
    "Method",
    "LimitErrorResult",
    "angular_constant",
    "integral_even",
    "integral_odd",
    "limiting_error",
    "monte_carlo_limit",
    "rotation_invariance_check",
    "LIMIT_CSV_FIELDS",
]

EPS = float(np.finfo(float).eps)

# default per-piece quadrature target and Monte Carlo sample count
DEFAULT_PIECE_TOL = 1e-10
DEFAULT_MC_SAMPLES = 10 ** 6


class Method(str, Enum):
    QUADRATURE = "quadrature"
    BESSEL_SERIES = "bessel_series"
    MONTE_CARLO = "monte_carlo"


def _as_method(method) -> Method:
    if isinstance(method, Method):
        return method
    return Method(str(method).lower())


@dataclass(frozen=True)
class LimitErrorResult:
    value: float
    method: Method
    error_estimate: float
    breakpoint_count: int | None = None
    truncation_K: int | None = None
    sample_count: int | None = None


LIMIT_CSV_FIELDS = ["r", "delta", "eps", "d", "method", "value", "error_estimate"]


def angular_constant(d: int) -> float:
    """c_d = (surface of S^{d-2}) / (surface of S^{d-1}); satisfies
    c_d * int_0^pi sin^{d-2} = 1."""
    if d < 2:
        raise ValueError("need d >= 2")
    return math.gamma(d / 2.0) / (math.sqrt(math.pi) * math.gamma((d - 1) / 2.0))


# ---------------------------------------------------------------------------
# piecewise quadrature route
# ---------------------------------------------------------------------------

def _breakpoints(r: float, delta: float) -> np.ndarray:
    """Jump locations of t |-> Delta(r cos t) in (0, pi), sorted ascending."""
    k_lo = math.floor(-r / delta - 0.5)
    k_hi = math.ceil(r / delta + 0.5)
    k = np.arange(k_lo, k_hi + 1, dtype=float)
    c = delta * (k + 0.5) / r
    c = c[(c > -1.0) & (c < 1.0)]
    return np.sort(np.arccos(c))


def _quad_integral(r: float, delta: float, sin_pow: int, tol: float | None):
    """Breakpoint-aware Gauss-Legendre for int_0^pi Delta(r cos t) cos t sin^p t dt.

    Doubles the per-piece rule until the summed inter-order disagreement
    meets the tolerance (``tol``; default DEFAULT_PIECE_TOL per piece).
    """
    pts = np.concatenate(([0.0], _breakpoints(r, delta), [math.pi]))
    widths = np.diff(pts)
    keep = widths > 1e-15
    lo = pts[:-1][keep]
    half = 0.5 * widths[keep]
    npieces = lo.size
    target = tol if tol is not None else DEFAULT_PIECE_TOL * npieces

    prev = None
    for order in (16, 32, 64, 128, 256, 512):
        nodes, weights = gauss_legendre(order)
        theta = lo[:, None] + half[:, None] * (nodes[None, :] + 1.0)
        u = r * np.cos(theta)
        f = (u - delta * np.floor(u / delta + 0.5)) * np.cos(theta) * np.sin(theta) ** sin_pow
        pieces = half * (f @ weights)
        val = math.fsum(pieces.tolist())
        if prev is not None:
            diff = abs(val - prev) + npieces * EPS * delta
            if diff <= target:
                return val, diff, npieces
        prev = val
    raise PrecisionExhausted(
        f"piecewise quadrature did not reach {target:.3e} (r={r}, delta={delta})"
    )


# ---------------------------------------------------------------------------
# Bessel-series route
# ---------------------------------------------------------------------------

def _even_prefactor(r: float, delta: float, n: int) -> float:
    return (
        -(1.0 / math.pi ** n)
        * (delta ** n / r ** (n - 1))
        * (math.pi / 2 ** (2 * n - 2))
        * math.comb(2 * n - 2, n - 1)
        * math.factorial(n - 1)
    )


def _odd_prefactor(r: float, delta: float, n: int) -> float:
    return -(math.factorial(n - 1) / math.pi ** n) * (delta ** (n + 0.5) / r ** (n - 0.5))


def _series_integral(r: float, delta: float, n: int, parity: str, tol: float | None):
    R = r / delta
    if parity == "even":
        prefac = _even_prefactor(r, delta, n)
        order = float(n)
        scale = delta ** (n + 0.5) / r ** (n - 0.5)
    else:
        prefac = _odd_prefactor(r, delta, n)
        order = n + 0.5
        scale = delta ** (n + 1) / r ** n
    total_tol = tol if tol is not None else 1e-10 * scale
    ev, trunc_k = alternating_bessel_sum_info(order, order, R, total_tol / abs(prefac))
    return prefac * ev.value, abs(prefac) * ev.abs_error_bound, trunc_k


def _integral_full(r, delta, n, parity, method, tol):
    """Returns (value, error_estimate, breakpoint_count, truncation_K)."""
    if not (r > 0 and delta > 0):
        raise ValueError("need r > 0 and delta > 0")
    if n < 1 or n != int(n):
        raise ValueError("need integer n >= 1")
    method = _as_method(method)
    if method == Method.QUADRATURE:
        sin_pow = 2 * n - 2 if parity == "even" else 2 * n - 1
        val, err, npieces = _quad_integral(r, delta, sin_pow, tol)
        return val, err, npieces, None
    if method == Method.BESSEL_SERIES:
        val, err, trunc_k = _series_integral(r, delta, int(n), parity, tol)
        return val, err, None, trunc_k
    raise ValueError(f"method {method} not available for the 1-D integrals")


def integral_even(r: float, delta: float, n: int, method=Method.QUADRATURE,
                  tol: float | None = None) -> float:
    """int_0^pi Delta(r cos t) cos t sin^{2n-2} t dt by the chosen route.

    With r/delta < 1/2 the quantizer is the identity and the single smooth
    piece gives the closed Beta-type value; QUADRATURE handles that case
    naturally.
    """
    return _integral_full(r, delta, n, "even", method, tol)[0]


def integral_odd(r: float, delta: float, n: int, method=Method.QUADRATURE,
                 tol: float | None = None) -> float:
    """int_0^pi Delta(r cos t) cos t sin^{2n-1} t dt by the chosen route."""
    return _integral_full(r, delta, n, "odd", method, tol)[0]


# ---------------------------------------------------------------------------
# the limiting error
# ---------------------------------------------------------------------------

def _as_signal(x, scheme: QuantScheme) -> SignalSpec:
    if isinstance(x, SignalSpec):
        return x
    return SignalSpec.from_vector(x, scheme)


def limiting_error(x, scheme: QuantScheme, method=Method.QUADRATURE,
                   tol: float | None = None) -> LimitErrorResult:
    """lim_{N->inf} reconstruction error for signal x and step delta.

    Reduces to d * c_d * |1-D integral| through the sphere-coordinate
    rotation; only ||x|| enters.  ``method`` selects the integral route;
    MONTE_CARLO delegates to :func:`monte_carlo_limit` with defaults.
    """
    sig = _as_signal(x, scheme)
    d = sig.dim
    if d < 2:
        raise ValueError("need dimension >= 2")
    method = _as_method(method)
    if method == Method.MONTE_CARLO:
        return monte_carlo_limit(sig, scheme, samples=DEFAULT_MC_SAMPLES, seed=0)
    if sig.r == 0.0:
        return LimitErrorResult(0.0, method, 0.0)
    if d % 2 == 0:
        n, parity = d // 2, "even"
    else:
        n, parity = (d - 1) // 2, "odd"
    val, err, npieces, trunc_k = _integral_full(sig.r, scheme.delta, n, parity, method, tol)
    cd = angular_constant(d)
    return LimitErrorResult(
        value=d * cd * abs(val),
        method=method,
        error_estimate=d * cd * err,
        breakpoint_count=npieces,
        truncation_K=trunc_k,
    )


def monte_carlo_limit(x, scheme: QuantScheme, samples: int, seed: int,
                      batch_size: int = 1 << 17) -> LimitErrorResult:
    """Direct Monte Carlo estimate d * ||(1/S) sum Delta(x . z_s) z_s||.

    Uniform sphere samples from normalized Gaussians; deterministic for a
    fixed (seed, batch_size) configuration.  ``error_estimate`` propagates
    the per-component standard errors to the norm as sqrt(sum sigma_i^2):
    |  ||mean_hat|| - ||mean||  | <= ||error vector||, whose rms is exactly
    that, so the estimate stays valid even when the true mean sits below
    the noise floor (where a delta-method estimate would undershoot).
    """
    if samples < 1000:
        raise ValueError("need samples >= 1000")
    sig = _as_signal(x, scheme)
    d = sig.dim
    rng = np.random.default_rng(seed)
    total = np.zeros(d)
    total_sq = np.zeros(d)
    done = 0
    while done < samples:
        m = min(batch_size, samples - done)
        z = rng.standard_normal((m, d))
        z /= np.linalg.norm(z, axis=1, keepdims=True)
        t = z @ sig.x
        delta_t = t - scheme.delta * np.floor(t / scheme.delta + 0.5)
        contrib = delta_t[:, None] * z
        total += contrib.sum(axis=0)
        total_sq += (contrib * contrib).sum(axis=0)
        done += m
    mean = total / samples
    var = np.maximum(total_sq / samples - mean * mean, 0.0) / samples
    norm = float(np.linalg.norm(mean))
    sigma = math.sqrt(float(var.sum()))
    return LimitErrorResult(
        value=d * norm,
        method=Method.MONTE_CARLO,
        error_estimate=d * sigma,
        sample_count=samples,
    )


def _random_rotation(d: int, rng) -> np.ndarray:
    a = rng.standard_normal((d, d))
    q, r = np.linalg.qr(a)
    return q * np.sign(np.diag(r))


def rotation_invariance_check(x, scheme: QuantScheme, rotations: int, seed: int,
                              method=Method.QUADRATURE, tol: float | None = None) -> float:
    """Max pairwise relative spread of limiting_error over random rotations of x.

    The limit depends on x only through its norm, so the spread must sit at
    the level of the integration tolerance.
    """
    if rotations < 2:
        raise ValueError("need at least 2 rotations")
    sig = _as_signal(x, scheme)
    rng = np.random.default_rng(seed)
    values = [limiting_error(sig, scheme, method, tol).value]
    for _ in range(rotations):
        qx = _random_rotation(sig.dim, rng) @ sig.x
        values.append(limiting_error(qx, scheme, method, tol).value)
    vmax, vmin = max(values), min(values)
    scale = max(abs(vmax), abs(vmin), 1e-300)
    return (vmax - vmin) / scale


def result_csv_row(sig: SignalSpec, scheme: QuantScheme, res: LimitErrorResult) -> dict:
    """Row for the documented limit CSV schema (see LIMIT_CSV_FIELDS)."""
    return {
        "r": sig.r,
        "delta": scheme.delta,
        "eps": sig.eps,
        "d": sig.dim,
        "method": res.method.value,
        "value": res.value,
        "error_estimate": res.error_estimate,
    }

"""Unit-norm frames on the sphere: constructions and diagnostics.

Three families cover the experiments: the 2-D harmonic frame (exactly
tight and equidistributed), i.i.d. uniform points on S^{d-1} (tight in
expectation, O(sqrt(d/N)) defect), and the spherical Fibonacci lattice on
S^2 (low-discrepancy, defect O(1/N) empirically).  Tightness is measured
by the Frobenius defect ||(d/N) sum e_j e_j^T - I||_F and equidistribution
by comparing empirical monomial moments against the exact sphere moments.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from itertools import product

import numpy as np

__all__ = [
    "UnitNormFrame",
    "harmonic_frame_2d",
    "random_sphere_frame",
    "fibonacci_sphere_frame",
    "equidistribution_diagnostic",
    "sphere_moment",
    "frame_to_csv",
    "frame_from_csv",
]

_NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class UnitNormFrame:
    """N unit vectors in R^d, stored as rows of ``vectors`` (N x d)."""

    dim: int
    count: int
    vectors: np.ndarray
    tightness_defect: float  # Frobenius norm of (d/N) sum e e^T - I

    def __post_init__(self):
        norms = np.linalg.norm(self.vectors, axis=1)
        if np.max(np.abs(norms - 1.0)) > _NORM_TOL:
            raise ValueError("frame vectors must be unit norm to 1e-12")


def _build(vectors: np.ndarray) -> UnitNormFrame:
    vectors = np.ascontiguousarray(vectors, dtype=float)
    N, d = vectors.shape
    gram = (d / N) * vectors.T @ vectors - np.eye(d)
    return UnitNormFrame(
        dim=d, count=N, vectors=vectors, tightness_defect=float(np.linalg.norm(gram))
    )


def harmonic_frame_2d(N: int) -> UnitNormFrame:
    """N equally spaced directions on the circle; exactly tight for N >= 3."""
    if N < 3:
        raise ValueError("need N >= 3")
    ang = 2.0 * math.pi * np.arange(N) / N
    return _build(np.column_stack([np.cos(ang), np.sin(ang)]))


def random_sphere_frame(d: int, N: int, seed: int) -> UnitNormFrame:
    """N i.i.d. uniform unit vectors (normalized Gaussians), reproducible per seed."""
    if d < 2:
        raise ValueError("need d >= 2")
    if N < d:
        raise ValueError("need N >= d")
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((N, d))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return _build(v)


def fibonacci_sphere_frame(N: int) -> UnitNormFrame:
    """Spherical Fibonacci lattice on S^2: near-uniform golden-angle spiral.

    z is equally spaced with 1/2 offset and the azimuth advances by the
    golden angle pi(3 - sqrt 5); empirically the tightness defect decays
    like 1/N.
    """
    if N < 3:
        raise ValueError("need N >= 3")
    i = np.arange(N, dtype=float)
    z = 1.0 - 2.0 * (i + 0.5) / N
    phi = i * math.pi * (3.0 - math.sqrt(5.0))
    s = np.sqrt(1.0 - z * z)
    return _build(np.column_stack([s * np.cos(phi), s * np.sin(phi), z]))


def sphere_moment(d: int, beta) -> float:
    """Exact moment int_{S^{d-1}} prod_i z_i^{beta_i} dnu (normalized measure).

    Zero when any exponent is odd; otherwise the product-of-Gamma closed
    form Gamma(d/2)/Gamma((d+|beta|)/2) * prod Gamma((b_i+1)/2)/Gamma(1/2).
    """
    beta = tuple(int(b) for b in beta)
    if len(beta) != d or any(b < 0 for b in beta):
        raise ValueError("beta must be d nonnegative integers")
    if any(b % 2 for b in beta):
        return 0.0
    total = sum(beta)
    out = math.gamma(d / 2.0) / math.gamma((d + total) / 2.0)
    for b in beta:
        out *= math.gamma((b + 1) / 2.0) / math.gamma(0.5)
    return out


def equidistribution_diagnostic(frame: UnitNormFrame, max_degree: int) -> float:
    """Worst monomial-moment discrepancy up to the given total degree.

    Returns max over 1 <= |beta| <= max_degree of
    |(1/N) sum_j e_j^beta - sphere_moment(d, beta)|.
    """
    if max_degree < 1:
        raise ValueError("need max_degree >= 1")
    d = frame.dim
    v = frame.vectors
    worst = 0.0
    for beta in product(range(max_degree + 1), repeat=d):
        total = sum(beta)
        if total == 0 or total > max_degree:
            continue
        emp = np.ones(frame.count)
        for i, b in enumerate(beta):
            if b:
                emp = emp * v[:, i] ** b
        worst = max(worst, abs(float(np.mean(emp)) - sphere_moment(d, beta)))
    return worst


# CSV layout: one unit vector per row, columns c0..c{d-1} in coordinate order.

def frame_to_csv(frame: UnitNormFrame, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"c{i}" for i in range(frame.dim)])
        for row in frame.vectors:
            writer.writerow([repr(float(x)) for x in row])


def frame_from_csv(path) -> UnitNormFrame:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[float(x) for x in row] for row in reader]
    vectors = np.asarray(rows, dtype=float)
    if vectors.ndim != 2 or vectors.shape[1] != len(header):
        raise ValueError("malformed frame CSV")
    return _build(vectors)

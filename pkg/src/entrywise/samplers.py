"""Random inputs: exact rational draws and PSD matrix samplers.

Exact draws use numerators uniform in [-9, 9] and denominators uniform in
[1, 9].  Floating PSD samples mix rescaled complex Wishart matrices, real
rank-one matrices from the open cube, and scaled correlation matrices; the
near-corner rank-one family probes sharpness of the threshold constants.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .backends import GaussianRational

NEAR_CORNER_DELTAS = (
    0.3,
    0.1,
    0.03,
    0.01,
    3e-3,
    1e-3,
    3e-4,
    1e-4,
    1e-5,
    1e-6,
)


def random_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    num = rng.randint(-9, 9)
    while nonzero and num == 0:
        num = rng.randint(-9, 9)
    return Fraction(num, rng.randint(1, 9))


def random_positive_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def random_gaussian_rational(rng: random.Random, nonzero: bool = False) -> GaussianRational:
    while True:
        value = GaussianRational(random_fraction(rng), random_fraction(rng))
        if not nonzero or value:
            return value


def random_fraction_vector(rng: random.Random, n: int, distinct: bool = False):
    out: list[Fraction] = []
    while len(out) < n:
        candidate = random_fraction(rng)
        if distinct and candidate in out:
            continue
        out.append(candidate)
    return out


def random_gaussian_rational_vector(rng: random.Random, n: int, distinct: bool = False):
    out: list[GaussianRational] = []
    while len(out) < n:
        candidate = random_gaussian_rational(rng)
        if distinct and candidate in out:
            continue
        out.append(candidate)
    return out


def wishart_disc(N: int, rho: float, rng: np.random.Generator) -> np.ndarray:
    """Complex Wishart sample rescaled so entries lie in the closed disc |z| <= rho."""
    B = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
    A = B @ B.conj().T
    scale = np.max(np.abs(A))
    return A * (rho / scale)


def rank_one_disc(N: int, rho: float, rng: np.random.Generator) -> np.ndarray:
    """Real rank-one u u^T with u drawn from the open cube (0, sqrt(rho))^N."""
    u = rng.uniform(0.0, np.sqrt(float(rho)), size=N)
    while np.any(u == 0.0):
        u = rng.uniform(0.0, np.sqrt(float(rho)), size=N)
    return np.outer(u, u)


def correlation_disc(N: int, rho: float, rng: np.random.Generator) -> np.ndarray:
    """Scaled correlation matrix: unit-diagonal Wishart normalization times rho."""
    B = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
    A = B @ B.conj().T
    d = np.sqrt(np.real(np.diag(A)))
    C = A / np.outer(d, d)
    return rho * C


def near_corner_rank_one(N: int, rho: float, deltas=NEAR_CORNER_DELTAS):
    """Rank-one samples u u^T with u_k = sqrt(rho) (1 - delta k / N), k = 1..N.

    Coordinates are pairwise distinct and approach the corner sqrt(rho)*(1,..,1)
    as delta -> 0; these witness near-extremal behaviour of the thresholds.
    """
    root = np.sqrt(float(rho))
    for delta in deltas:
        u = np.array([root * (1.0 - delta * k / N) for k in range(1, N + 1)])
        yield np.outer(u, u)


def psd_disc_samples(
    N: int,
    rho: float,
    count: int,
    rng: np.random.Generator,
    include_near_corner: bool = True,
):
    """Yield `count` PSD matrices with entries in the closed disc of radius rho.

    Deterministic near-corner rank-one samples come first (they are the hard
    cases for sharpness), then a seeded cycle of Wishart / rank-one /
    correlation draws.
    """
    emitted = 0
    if include_near_corner:
        for A in near_corner_rank_one(N, rho):
            if emitted >= count:
                return
            yield A
            emitted += 1
    kinds = (wishart_disc, rank_one_disc, correlation_disc)
    while emitted < count:
        sampler = kinds[emitted % len(kinds)]
        yield sampler(N, rho, rng)
        emitted += 1


def random_separated_complex(
    N: int,
    rng: np.random.Generator,
    min_abs: float = 0.4,
    max_abs: float = 1.1,
    separation: float = 0.15,
) -> np.ndarray:
    """Complex vector with moduli in [min_abs, max_abs] and pairwise separation.

    Keeps Vandermonde-type conditioning moderate so spectral and closed-form
    Rayleigh evaluations can agree to tight tolerances.
    """
    while True:
        r = rng.uniform(min_abs, max_abs, size=N)
        theta = rng.uniform(0.0, 2.0 * np.pi, size=N)
        u = r * np.exp(1j * theta)
        ok = True
        for i in range(N):
            for j in range(i + 1, N):
                if abs(u[i] - u[j]) < separation:
                    ok = False
        if ok:
            return u

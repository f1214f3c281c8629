"""Sharp threshold constants for polynomial positivity preservers in fixed dimension.

For f(z) = sum_{j<N} c_j z^j + c' z^M with positive c_j, applying f entrywise
preserves positive semidefiniteness of all N x N PSD matrices with entries in
the closed disc of radius rho exactly when c' >= -1/C(c; z^M; N, rho), where C
is the finite constant computed by :func:`threshold_constant`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .hadamard import entrywise_poly, h_matrix, hadamard_power
from .partitions import generalized_binomial, hook_partition
from .psd import psd_check
from .samplers import psd_disc_samples
from .schur import schur_eval

BOUNDARY_WIDTH = 1e-12


@dataclass(frozen=True)
class CoefficientTuple:
    """Positive lower-order coefficients c_0..c_{N-1} plus optional top coefficient."""

    c: tuple
    cprime: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.c) == 0:
            raise ValueError("at least one coefficient required")
        if any(not (x > 0) for x in self.c):
            raise ValueError("lower-order coefficients must be positive")

    def __len__(self) -> int:
        return len(self.c)


@dataclass
class ThresholdReport:
    constant: float
    partials: tuple
    verdict: Optional[str] = None
    witness: Optional[np.ndarray] = None


@dataclass
class PositivityVerdict:
    preserves: bool
    witness: Optional[np.ndarray]
    samples_checked: int
    worst_min_eigenvalue: float


def _coeffs(c) -> tuple:
    if isinstance(c, CoefficientTuple):
        return c.c
    return tuple(c)


def threshold_constant(c, M: int, N: int, rho):
    """C(c; z^M; N, rho) = sum_j binom(M,j)^2 binom(M-j-1,N-j-1)^2 rho^(M-j) / c_j.

    Generalized binomials make the formula valid for every M >= 0: when
    M < N only the j = M term survives and the value is exactly 1/c_M.
    Exact inputs (Fractions) give an exact value.
    """
    cs = _coeffs(c)
    if len(cs) != N:
        raise ValueError(f"need {N} coefficients, got {len(cs)}")
    if any(not (x > 0) for x in cs):
        raise ValueError("coefficients must be positive")
    if not (rho > 0):
        raise ValueError("rho must be positive")
    if M < 0:
        raise ValueError("exponent must be non-negative")
    total = 0
    for j in range(N):
        b = generalized_binomial(M, j) * generalized_binomial(M - j - 1, N - j - 1)
        if b == 0:
            continue
        total = total + b * b * rho ** (M - j) / cs[j]
    return total


def partial_constants(c, M: int, N: int, rho) -> tuple:
    """Constants C_m = C(c_(m); z^(M-N+m); m, rho) over trailing coefficient windows.

    c_(m) = (c_{N-m}, ..., c_{N-1}); each partial constant bounds the threshold
    for the corresponding lower-dimensional truncation, and the chain is
    strictly increasing in m with C_N the full constant.  Requires M >= N.
    """
    cs = _coeffs(c)
    if len(cs) != N:
        raise ValueError(f"need {N} coefficients, got {len(cs)}")
    if M < N:
        raise ValueError(f"need M >= N, got M={M}, N={N}")
    return tuple(
        threshold_constant(cs[N - m :], M - N + m, m, rho) for m in range(1, N + 1)
    )


def admissible(c, M: int, N: int, rho, cprime=None) -> bool:
    """True iff f = sum c_j z^j + cprime z^M preserves positivity on the disc class."""
    if cprime is None:
        if not isinstance(c, CoefficientTuple) or c.cprime is None:
            raise ValueError("cprime required, either inline or via CoefficientTuple")
        cprime = c.cprime
    if cprime >= 0:
        return True
    return cprime >= -1 / threshold_constant(c, M, N, rho)


def admissible_verdict(c, M: int, N: int, rho, cprime=None) -> str:
    """'admissible' / 'inadmissible' / 'boundary' for reporting.

    Values of cprime within 1e-12 (relative) of the exact threshold -1/C are
    labeled boundary rather than forced to a side.
    """
    if cprime is None:
        cprime = c.cprime
    bound = -1 / threshold_constant(c, M, N, rho)
    if abs(cprime - bound) <= BOUNDARY_WIDTH * max(1.0, abs(bound)):
        return "boundary"
    return "admissible" if admissible(c, M, N, rho, cprime) else "inadmissible"


def preserves_positivity_check(
    f: Mapping[int, float],
    N: int,
    rho,
    samples: int,
    tol: float = 1e-9,
    seed: int = 0,
) -> PositivityVerdict:
    """Sample PSD matrices with entries in the closed disc and test f[A] >= 0.

    Deterministic near-corner rank-one samples run first, then a seeded
    mixture of Wishart, rank-one, and correlation draws.  Returns the first
    violating matrix as witness if any.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    worst = np.inf
    checked = 0
    for A in psd_disc_samples(N, rho, samples, rng):
        F = entrywise_poly(f, A)
        F = np.asarray(F)
        w = np.linalg.eigvalsh((F + F.conj().T) / 2)
        scale = max(1.0, float(np.max(np.abs(w))) if w.size else 1.0)
        rel = float(w[0]) / scale
        worst = min(worst, rel)
        checked += 1
        if w[0] < -tol * scale:
            return PositivityVerdict(False, A, checked, rel)
    return PositivityVerdict(True, None, checked, worst)


def empirical_sharpness(c, M: int, N: int, rho, grid: int) -> float:
    """Empirical supremum of sum_j s_hook(M,N,j)(u)^2 / c_j over a rank-one grid.

    The grid walks u(delta)_k = sqrt(rho)(1 - delta k/N) along a nested
    geometric ladder of delta values (so refining the grid only enlarges the
    candidate set), with pairwise-distinct coordinates approaching the corner.
    Converges to threshold_constant from below as grid grows.
    """
    cs = _coeffs(c)
    if len(cs) != N:
        raise ValueError(f"need {N} coefficients, got {len(cs)}")
    if grid < 2:
        raise ValueError("grid must be at least 2")
    if M < N:
        # every distinct-coordinate rank-one point attains exactly 1/c_M
        return 1.0 / float(cs[M])
    root = float(rho) ** 0.5
    deltas = [2.0 ** (-k) for k in range(1, min(grid, 48) + 1)]
    if N == 1:
        # single coordinate: the closed cube corner itself is admissible
        deltas.append(0.0)
    hooks = [hook_partition(M, N, j) for j in range(N)]
    best = -np.inf
    for delta in deltas:
        u = [root * (1.0 - delta * k / N) for k in range(1, N + 1)]
        value = sum(
            float(schur_eval(hooks[j], u)) ** 2 / float(cs[j]) for j in range(N)
        )
        best = max(best, value)
    return float(best)


def horn_necessity_witness(
    f: Mapping[int, float],
    N: int,
    rho,
    budget: int = 20000,
    tol: float = 1e-9,
    seed: int = 0,
) -> Optional[np.ndarray]:
    """Search rank-one matrices for a positivity violation of entrywise f.

    When one of the first N nonzero coefficients of f is negative some
    rank-one u u^T with u in (0, sqrt(rho))^N must violate f[A] >= 0; the
    search sweeps geometric directions u_k = x q^(k-1) and then random draws.
    Returns the witness matrix or None if the budget is exhausted.
    """
    root = float(rho) ** 0.5
    tried = 0

    def violates(u):
        A = np.outer(u, u)
        F = np.asarray(entrywise_poly(f, A), dtype=float)
        w = np.linalg.eigvalsh((F + F.T) / 2)
        scale = max(1.0, float(np.max(np.abs(w))))
        return w[0] < -tol * scale, A

    xs = [root * s for s in (0.999, 0.9, 0.7, 0.5, 0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3)]
    qs = (0.999, 0.95, 0.9, 0.8, 0.6, 0.4, 0.2, 0.1, 0.05, 0.01)
    for x in xs:
        for q in qs:
            if tried >= budget:
                return None
            u = np.array([x * q**k for k in range(N)])
            tried += 1
            bad, A = violates(u)
            if bad:
                return A
    rng = np.random.default_rng(seed)
    while tried < budget:
        u = rng.uniform(0.0, root, size=N)
        if np.any(u == 0.0):
            continue
        tried += 1
        bad, A = violates(u)
        if bad:
            return A
    return None


def cross_dim_inequality_check(c, M: int, N: int, rho) -> bool:
    """C(c; z^M; N, rho) >= M * C((c_1, 2 c_2, ..., (N-1) c_{N-1}); z^(M-1); N-1, rho)."""
    cs = _coeffs(c)
    if N < 2:
        raise ValueError("need N >= 2")
    if M < N:
        raise ValueError(f"need M >= N, got M={M}, N={N}")
    left = threshold_constant(cs, M, N, rho)
    derived = tuple(k * cs[k] for k in range(1, N))
    right = M * threshold_constant(derived, M - 1, N - 1, rho)
    return left >= right


def _validate_disc_psd(A: np.ndarray, rho, tol: float) -> None:
    if not psd_check(A, tol):
        raise ValueError("matrix is not positive semidefinite within tolerance")
    limit = float(rho) * (1.0 + 1e-9) + tol
    if np.max(np.abs(A)) > limit:
        raise ValueError(f"entries exceed the closed disc of radius {rho}")


def lmi_check(c, M: int, rho, A: np.ndarray, tol: float = 1e-9) -> bool:
    """Loewner inequality A^(oM) <= C * sum_j c_j A^(oj) at the sharp constant."""
    A = np.asarray(A, dtype=complex)
    cs = _coeffs(c)
    N = A.shape[0]
    if len(cs) != N:
        raise ValueError(f"need {N} coefficients, got {len(cs)}")
    _validate_disc_psd(A, rho, tol)
    C = float(threshold_constant(cs, M, N, rho))
    F = C * np.asarray(h_matrix([float(x) for x in cs], A)) - hadamard_power(A, M)
    return psd_check(F, tol)


def pd_refinement_check(c, M: int, rho, A: np.ndarray, tol: float = 1e-9) -> bool:
    """Strict positive definiteness of (sum_j c_j A^(oj)) - (1/C) A^(oM).

    Requires N > 1 and some row of A with pairwise distinct entries (in
    particular A != rho * all-ones); under that hypothesis the boundary
    polynomial sends A to a positive definite matrix, not merely PSD.
    """
    A = np.asarray(A, dtype=complex)
    cs = _coeffs(c)
    N = A.shape[0]
    if N < 2:
        raise ValueError("need N >= 2")
    if len(cs) != N:
        raise ValueError(f"need {N} coefficients, got {len(cs)}")
    if M < N:
        raise ValueError(f"need M >= N, got M={M}, N={N}")
    _validate_disc_psd(A, rho, tol)
    scale = max(1.0, float(np.max(np.abs(A))))
    has_distinct_row = any(
        all(
            abs(A[i, j] - A[i, k]) > tol * scale
            for j in range(N)
            for k in range(j + 1, N)
        )
        for i in range(N)
    )
    if not has_distinct_row:
        raise ValueError("no row with pairwise distinct entries")
    C = float(threshold_constant(cs, M, N, rho))
    F = np.asarray(h_matrix([float(x) for x in cs], A)) - hadamard_power(A, M) / C
    F = (F + F.conj().T) / 2
    w = np.linalg.eigvalsh(F)
    return bool(w[0] > tol * max(1.0, float(np.max(np.abs(w)))))

"""Adjacency spectra and square energies (the eigenvalue pipeline)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import jacobi_eigenvalues
from .errors import NoConvergence, NonpositiveT, TooLarge
from .graphs import Graph

EIGEN_MAX_N = 2000
JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple  # sorted descending
    residual_bound: float  # final off-diagonal Frobenius norm
    n: int


@dataclass(frozen=True)
class SquareEnergies:
    s_plus: float
    s_minus: float
    delta: float
    zero_threshold: float


def adjacency_matrix(g: Graph) -> np.ndarray:
    A = np.zeros((g.n, g.n))
    for u, v in g.edges:
        A[u, v] = 1.0
        A[v, u] = 1.0
    return A


def eigenvalues_symmetric(g: Graph) -> Spectrum:
    """All adjacency eigenvalues via cyclic Jacobi sweeps."""
    if g.n < 1:
        raise TooLarge("need at least one vertex")
    if g.n > EIGEN_MAX_N:
        raise TooLarge(f"dense solver capped at n={EIGEN_MAX_N}, got {g.n}")
    A = adjacency_matrix(g)
    w, off, sweeps = jacobi_eigenvalues(A, JACOBI_MAX_SWEEPS)
    if off > 1e-14 * g.n:
        raise NoConvergence(
            f"Jacobi failed to converge in {sweeps} sweeps (off={off:.3e})",
            error_estimate=off,
        )
    return Spectrum(eigenvalues=tuple(float(x) for x in w), residual_bound=float(off), n=g.n)


def default_zero_threshold(s: Spectrum) -> float:
    lam1 = s.eigenvalues[0] if s.eigenvalues else 0.0
    return 1e-9 * max(1.0, lam1)


def square_energies(s: Spectrum, eps0: float | None = None) -> SquareEnergies:
    """Sums of squared positive / negative eigenvalues, |lam| <= eps0 dropped."""
    if eps0 is None:
        eps0 = default_zero_threshold(s)
    if eps0 < 0:
        raise ValueError("eps0 must be >= 0")
    s_plus = 0.0
    s_minus = 0.0
    for lam in s.eigenvalues:
        if lam > eps0:
            s_plus += lam * lam
        elif lam < -eps0:
            s_minus += lam * lam
    return SquareEnergies(s_plus=s_plus, s_minus=s_minus, delta=s_plus - s_minus,
                          zero_threshold=eps0)


def theta_eigen(s: Spectrum, t: float) -> float:
    """Sum of principal-branch arctan(lambda_i / t)."""
    if t <= 0:
        raise NonpositiveT(f"t must be positive, got {t}")
    return sum(math.atan(lam / t) for lam in s.eigenvalues)

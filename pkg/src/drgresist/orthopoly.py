"""Jacobi matrix, orthogonal polynomials and the spectral path to resistances.

On the stratification basis the adjacency matrix becomes a (d+1)x(d+1)
symmetric tridiagonal matrix with diagonal ``alpha_k = a_k`` and squared
off-diagonal ``omega_k = b_{k-1} c_k``. Its characteristic polynomial is the
monic ``Q_{d+1}``, its eigenvalues are the distinct eigenvalues of the
graph, and the squared first eigenvector components are the spectral masses
``m_i / N``.

The exact routines (``eval_Q``, ``eval_Q1``, ``stieltjes_cf``) work in
rationals. ``spectral_data`` and ``resistance_spectral`` are floating point
and exist to cross-check the exact recursion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .core import IntersectionArray
from .errors import DegreeOutOfRange, EigenFailure, PoleEncountered, StratumOutOfRange

__all__ = [
    "JacobiData",
    "SpectralData",
    "jacobi_coefficients",
    "eval_Q",
    "eval_Q1",
    "q_sequence",
    "stieltjes_cf",
    "spectral_data",
    "resistance_spectral",
    "eigenmatrix_P",
    "jacobi_matrix",
]


@dataclass(frozen=True)
class JacobiData:
    d: int
    alpha: tuple[Fraction, ...]  # alpha_0..alpha_d
    omega: tuple[Fraction, ...]  # omega_1..omega_d

    def omega_at(self, k: int) -> Fraction:
        return self.omega[k - 1]

    def omega_product(self, k: int) -> Fraction:
        """omega_1 * ... * omega_k (empty product is 1)."""
        return prod(self.omega[:k], start=Fraction(1))


def jacobi_coefficients(arr: IntersectionArray) -> JacobiData:
    alpha = tuple(Fraction(x) for x in arr.a)
    omega = tuple(Fraction(arr.b[k - 1] * arr.c[k - 1]) for k in range(1, arr.d + 1))
    return JacobiData(arr.d, alpha, omega)


def jacobi_matrix(jd: JacobiData) -> np.ndarray:
    """Dense float copy of the tridiagonal matrix (for inspection and tests)."""
    n = jd.d + 1
    J = np.diag(np.array([float(a) for a in jd.alpha]))
    beta = np.sqrt(np.array([float(w) for w in jd.omega]))
    J[np.arange(n - 1), np.arange(1, n)] = beta
    J[np.arange(1, n), np.arange(n - 1)] = beta
    return J


def q_sequence(jd: JacobiData, x, kmax: int | None = None) -> list:
    """[Q_0(x), ..., Q_kmax(x)] by forward three-term recursion.

    Generic over the number type of ``x``: rationals give exact values,
    floats or numpy arrays give floating point.
    """
    if kmax is None:
        kmax = jd.d + 1
    if not 0 <= kmax <= jd.d + 1:
        raise DegreeOutOfRange(f"degree must be in 0..{jd.d + 1}, got {kmax}")
    one = x * 0 + 1
    qs = [one]
    if kmax >= 1:
        qs.append(x - jd.alpha[0])
    for k in range(1, kmax):
        qs.append((x - jd.alpha[k]) * qs[k] - jd.omega[k - 1] * qs[k - 1])
    return qs


def eval_Q(jd: JacobiData, k: int, x) -> Fraction:
    """Monic Q_k at rational x; Q_{d+1} is the characteristic polynomial."""
    if not 0 <= k <= jd.d + 1:
        raise DegreeOutOfRange(f"Q_k needs 0 <= k <= {jd.d + 1}, got {k}")
    return q_sequence(jd, Fraction(x), k)[k]


def eval_Q1(jd: JacobiData, k: int, x) -> Fraction:
    """First associated polynomial: the recursion with coefficients shifted by one."""
    if not 0 <= k <= jd.d:
        raise DegreeOutOfRange(f"Q^(1)_k needs 0 <= k <= {jd.d}, got {k}")
    x = Fraction(x)
    prev, cur = Fraction(0), Fraction(1)
    for j in range(k):
        # Q1_{j+1} = (x - alpha_{j+1}) Q1_j - omega_{j+1} Q1_{j-1}
        w = jd.omega[j] if j >= 1 else 0
        prev, cur = cur, (x - jd.alpha[j + 1]) * cur - w * prev
    return cur


def stieltjes_cf(jd: JacobiData, x) -> Fraction:
    """Finite continued fraction 1/(x - a_0 - w_1/(x - a_1 - ... - w_d/(x - a_d)))."""
    x = Fraction(x)
    t = x - jd.alpha[jd.d]
    for k in range(jd.d - 1, -1, -1):
        if t == 0:
            raise PoleEncountered(f"continued fraction breaks down at level {k + 1} for x={x}")
        t = x - jd.alpha[k] - jd.omega[k] / t
    if t == 0:
        raise PoleEncountered(f"x={x} is a pole of the Stieltjes function")
    return 1 / t


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: tuple[float, ...]  # descending, eigenvalues[0] == valency
    masses: tuple[float, ...]
    multiplicities: tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "masses": list(self.masses),
            "multiplicities": list(self.multiplicities),
        }


def spectral_data(arr: IntersectionArray) -> SpectralData:
    jd = jacobi_coefficients(arr)
    diag = np.array([float(a) for a in jd.alpha])
    off = np.sqrt(np.array([float(w) for w in jd.omega]))
    try:
        vals, vecs = eigh_tridiagonal(diag, off)
    except LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    if not np.all(np.isfinite(vals)):
        raise EigenFailure("non-finite eigenvalues")
    order_ = np.argsort(vals)[::-1]
    vals = vals[order_]
    masses = vecs[0, order_] ** 2
    return SpectralData(
        tuple(float(v) for v in vals),
        tuple(float(b) for b in masses),
        tuple(float(arr.N * b) for b in masses),
    )


def _p_values(arr: IntersectionArray, jd: JacobiData, x: np.ndarray, m: int) -> np.ndarray:
    """P_m(x) from the monic Q_m: P_m = sqrt(kappa_m) Q_m / (beta_1...beta_m)."""
    alpha_f = JacobiData(jd.d, tuple(float(a) for a in jd.alpha), tuple(float(w) for w in jd.omega))
    q = q_sequence(alpha_f, x, m)[m]
    beta_prod = np.sqrt(float(jd.omega_product(m)))
    return np.sqrt(arr.kappa[m]) * q / beta_prod


def resistance_spectral(arr: IntersectionArray, m: int, spec: SpectralData | None = None) -> float:
    """R^(m) = (2/N) sum_{i != 0} m_i/(k - lambda_i) (1 - P_m(lambda_i)/k_m), in floats."""
    if not 1 <= m <= arr.d:
        raise StratumOutOfRange(f"stratum must be in 1..{arr.d}, got {m}")
    if spec is None:
        spec = spectral_data(arr)
    jd = jacobi_coefficients(arr)
    lam = np.array(spec.eigenvalues[1:])
    mult = np.array(spec.multiplicities[1:])
    p = _p_values(arr, jd, lam, m)
    k = arr.valency
    terms = mult / (k - lam) * (1.0 - p / arr.kappa[m])
    return float(2.0 / arr.N * terms.sum())


def eigenmatrix_P(arr: IntersectionArray, spec: SpectralData | None = None) -> np.ndarray:
    """First eigenmatrix: ``P[i, j] = P_i(lambda_j)``, eigenvalues in descending order."""
    if spec is None:
        spec = spectral_data(arr)
    jd = jacobi_coefficients(arr)
    lam = np.array(spec.eigenvalues)
    P = np.empty((arr.d + 1, arr.d + 1))
    for i in range(arr.d + 1):
        P[i] = _p_values(arr, jd, lam, i)
    return P

"""Dense complex-matrix substrate.

Everything above this module is expressed through a handful of primitives:
Hermitian eigendecomposition, the matrix exponential of a Hermitian
generator, Kronecker products, partial traces and Frobenius distances.
Matrices are plain complex numpy arrays; helpers here validate shape and
finiteness at the entry points.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .config import DIM_CAP, get_hbar
from .errors import DimensionMismatch, NoConvergence, NotHermitian

HERMITICITY_TOL = 1e-10


class HermEigen(NamedTuple):
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""

    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # orthonormal columns


def as_cmatrix(entries) -> np.ndarray:
    """Coerce to a complex 2-D array, checking finiteness and the size cap."""
    a = np.asarray(entries, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {a.shape}")
    if max(a.shape) > DIM_CAP:
        raise DimensionMismatch(f"dimension {max(a.shape)} exceeds cap {DIM_CAP}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def require_square(a: np.ndarray) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a.shape[0]


def hermiticity_defect(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - a.conj().T))


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    return hermiticity_defect(a) <= tol * max(1.0, float(np.linalg.norm(a)))


def herm_eig(a) -> HermEigen:
    """Eigendecomposition of a Hermitian matrix.

    Raises NotHermitian if the input fails the relative hermiticity check,
    NoConvergence if the underlying iteration does not converge.
    """
    a = as_cmatrix(a)
    require_square(a)
    if not is_hermitian(a):
        raise NotHermitian(f"hermiticity defect {hermiticity_defect(a):.3e}")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermEigen(eigenvalues=w, eigenvectors=v)


def mat_exp_herm_generator(h, t: float) -> np.ndarray:
    """exp(-i t h / hbar) for Hermitian h, via eigendecomposition.

    Computed spectrally rather than by series so the result is unitary
    up to roundoff.
    """
    w, v = herm_eig(h)
    phases = np.exp(-1j * t * w / get_hbar())
    return (v * phases) @ v.conj().T


def kron(a, b) -> np.ndarray:
    return np.kron(as_cmatrix(a), as_cmatrix(b))


def partial_trace(ab, dim_a: int, dim_b: int, over: str) -> np.ndarray:
    """Partial trace of a (dim_a * dim_b)-dimensional square matrix.

    `over` selects which factor to trace out: "A" or "B".
    """
    ab = as_cmatrix(ab)
    n = require_square(ab)
    if n != dim_a * dim_b:
        raise DimensionMismatch(f"dim {n} != {dim_a} * {dim_b}")
    t = ab.reshape(dim_a, dim_b, dim_a, dim_b)
    if over == "A":
        return np.einsum("ijil->jl", t)
    if over == "B":
        return np.einsum("ijkj->ik", t)
    raise ValueError(f"over must be 'A' or 'B', got {over!r}")


def frobenius_dist(a, b) -> float:
    a = as_cmatrix(a)
    b = as_cmatrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def unitarity_defect(u: np.ndarray) -> float:
    n = require_square(u)
    return float(np.linalg.norm(u.conj().T @ u - np.eye(n)))

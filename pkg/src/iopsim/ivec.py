"""Information vectors: phase-gauged agents for pure i-operators.

A vector carries an arbitrary overall phase that the operator it stands
for does not; a deterministic gauge (first non-negligible component made
real and positive) picks one representative so round trips are testable.
The vector is only an agent for the operator, not a state of anything.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotPure, ZeroVector
from .iop import InfoOperator, is_pure, validate

GAUGE_FLOOR = 1e-12


@dataclass(frozen=True)
class InfoVector:
    dim: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes.setflags(write=False)


def gauge_fix(amplitudes) -> InfoVector:
    """Normalize and rotate so the first component above the floor is real > 0."""
    v = np.asarray(amplitudes, dtype=complex).ravel()
    norm = float(np.linalg.norm(v))
    if norm < GAUGE_FLOOR:
        raise ZeroVector(f"norm {norm:.3e} below gauge floor")
    v = v / norm
    big = np.flatnonzero(np.abs(v) > GAUGE_FLOOR)
    if big.size:
        pivot = v[big[0]]
        v = v * (abs(pivot) / pivot)
    return InfoVector(dim=v.size, amplitudes=v)


def to_iop(v: InfoVector) -> InfoOperator:
    """|psi><psi|; any phase on the vector drops out."""
    return validate(np.outer(v.amplitudes, v.amplitudes.conj()))


def from_iop(rho: InfoOperator) -> InfoVector:
    """Gauge-fixed agent of a pure operator; its top eigenvector."""
    if not is_pure(rho):
        raise NotPure("only pure i-operators have a vector agent")
    w, vecs = rho.eig()
    return gauge_fix(vecs[:, -1])


def superpose(terms) -> InfoVector:
    """Normalized, gauge-fixed linear combination of (coefficient, vector)."""
    terms = list(terms)
    if not terms:
        raise ValueError("superposition needs at least one term")
    dims = {v.dim for _, v in terms}
    if len(dims) != 1:
        raise DimensionMismatch(f"vectors have mixed dims {sorted(dims)}")
    total = sum(complex(c) * v.amplitudes for c, v in terms)
    return gauge_fix(total)

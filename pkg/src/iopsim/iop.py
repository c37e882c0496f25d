"""Information-operator algebra.

An information operator (i-operator) is a Hermitian, unit-trace, positive
semidefinite matrix on a finite Hilbert space.  This module implements
validation, entropy, probabilistic decomposition, and the constructive
expansion/contraction machinery: any i-operator is a contraction of the
maximum one, and every component of a mixture is a contraction of the mix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    NotHermitian,
    NotPositive,
    ResultNotIOperator,
    SupportViolation,
    TraceNotOne,
)

HERM_TOL = 1e-10
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-10
SUPPORT_EIGENVALUE_FLOOR = 1e-10
SUPPORT_RESIDUAL_TOL = 1e-8


@dataclass(frozen=True)
class InfoOperator:
    """Validated i-operator. Construct through :func:`validate`."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)

    def eig(self) -> linalg.HermEigen:
        return linalg.herm_eig(self.matrix)


@dataclass(frozen=True)
class Contraction:
    """A contracting operator K: applying it as K rho K^dag shrinks rho."""

    k: np.ndarray
    source_dim: int
    target_dim: int


def validate(m) -> InfoOperator:
    """Validate a matrix as an i-operator.

    Eigenvalues in [-POSITIVITY_TOL, 0) are clamped to zero and the trace
    renormalized; anything below the tolerance raises NotPositive.  This
    keeps operators produced by long evolutions and Kraus maps usable
    without silently accepting genuinely indefinite matrices.
    """
    a = linalg.as_cmatrix(m)
    d = linalg.require_square(a)
    if linalg.hermiticity_defect(a) > HERM_TOL * max(1.0, float(np.linalg.norm(a))):
        raise NotHermitian(f"hermiticity defect {linalg.hermiticity_defect(a):.3e}")
    a = (a + a.conj().T) / 2
    tr = float(np.trace(a).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOne(f"trace {tr!r} differs from 1 by {abs(tr - 1.0):.3e}")
    w, v = np.linalg.eigh(a)
    if w[0] < -POSITIVITY_TOL:
        raise NotPositive(f"minimum eigenvalue {w[0]:.3e}")
    if w[0] < 0:
        w = np.clip(w, 0.0, None)
        a = (v * w) @ v.conj().T
        a = (a + a.conj().T) / 2
        a = a / float(np.trace(a).real)
    return InfoOperator(dim=d, matrix=a)


def max_iop(d: int) -> InfoOperator:
    """The maximum i-operator (1/d) I; it describes every d-dim system."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return InfoOperator(dim=d, matrix=np.eye(d, dtype=complex) / d)


def pure_iop(psi) -> InfoOperator:
    """|psi><psi| for a (not necessarily normalized) nonzero vector."""
    v = np.asarray(psi, dtype=complex).ravel()
    n = float(np.linalg.norm(v))
    if n == 0:
        raise ValueError("zero vector has no associated pure operator")
    v = v / n
    return InfoOperator(dim=v.size, matrix=np.outer(v, v.conj()))


def entropy(rho: InfoOperator) -> float:
    """-tr(rho log rho), with 0 log 0 = 0.  Lies in [0, log dim]."""
    w = np.linalg.eigvalsh(rho.matrix)
    w = np.clip(w, 0.0, None)
    nz = w[w > 0]
    return float(-np.sum(nz * np.log(nz)))


def is_pure(rho: InfoOperator, tol: float = 1e-9) -> bool:
    purity = float(np.trace(rho.matrix @ rho.matrix).real)
    return abs(purity - 1.0) <= tol


def contract(rho: InfoOperator, k: Contraction) -> InfoOperator:
    """K rho K^dag, validated.  Fails if K is not contracting for this rho."""
    if k.source_dim != rho.dim:
        raise DimensionMismatch(f"contraction source dim {k.source_dim} != {rho.dim}")
    out = k.k @ rho.matrix @ k.k.conj().T
    try:
        return validate(out)
    except (NotHermitian, TraceNotOne, NotPositive) as exc:
        raise ResultNotIOperator(
            f"K rho K^dag is not an i-operator for this rho: {exc}"
        ) from exc


def contraction_from_max(target: InfoOperator) -> Contraction:
    """K mapping the maximum i-operator to `target`: V diag(sqrt(lam d)) V^dag."""
    w, v = target.eig()
    d = target.dim
    scales = np.sqrt(np.clip(w, 0.0, None) * d)
    k = (v * scales) @ v.conj().T
    return Contraction(k=k, source_dim=d, target_dim=d)


def _support_basis(rho: InfoOperator) -> np.ndarray:
    w, v = rho.eig()
    return v[:, w > SUPPORT_EIGENVALUE_FLOOR]


def contraction_from_mixture(whole: InfoOperator, part: InfoOperator) -> Contraction:
    """K mapping a mixture to one of its components.

    Valid whenever `part` appears in some convex mixture equal to `whole`,
    which is checked operationally as support(part) within support(whole).
    Both spectra are taken in ascending order; eigenvalue ratios set the
    scale factors, with a zero factor wherever `whole` has (numerically)
    zero weight.
    """
    if whole.dim != part.dim:
        raise DimensionMismatch(f"dims differ: {whole.dim} vs {part.dim}")
    sup = _support_basis(whole)
    pw, pv = part.eig()
    for i in range(part.dim):
        if pw[i] <= SUPPORT_EIGENVALUE_FLOOR:
            continue
        vec = pv[:, i]
        residual = float(np.linalg.norm(vec - sup @ (sup.conj().T @ vec)))
        if residual > SUPPORT_RESIDUAL_TOL:
            raise SupportViolation(
                f"part eigenvector {i} lies outside the mixture's support "
                f"(residual {residual:.3e})"
            )
    ww, wv = whole.eig()
    ratios = np.zeros(whole.dim)
    ok = ww > SUPPORT_EIGENVALUE_FLOOR
    ratios[ok] = np.clip(pw[ok], 0.0, None) / ww[ok]
    k = (pv * np.sqrt(ratios)) @ wv.conj().T
    return Contraction(k=k, source_dim=whole.dim, target_dim=whole.dim)


@dataclass(frozen=True)
class Mixture:
    """Convex combination sum_i p_i rho_i of same-dimension i-operators."""

    weights: tuple
    components: tuple

    def __post_init__(self):
        ws = tuple(float(w) for w in self.weights)
        comps = tuple(self.components)
        if len(ws) != len(comps) or not comps:
            raise ValueError("weights and components must be nonempty and aligned")
        if any(w <= 0 for w in ws):
            raise ValueError("all mixture weights must be positive")
        if abs(sum(ws) - 1.0) > 1e-10:
            raise ValueError(f"weights sum to {sum(ws)!r}, not 1")
        dims = {c.dim for c in comps}
        if len(dims) != 1:
            raise DimensionMismatch(f"components have mixed dims {sorted(dims)}")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_unnormalized(cls, sigmas) -> "Mixture":
        """Build from unnormalized positive parts; weights are the traces."""
        sigmas = [linalg.as_cmatrix(s) for s in sigmas]
        weights = [float(np.trace(s).real) for s in sigmas]
        comps = [validate(s / w) for s, w in zip(sigmas, weights)]
        return cls(weights=tuple(weights), components=tuple(comps))

    def combined(self) -> InfoOperator:
        total = sum(w * c.matrix for w, c in zip(self.weights, self.components))
        return validate(total)


def decompose(rho: Mixture):
    """Return the (weight, component) pairs of a mixture.

    Each component describes the system with its weight as probability;
    re-mixing the pairs reproduces the combined operator exactly.
    """
    return list(zip(rho.weights, rho.components))

"""Measurement systems, observables, and outcome sampling.

A definitive measurement system is a labeled Kraus family {M^m} with
sum_m (M^m)^dag M^m = I, together with a real scale-value function f(m).
Outcome probabilities are tr(M rho M^dag); conditioning on an outcome
applies the corresponding map and renormalizes.  The observable is the
Hermitian combination sum_m f(m) (M^m)^dag M^m, whose trace against rho
reproduces the f-weighted outcome statistics.

Sampling uses numpy's seedable PCG64 generator.  For parallel sampling,
derive independent child seeds with numpy.random.SeedSequence(seed).spawn
rather than sharing one stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    NotDefinitive,
    NotHermitian,
    ZeroProbabilityOutcome,
)
from .iop import InfoOperator, validate
from .serialize import matrix_from_json, matrix_to_json

COMPLETENESS_TOL = 1e-9


@dataclass(frozen=True)
class MeasurementSystem:
    dim_s: int
    labels: tuple
    kraus: tuple          # one operator per label
    f: dict               # label -> real scale value

    def __post_init__(self):
        labels = tuple(self.labels)
        ops = tuple(linalg.as_cmatrix(k) for k in self.kraus)
        if len(labels) != len(ops) or not ops:
            raise ValueError("labels and Kraus operators must be nonempty and aligned")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        for k in ops:
            if k.shape != (self.dim_s, self.dim_s):
                raise DimensionMismatch(f"Kraus shape {k.shape} != dim {self.dim_s}")
            k.setflags(write=False)
        fmap = {m: float(self.f[m]) for m in labels} if self.f else {}
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "kraus", ops)
        object.__setattr__(self, "f", fmap)

    @classmethod
    def projective(cls, projectors: dict, f=None) -> "MeasurementSystem":
        """Measurement from an orthonormal projector family, label -> P."""
        labels = tuple(projectors)
        dim = linalg.require_square(linalg.as_cmatrix(next(iter(projectors.values()))))
        fmap = f if f is not None else {m: float(i) for i, m in enumerate(labels)}
        return cls(dim_s=dim, labels=labels,
                   kraus=tuple(projectors[m] for m in labels), f=fmap)

    def to_json(self) -> dict:
        return {
            "dim": self.dim_s,
            "labels": [str(m) for m in self.labels],
            "f": {str(m): self.f.get(m, 0.0) for m in self.labels},
            "kraus": [matrix_to_json(k) for k in self.kraus],
        }

    @classmethod
    def from_json(cls, obj) -> "MeasurementSystem":
        labels = tuple(obj["labels"])
        return cls(
            dim_s=int(obj["dim"]),
            labels=labels,
            kraus=tuple(matrix_from_json(k) for k in obj["kraus"]),
            f={m: float(obj["f"][m]) for m in labels},
        )


@dataclass(frozen=True)
class Observable:
    matrix: np.ndarray
    provenance: MeasurementSystem

    def __post_init__(self):
        if not linalg.is_hermitian(self.matrix):
            raise NotHermitian("observable must be Hermitian")
        self.matrix.setflags(write=False)


def completeness_defect(ms: MeasurementSystem) -> float:
    total = sum(k.conj().T @ k for k in ms.kraus)
    return float(np.linalg.norm(total - np.eye(ms.dim_s)))


def is_definitive(ms: MeasurementSystem, tol: float = COMPLETENESS_TOL) -> bool:
    return completeness_defect(ms) <= tol


def outcome_probabilities(ms: MeasurementSystem, rho: InfoOperator):
    """tr(M^m rho (M^m)^dag) per label; sums to 1 for definitive systems."""
    if rho.dim != ms.dim_s:
        raise DimensionMismatch(f"operator dim {rho.dim} != system dim {ms.dim_s}")
    return [
        (m, float(np.trace(k @ rho.matrix @ k.conj().T).real))
        for m, k in zip(ms.labels, ms.kraus)
    ]


def post_measurement_object(ms: MeasurementSystem, rho: InfoOperator, m) -> InfoOperator:
    """The description adopted once the scale value m is known."""
    if rho.dim != ms.dim_s:
        raise DimensionMismatch(f"operator dim {rho.dim} != system dim {ms.dim_s}")
    try:
        k = ms.kraus[ms.labels.index(m)]
    except ValueError:
        raise KeyError(f"unknown label {m!r}") from None
    out = k @ rho.matrix @ k.conj().T
    weight = float(np.trace(out).real)
    if weight <= 1e-12:
        raise ZeroProbabilityOutcome(f"outcome {m!r} has probability {weight:.3e}")
    return validate(out / weight)


def observable(ms: MeasurementSystem) -> Observable:
    """sum_m f(m) (M^m)^dag M^m for a definitive system.

    When every Kraus operator is a projector, the scale values are exactly
    the eigenvalues; in general they are not.
    """
    if not is_definitive(ms):
        raise NotDefinitive(f"completeness defect {completeness_defect(ms):.3e}")
    total = sum(ms.f[m] * k.conj().T @ k for m, k in zip(ms.labels, ms.kraus))
    total = (total + total.conj().T) / 2
    return Observable(matrix=total, provenance=ms)


def expectation(obs: Observable, rho: InfoOperator) -> float:
    if rho.dim != obs.matrix.shape[0]:
        raise DimensionMismatch(
            f"operator dim {rho.dim} != observable dim {obs.matrix.shape[0]}"
        )
    value = complex(np.trace(obs.matrix @ rho.matrix))
    if abs(value.imag) > 1e-10:
        raise ValueError(f"expectation has imaginary residue {value.imag:.3e}")
    return float(value.real)


def estimate_probabilities(ms: MeasurementSystem, rho: InfoOperator,
                           n: int, seed: int):
    """Empirical outcome frequencies from n independent draws.

    Deterministic given the seed.  Different seeds give different, equally
    valid, frequency descriptions.
    """
    if not is_definitive(ms):
        raise NotDefinitive(f"completeness defect {completeness_defect(ms):.3e}")
    if n < 1:
        raise ValueError(f"sample count must be positive, got {n}")
    probs = outcome_probabilities(ms, rho)
    p = np.clip(np.array([v for _, v in probs]), 0.0, None)
    p = p / p.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(n, p)
    return [(m, counts[i] / n) for i, (m, _) in enumerate(probs)]


def kraus_from_branches(branches, whole: InfoOperator, f=None) -> MeasurementSystem:
    """Canonical Kraus family realizing a branch decomposition of `whole`.

    For each branch (label m, weight p, object operator rho_m) this builds
    M^m = (p rho_m)^(1/2) whole^(-1/2) on the support of `whole`, so that
    M^m whole (M^m)^dag = p rho_m exactly and the family is complete on
    that support.  The eigenvalue-ratio contraction construction leaves the
    pairing free inside degenerate eigenspaces and need not be complete;
    this square-root form fixes the pairing canonically.
    """
    w, v = whole.eig()
    inv_sqrt = np.zeros_like(w)
    pos = w > 1e-12
    inv_sqrt[pos] = 1.0 / np.sqrt(w[pos])
    whole_m12 = (v * inv_sqrt) @ v.conj().T
    labels, kraus = [], []
    for br in branches:
        bw, bv = np.linalg.eigh(br.rho_s.matrix)
        root = (bv * np.sqrt(np.clip(bw, 0.0, None) * br.weight)) @ bv.conj().T
        labels.append(br.label)
        kraus.append(root @ whole_m12)
    fmap = f if f is not None else {m: float(i) for i, m in enumerate(labels)}
    return MeasurementSystem(dim_s=whole.dim, labels=tuple(labels),
                             kraus=tuple(kraus), f=fmap)

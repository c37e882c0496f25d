"""Condensation structures.

A condensation structure is a labeled family of mutually orthogonal
projectors summing to identity, valid over a declared time period.  While
the dynamics respects the structure (block-diagonal unitaries), the
probability of each label is a constant of the motion, and conditioning on
a label projects and renormalizes into that subspace.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components

from . import linalg
from .dynamics import UnitaryOp
from .errors import DimensionMismatch, ZeroProbabilityLabel
from .iop import InfoOperator, validate
from .serialize import matrix_from_json, matrix_to_json

PROJECTOR_TOL = 1e-10
CONDENSED_TOL = 1e-9
BLOCK_TOL = 1e-9


@dataclass(frozen=True)
class CondensationStructure:
    dim: int
    labels: tuple
    projectors: tuple   # of read-only complex arrays
    period: tuple       # (tau1, tau2)

    def __post_init__(self):
        labels = tuple(self.labels)
        projs = tuple(linalg.as_cmatrix(p) for p in self.projectors)
        if len(labels) != len(projs) or not projs:
            raise ValueError("labels and projectors must be nonempty and aligned")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        tau1, tau2 = float(self.period[0]), float(self.period[1])
        if not tau1 < tau2:
            raise ValueError(f"period must satisfy tau1 < tau2, got {self.period}")
        total = np.zeros((self.dim, self.dim), dtype=complex)
        for p in projs:
            if p.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"projector shape {p.shape} != dim {self.dim}")
            if np.linalg.norm(p @ p - p) > PROJECTOR_TOL or not linalg.is_hermitian(p):
                raise ValueError("projectors must be Hermitian and idempotent")
            total += p
        for i, p in enumerate(projs):
            for q in projs[i + 1:]:
                if np.linalg.norm(p @ q) > PROJECTOR_TOL:
                    raise ValueError("projectors must be mutually orthogonal")
        if np.linalg.norm(total - np.eye(self.dim)) > PROJECTOR_TOL:
            raise ValueError("projectors must sum to identity")
        for p in projs:
            p.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "projectors", projs)
        object.__setattr__(self, "period", (tau1, tau2))

    @classmethod
    def from_index_blocks(cls, dim, blocks, period=(0.0, 1.0)):
        """Structure whose subspaces are spans of basis-index groups.

        `blocks` maps label -> iterable of basis indices.
        """
        labels, projs = [], []
        for label, idx in blocks.items():
            p = np.zeros((dim, dim), dtype=complex)
            for j in idx:
                p[j, j] = 1.0
            labels.append(label)
            projs.append(p)
        return cls(dim=dim, labels=tuple(labels), projectors=tuple(projs),
                   period=period)

    def lift(self, dim_left: int) -> "CondensationStructure":
        """Same structure on a composite space, acting on the right factor."""
        eye = np.eye(dim_left, dtype=complex)
        return CondensationStructure(
            dim=dim_left * self.dim,
            labels=self.labels,
            projectors=tuple(np.kron(eye, p) for p in self.projectors),
            period=self.period,
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": [str(m) for m in self.labels],
            "period": list(self.period),
            "projectors": [matrix_to_json(p) for p in self.projectors],
        }

    @classmethod
    def from_json(cls, obj) -> "CondensationStructure":
        return cls(
            dim=int(obj["dim"]),
            labels=tuple(obj["labels"]),
            projectors=tuple(matrix_from_json(p) for p in obj["projectors"]),
            period=tuple(obj["period"]),
        )


def _check_dims(rho: InfoOperator, c: CondensationStructure):
    if rho.dim != c.dim:
        raise DimensionMismatch(f"operator dim {rho.dim} != structure dim {c.dim}")


def label_probabilities(rho: InfoOperator, c: CondensationStructure):
    """tr(P^m rho P^m) per label.

    The values sum to 1 whenever rho has no inter-subspace coherences; the
    raw traces are returned regardless.
    """
    _check_dims(rho, c)
    return [
        (m, float(np.trace(p @ rho.matrix @ p).real))
        for m, p in zip(c.labels, c.projectors)
    ]


def condition_on_label(rho: InfoOperator, c: CondensationStructure, m) -> InfoOperator:
    """P^m rho P^m, renormalized: the description after learning the label."""
    _check_dims(rho, c)
    try:
        p = c.projectors[c.labels.index(m)]
    except ValueError:
        raise KeyError(f"unknown label {m!r}") from None
    block = p @ rho.matrix @ p
    weight = float(np.trace(block).real)
    if weight <= 1e-12:
        raise ZeroProbabilityLabel(f"label {m!r} has weight {weight:.3e}")
    return validate(block / weight)


def block_projected(rho: InfoOperator, c: CondensationStructure) -> InfoOperator:
    """sum_m P^m rho P^m: rho with inter-subspace coherences removed."""
    _check_dims(rho, c)
    total = sum(p @ rho.matrix @ p for p in c.projectors)
    return validate(total)


def is_condensed_form(rho: InfoOperator, c: CondensationStructure,
                      tol: float = CONDENSED_TOL) -> bool:
    _check_dims(rho, c)
    total = sum(p @ rho.matrix @ p for p in c.projectors)
    return float(np.linalg.norm(rho.matrix - total)) <= tol


def respects_condensation(u: UnitaryOp, c: CondensationStructure,
                          tol: float = BLOCK_TOL) -> bool:
    """True iff u never couples distinct subspaces (block-diagonal).

    Under this criterion the label probabilities are invariants of the
    evolution.
    """
    if u.dim != c.dim:
        raise DimensionMismatch(f"unitary dim {u.dim} != structure dim {c.dim}")
    for i, p in enumerate(c.projectors):
        for j, q in enumerate(c.projectors):
            if i != j and np.linalg.norm(p @ u.matrix @ q) > tol:
                return False
    return True


def finest_respected_structure(u: UnitaryOp, candidate: CondensationStructure,
                               threshold: float = BLOCK_TOL) -> CondensationStructure:
    """Coarsen a candidate partition until the unitary respects it.

    Candidate blocks m, n are merged whenever ||P^m U P^n|| exceeds the
    threshold; merging follows connected components of that coupling graph.
    """
    if u.dim != candidate.dim:
        raise DimensionMismatch(f"unitary dim {u.dim} != structure dim {candidate.dim}")
    k = len(candidate.projectors)
    adj = np.zeros((k, k), dtype=bool)
    for i, p in enumerate(candidate.projectors):
        for j, q in enumerate(candidate.projectors):
            if i != j and np.linalg.norm(p @ u.matrix @ q) > threshold:
                adj[i, j] = adj[j, i] = True
    n_comp, comp = connected_components(adj, directed=False)
    labels, projs = [], []
    for g in range(n_comp):
        members = [i for i in range(k) if comp[i] == g]
        labels.append("+".join(str(candidate.labels[i]) for i in members))
        projs.append(sum(candidate.projectors[i] for i in members))
    return CondensationStructure(
        dim=candidate.dim, labels=tuple(labels), projectors=tuple(projs),
        period=candidate.period,
    )

"""Finite-dimensional information-operator simulation library."""

from .iop import (
    Contraction,
    InfoOperator,
    Mixture,
    contract,
    contraction_from_max,
    contraction_from_mixture,
    decompose,
    entropy,
    is_pure,
    max_iop,
    pure_iop,
    validate,
)

__all__ = [
    "Contraction",
    "InfoOperator",
    "Mixture",
    "contract",
    "contraction_from_max",
    "contraction_from_mixture",
    "decompose",
    "entropy",
    "is_pure",
    "max_iop",
    "pure_iop",
    "validate",
]

__version__ = "0.1.0"

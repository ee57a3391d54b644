"""First-order Shannon entropy and Onicescu informational energy."""

from __future__ import annotations

import math

from .corpus_core import EmptyInput, FrequencyTable

__all__ = ["entropy_bits", "informational_energy"]


def _probs(table: FrequencyTable) -> list[float]:
    if not table.total:
        raise EmptyInput("frequency table is empty")
    return [float(p) for p in table.probabilities.values() if p]


def entropy_bits(table: FrequencyTable) -> float:
    """``-sum p log2 p`` in bits; zero-probability symbols contribute nothing."""
    return math.fsum(-p * math.log2(p) for p in _probs(table)) + 0.0


def informational_energy(table: FrequencyTable) -> float:
    """``sum p**2``: 1/n for a uniform table over n symbols, 1 when degenerate."""
    return math.fsum(p * p for p in _probs(table))

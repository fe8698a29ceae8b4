"""Energy model for max d-cut clustering.

Cluster labels live on the unit circle at the d-th roots of unity; an edge
(i, j, w) contributes ``w * cos(2*pi*(s_i - s_j)/d)`` and a field weight
``h_i`` contributes ``h_i * cos(2*pi*s_i/d)``.  This is exactly the diagonal
of the Hermitian clock-matrix Hamiltonian

    sum_edges (w/2) (U_d^i U_d^j+ + U_d^i+ U_d^j) + sum_i (h_i/2) (U_d^i + U_d^i+)

so for d=2 the model reduces to the familiar +-1 Ising energy.  Energies are
always evaluated in this closed form; the tensor-product construction is
never materialized outside test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph

__all__ = [
    "DIGITS",
    "DEFAULT_DIAGONAL_LIMIT",
    "SizeLimitError",
    "Assignment",
    "EnergyModel",
    "cut_value",
    "hamiltonian_diagonal",
    "clock",
    "shift",
    "walsh",
    "qubo_to_ising",
    "ising_to_qubo",
]

DIGITS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"

# Refuse to enumerate more than this many basis states unless overridden.
DEFAULT_DIAGONAL_LIMIT = 1 << 28

_CHUNK = 1 << 20


class SizeLimitError(ValueError):
    """Raised when d**N exceeds the configured state-space limit."""


def _cos_turn(num: int, den: int) -> float:
    """cos(2*pi*num/den), exact at multiples of a quarter, third, and sixth turn.

    Golden energy values (+-1, +-0.5, 0) must come out exactly, not within
    float error of the generic cosine.
    """
    num %= den
    if 2 * num > den:
        num = den - num
    if num == 0:
        return 1.0
    if 2 * num == den:
        return -1.0
    if 4 * num == den:
        return 0.0
    if 3 * num == den:
        return -0.5
    if 6 * num == den:
        return 0.5
    return math.cos(2.0 * math.pi * num / den)


@dataclass(frozen=True)
class Assignment:
    """A base-d cluster assignment: one label in [0, d) per vertex.

    The canonical string form spells labels as base-d digits (0-9A-Z),
    vertex 0 leftmost / most significant.
    """

    labels: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"arity d must be >= 2, got {self.d}")
        labels = tuple(int(x) for x in self.labels)
        for x in labels:
            if not 0 <= x < self.d:
                raise ValueError(f"label {x} out of range [0, {self.d})")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        if self.d > len(DIGITS):
            raise ValueError(f"string form supports d <= {len(DIGITS)}")
        return "".join(DIGITS[x] for x in self.labels)

    @classmethod
    def from_string(cls, text: str, d: int) -> "Assignment":
        if d > len(DIGITS):
            raise ValueError(f"string form supports d <= {len(DIGITS)}")
        labels = []
        for ch in text.strip():
            value = DIGITS.find(ch.upper())
            if value < 0:
                raise ValueError(f"invalid label character {ch!r}")
            labels.append(value)
        return cls(tuple(labels), d)

    @classmethod
    def from_index(cls, index: int, n: int, d: int) -> "Assignment":
        """Decode basis-state index ``index`` into n base-d digits."""
        if not 0 <= index < d**n:
            raise ValueError(f"index {index} out of range for {n} base-{d} digits")
        labels = [0] * n
        for pos in range(n - 1, -1, -1):
            index, labels[pos] = divmod(index, d)
        return cls(tuple(labels), d)

    def to_index(self) -> int:
        index = 0
        for x in self.labels:
            index = index * self.d + x
        return index

    def shifted(self, c: int) -> "Assignment":
        """Globally shift every label by c modulo d."""
        return Assignment(tuple((x + c) % self.d for x in self.labels), self.d)


@dataclass(frozen=True)
class EnergyModel:
    """Classical energy function of the diagonal max d-cut Hamiltonian."""

    graph: Graph
    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"arity d must be >= 2, got {self.d}")

    @cached_property
    def _pair_values(self) -> np.ndarray:
        """Interaction energy per label difference: cos(2*pi*delta/d)."""
        return np.array([_cos_turn(delta, self.d) for delta in range(self.d)])

    @cached_property
    def _site_values(self) -> np.ndarray:
        """Field energy per label: cos(2*pi*label/d)."""
        return np.array([_cos_turn(label, self.d) for label in range(self.d)])

    def _check(self, assignment: Assignment) -> None:
        if assignment.d != self.d:
            raise ValueError(f"assignment arity {assignment.d} != model arity {self.d}")
        if len(assignment) != self.graph.num_vertices:
            raise ValueError(
                f"assignment length {len(assignment)} != "
                f"num_vertices {self.graph.num_vertices}"
            )

    def energy(self, assignment: Assignment) -> float:
        """Total energy of an assignment (lower means better clustering)."""
        self._check(assignment)
        labels = assignment.labels
        pair = self._pair_values
        site = self._site_values
        total = 0.0
        for i, j, w in self.graph.edges:
            total += w * pair[(labels[i] - labels[j]) % self.d]
        for i, h in enumerate(self.graph.fields):
            if h != 0.0:
                total += h * site[labels[i]]
        return float(total)


def cut_value(graph: Graph, assignment: Assignment) -> float:
    """Total weight of edges whose endpoints carry different labels."""
    if len(assignment) != graph.num_vertices:
        raise ValueError(
            f"assignment length {len(assignment)} != num_vertices {graph.num_vertices}"
        )
    labels = assignment.labels
    return float(sum(w for i, j, w in graph.edges if labels[i] != labels[j]))


def hamiltonian_diagonal(
    model: EnergyModel, max_states: int = DEFAULT_DIAGONAL_LIMIT
) -> np.ndarray:
    """All d**N diagonal Hamiltonian entries, indexed by basis state.

    Entry k is the energy of the assignment whose base-d digit string is k
    (vertex 0 most significant).  Work proceeds in fixed-size index chunks
    so memory stays bounded by the output array.
    """
    n = model.graph.num_vertices
    d = model.d
    size = d**n
    if size > max_states:
        raise SizeLimitError(f"d**N = {size} exceeds the limit of {max_states} states")
    pair = model._pair_values
    site = model._site_values
    out = np.zeros(size)
    for start in range(0, size, _CHUNK):
        stop = min(start + _CHUNK, size)
        indices = np.arange(start, stop, dtype=np.int64)
        digit_cache: dict[int, np.ndarray] = {}

        def digit(v: int) -> np.ndarray:
            if v not in digit_cache:
                digit_cache[v] = (indices // d ** (n - 1 - v)) % d
            return digit_cache[v]

        segment = out[start:stop]
        for i, j, w in model.graph.edges:
            segment += w * pair[(digit(i) - digit(j)) % d]
        for i, h in enumerate(model.graph.fields):
            if h != 0.0:
                segment += h * site[digit(i)]
    return out


def clock(d: int) -> np.ndarray:
    """Diagonal clock matrix diag(1, w, w**2, ...), w = exp(2*pi*i/d).

    Generalizes Pauli-Z; d=2 gives diag(1, -1).
    """
    if d < 2:
        raise ValueError(f"dimension d must be >= 2, got {d}")
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def shift(d: int) -> np.ndarray:
    """Cyclic shift matrix sum_j |j><(j+1) mod d|, generalizing Pauli-X."""
    if d < 2:
        raise ValueError(f"dimension d must be >= 2, got {d}")
    matrix = np.zeros((d, d), dtype=complex)
    rows = np.arange(d)
    matrix[rows, (rows + 1) % d] = 1.0
    return matrix


def walsh(d: int) -> np.ndarray:
    """Generalized Walsh-Hadamard matrix, entries w**(-r*c)/sqrt(d).

    Column 0 is the equal zero-phase superposition; d=2 gives the Hadamard.
    """
    if d < 2:
        raise ValueError(f"dimension d must be >= 2, got {d}")
    exponents = -np.outer(np.arange(d), np.arange(d))
    return np.exp(2j * np.pi * exponents / d) / math.sqrt(d)


def qubo_to_ising(bits: Sequence[int] | Iterable[int]) -> list[int]:
    """Map binary variables x in {0, 1} to spins s = 2x - 1."""
    spins = []
    for x in bits:
        if x not in (0, 1):
            raise ValueError(f"binary variable must be 0 or 1, got {x}")
        spins.append(2 * int(x) - 1)
    return spins


def ising_to_qubo(spins: Sequence[int] | Iterable[int]) -> list[int]:
    """Map spins s in {-1, +1} to binary variables x = (s + 1)/2."""
    bits = []
    for s in spins:
        if s not in (-1, 1):
            raise ValueError(f"spin variable must be -1 or +1, got {s}")
        bits.append((int(s) + 1) // 2)
    return bits

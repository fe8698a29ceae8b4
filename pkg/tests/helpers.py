"""Shared test utilities: random instances and independent oracles.

The oracles here deliberately avoid the library's evaluation paths: the
Hamiltonian oracle materializes explicit tensor products, the ground-state
oracle enumerates with plain ``math.cos``, and the qubit QAOA oracle builds
full 2**n x 2**n matrices.
"""

from __future__ import annotations

import itertools
import math
from functools import reduce

import numpy as np

from qudo import Graph, clock


def random_graph(rng, n, edge_prob=0.6, w_low=0.2, w_high=2.0, with_fields=False):
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                edges.append((i, j, float(rng.uniform(w_low, w_high))))
    fields = ()
    if with_fields:
        fields = tuple(float(rng.uniform(-1.0, 1.0)) for _ in range(n))
    return Graph(n, tuple(edges), fields)


def kron_diagonal_oracle(graph: Graph, d: int) -> np.ndarray:
    """Diagonal of the explicit tensor-product Hamiltonian (complex)."""
    n = graph.num_vertices
    U = clock(d)
    Ud = U.conj().T
    eye = np.eye(d, dtype=complex)

    def kron_chain(factors):
        return reduce(np.kron, factors, np.eye(1, dtype=complex))

    H = np.zeros((d**n, d**n), dtype=complex)
    for i, j, w in graph.edges:
        first = [eye] * n
        second = [eye] * n
        first[i], first[j] = U, Ud
        second[i], second[j] = Ud, U
        H += (w / 2.0) * (kron_chain(first) + kron_chain(second))
    for i, h in enumerate(graph.fields):
        if h != 0.0:
            first = [eye] * n
            second = [eye] * n
            first[i] = U
            second[i] = Ud
            H += (h / 2.0) * (kron_chain(first) + kron_chain(second))
    return np.diag(H).copy()


def brute_force_ground(graph: Graph, d: int, tol: float = 1e-9):
    """(ground energy, set of minimizing label tuples) by raw enumeration."""
    energies = []
    for labels in itertools.product(range(d), repeat=graph.num_vertices):
        e = 0.0
        for i, j, w in graph.edges:
            e += w * math.cos(2.0 * math.pi * ((labels[i] - labels[j]) % d) / d)
        for i, h in enumerate(graph.fields):
            e += h * math.cos(2.0 * math.pi * labels[i] / d)
        energies.append((labels, e))
    best = min(e for _, e in energies)
    winners = {labels for labels, e in energies if e <= best + tol * max(1.0, abs(best))}
    return best, winners


def qubit_qaoa_oracle(graph: Graph, gammas, betas) -> np.ndarray:
    """Qubit-only QAOA statevector: Pauli-Z cost, x-rotation mixer.

    Uses dense kron matrices end to end; agrees with the qudit pipeline at
    d=2 up to a global phase.
    """
    n = graph.num_vertices
    size = 2**n
    k = np.arange(size)
    spins = [1 - 2 * ((k >> (n - 1 - i)) & 1) for i in range(n)]
    diag = np.zeros(size)
    for i, j, w in graph.edges:
        diag = diag + w * spins[i] * spins[j]
    for i, h in enumerate(graph.fields):
        diag = diag + h * spins[i]

    state = np.full(size, 1.0 / math.sqrt(size), dtype=complex)
    for gamma, beta in zip(gammas, betas):
        state = np.exp(-1j * gamma * diag) * state
        rx = np.array(
            [
                [math.cos(beta), -1j * math.sin(beta)],
                [-1j * math.sin(beta), math.cos(beta)],
            ]
        )
        mixer = reduce(np.kron, [rx] * n, np.eye(1, dtype=complex))
        state = mixer @ state
    return state


def global_phase_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Max elementwise deviation after aligning b to a by one global phase."""
    overlap = np.vdot(a, b)
    if abs(overlap) == 0.0:
        return float(np.max(np.abs(a - b)))
    phase = overlap / abs(overlap)
    return float(np.max(np.abs(a - b * np.conj(phase))))


def cut_diagonal(graph: Graph, d: int) -> np.ndarray:
    """Cut value of every base-d assignment, indexed like the Hamiltonian."""
    n = graph.num_vertices
    k = np.arange(d**n, dtype=np.int64)
    digits = [(k // d ** (n - 1 - i)) % d for i in range(n)]
    out = np.zeros(d**n)
    for i, j, w in graph.edges:
        out += w * (digits[i] != digits[j])
    return out

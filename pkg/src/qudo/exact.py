"""Exhaustive ground-state search and degeneracy analysis.

Enumerates all d**N assignments, collects every minimizer, folds out the
global label-shift symmetry (bit complement for d=2), and, for binary
labels, extracts independently clusterable vertex sets from the XOR
structure of the degenerate ground states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import (
    DEFAULT_DIAGONAL_LIMIT,
    Assignment,
    EnergyModel,
    hamiltonian_diagonal,
)

__all__ = [
    "DEFAULT_CAP",
    "GROUND_TOL",
    "INCONSISTENT",
    "SubgraphDecomposition",
    "DegeneracyReport",
    "solve_exact",
    "reduce_duals",
    "independent_subgraphs",
]

DEFAULT_CAP = 4096

# Ground-state membership tolerance, relative to |ground energy|.  Energies
# are short sums of table values, so accumulation error sits far below this.
GROUND_TOL = 1e-9

# component_count value when the degeneracy count is not a power of two.
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class SubgraphDecomposition:
    """Independently clusterable structure recovered from ground-state XORs."""

    independent_vertex_set: frozenset[int]
    component_count: int | str
    pairwise_supports: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class DegeneracyReport:
    """Ground energy plus the full degeneracy structure of the minimizers.

    ``ground_states`` is capped; ``num_ground_states`` is always the exact
    total.  The decomposition fields are populated only for zero-field
    binary models, where the XOR analysis is defined.
    """

    ground_energy: float
    ground_states: tuple[Assignment, ...]
    num_ground_states: int
    reduced_states: tuple[Assignment, ...]
    independent_vertex_set: frozenset[int] | None = None
    component_count: int | str | None = None
    pairwise_supports: tuple[frozenset[int], ...] | None = None


def _check_uniform(states: Sequence[Assignment]) -> tuple[int, int]:
    d = states[0].d
    n = len(states[0])
    for s in states[1:]:
        if s.d != d or len(s) != n:
            raise ValueError("states mix arities or lengths")
    return n, d


def reduce_duals(
    states: Sequence[Assignment], zero_field: bool = True
) -> list[Assignment]:
    """Keep one representative per global-shift orbit.

    Two assignments are equivalent when one is the other with every label
    shifted by the same constant mod d (for d=2 this is the bit-complement
    dual).  The representative is the lexicographically smallest member
    present; output is sorted.  Without the zero-field symmetry the
    reduction does not apply and states are returned unchanged.
    """
    if not states:
        return []
    _, d = _check_uniform(states)
    if not zero_field:
        return list(states)
    orbits: dict[str, str] = {}
    for s in states:
        text = str(s)
        key = min(str(s.shifted(c)) for c in range(d))
        current = orbits.get(key)
        if current is None or text < current:
            orbits[key] = text
    return [Assignment.from_string(text, d) for text in sorted(orbits.values())]


def _support(a: Assignment, b: Assignment) -> frozenset[int]:
    return frozenset(v for v, (x, y) in enumerate(zip(a.labels, b.labels)) if x != y)


def independent_subgraphs(
    ground_states: Sequence[Assignment],
    reduced_states: Sequence[Assignment] | None = None,
    total_count: int | None = None,
) -> SubgraphDecomposition:
    """XOR analysis of degenerate binary ground states.

    Every unordered pair of dual-reduced ground states differs on a support
    set of vertices; the union of all supports is the set of vertices whose
    labels can flip without leaving the ground manifold.  When the total
    number of ground states is exactly 2**L the graph splits into L
    independently clusterable parts; otherwise ``component_count`` is the
    flag ``"inconsistent"``.
    """
    if not ground_states:
        raise ValueError("at least one ground state is required")
    _, d = _check_uniform(ground_states)
    if d != 2:
        raise ValueError(
            "subgraph extraction is binary-only: the XOR procedure is defined "
            f"on bitstrings, got d={d}"
        )
    if reduced_states is None:
        reduced = reduce_duals(ground_states)
    else:
        reduced = list(reduced_states)

    supports: set[frozenset[int]] = set()
    for a_idx in range(len(reduced)):
        for b_idx in range(a_idx + 1, len(reduced)):
            supports.add(_support(reduced[a_idx], reduced[b_idx]))
    ordered = tuple(sorted(supports, key=lambda s: (len(s), sorted(s))))
    union: frozenset[int] = frozenset().union(*ordered) if ordered else frozenset()

    total = len(ground_states) if total_count is None else total_count
    if total > 0 and total & (total - 1) == 0:
        component_count: int | str = total.bit_length() - 1
    else:
        component_count = INCONSISTENT
    return SubgraphDecomposition(union, component_count, ordered)


def solve_exact(
    model: EnergyModel,
    cap: int = DEFAULT_CAP,
    max_states: int = DEFAULT_DIAGONAL_LIMIT,
) -> DegeneracyReport:
    """Find the exact ground energy and every minimizer by enumeration.

    Minimizers are listed in lexicographic (basis-index) order, truncated at
    ``cap`` with the exact total always reported.  Membership uses
    ``GROUND_TOL`` relative to the ground energy.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    n = model.graph.num_vertices
    d = model.d
    diagonal = hamiltonian_diagonal(model, max_states=max_states)
    ground_energy = float(diagonal.min())
    tolerance = GROUND_TOL * max(1.0, abs(ground_energy))
    minimizers = np.flatnonzero(diagonal <= ground_energy + tolerance)
    num_ground_states = int(minimizers.size)
    stored = [Assignment.from_index(int(k), n, d) for k in minimizers[:cap]]

    zero_field = model.graph.zero_field
    reduced = reduce_duals(stored, zero_field=zero_field)

    if d == 2 and zero_field:
        decomposition = independent_subgraphs(
            stored, reduced_states=reduced, total_count=num_ground_states
        )
        return DegeneracyReport(
            ground_energy=ground_energy,
            ground_states=tuple(stored),
            num_ground_states=num_ground_states,
            reduced_states=tuple(reduced),
            independent_vertex_set=decomposition.independent_vertex_set,
            component_count=decomposition.component_count,
            pairwise_supports=decomposition.pairwise_supports,
        )
    return DegeneracyReport(
        ground_energy=ground_energy,
        ground_states=tuple(stored),
        num_ground_states=num_ground_states,
        reduced_states=tuple(reduced),
    )

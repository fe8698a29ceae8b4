"""Max d-cut graph clustering toolkit.

Clusters weighted graphs into d classes by minimizing a clock-matrix
energy model: exact ground-state enumeration with degeneracy analysis,
plus a dense qudit statevector simulator for the QAOA circuit.
"""

from .graph import (
    Graph,
    GraphFormatError,
    load_graph,
    parse_edge_list,
    parse_graph,
    to_dot,
    to_edge_list,
)
from .model import (
    Assignment,
    EnergyModel,
    SizeLimitError,
    clock,
    cut_value,
    hamiltonian_diagonal,
    ising_to_qubo,
    qubo_to_ising,
    shift,
    walsh,
)
from .exact import (
    DegeneracyReport,
    SubgraphDecomposition,
    independent_subgraphs,
    reduce_duals,
    solve_exact,
)
from .qaoa import (
    OptimizationResult,
    OptimizerConfig,
    QaoaParams,
    Statevector,
    apply_controlled_shift,
    apply_cost_layer_diagonal,
    apply_cost_layer_gates,
    apply_mixing_layer,
    apply_qudit_phases,
    apply_qudit_unitary,
    expectation,
    init_plus_state,
    mixer_matrix,
    optimize,
    phase_gate,
    run_ansatz,
    sample,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphFormatError",
    "load_graph",
    "parse_edge_list",
    "parse_graph",
    "to_dot",
    "to_edge_list",
    "Assignment",
    "EnergyModel",
    "SizeLimitError",
    "clock",
    "cut_value",
    "hamiltonian_diagonal",
    "ising_to_qubo",
    "qubo_to_ising",
    "shift",
    "walsh",
    "DegeneracyReport",
    "SubgraphDecomposition",
    "independent_subgraphs",
    "reduce_duals",
    "solve_exact",
    "OptimizationResult",
    "OptimizerConfig",
    "QaoaParams",
    "Statevector",
    "apply_controlled_shift",
    "apply_cost_layer_diagonal",
    "apply_cost_layer_gates",
    "apply_mixing_layer",
    "apply_qudit_phases",
    "apply_qudit_unitary",
    "expectation",
    "init_plus_state",
    "mixer_matrix",
    "optimize",
    "phase_gate",
    "run_ansatz",
    "sample",
    "__version__",
]

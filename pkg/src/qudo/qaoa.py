"""Dense qudit statevector simulation of the max d-cut QAOA circuit.

State preparation via Walsh-Hadamard on every qudit, a diagonal cost layer
exp(-i*gamma*H) (with an equivalent gate-level decomposition into
controlled-shift conjugated phase gates), and a Grover-diffusion style
single-qudit mixer.  Gates act by strided iteration over the amplitude
array; no d**n x d**n matrix is ever built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .model import (
    Assignment,
    EnergyModel,
    SizeLimitError,
    hamiltonian_diagonal,
    walsh,
)

__all__ = [
    "DEFAULT_AMPLITUDE_LIMIT",
    "Statevector",
    "QaoaParams",
    "OptimizerConfig",
    "OptimizationResult",
    "init_plus_state",
    "phase_gate",
    "mixer_matrix",
    "apply_qudit_unitary",
    "apply_qudit_phases",
    "apply_controlled_shift",
    "apply_cost_layer_diagonal",
    "apply_cost_layer_gates",
    "apply_mixing_layer",
    "expectation",
    "sample",
    "run_ansatz",
    "optimize",
]

DEFAULT_AMPLITUDE_LIMIT = 1 << 24


@dataclass(frozen=True)
class Statevector:
    """Dense amplitudes over d**n basis states, qudit 0 most significant."""

    n: int
    d: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.d**self.n,):
            raise ValueError(
                f"expected {self.d**self.n} amplitudes, got shape {amps.shape}"
            )
        object.__setattr__(self, "amplitudes", amps)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class QaoaParams:
    """Angles for a p-layer ansatz: one (gamma, beta) pair per layer."""

    p: int
    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"layer count p must be >= 1, got {self.p}")
        gammas = tuple(float(g) for g in self.gammas)
        betas = tuple(float(b) for b in self.betas)
        if len(gammas) != self.p or len(betas) != self.p:
            raise ValueError(
                f"expected {self.p} gammas and betas, got "
                f"{len(gammas)} and {len(betas)}"
            )
        if not all(map(math.isfinite, gammas + betas)):
            raise ValueError("angles must be finite")
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "betas", betas)

    @classmethod
    def from_vector(cls, theta: np.ndarray) -> "QaoaParams":
        if len(theta) % 2 != 0:
            raise ValueError("parameter vector must hold p gammas then p betas")
        p = len(theta) // 2
        return cls(p, tuple(theta[:p]), tuple(theta[p:]))

    def to_vector(self) -> np.ndarray:
        return np.array(self.gammas + self.betas)


@dataclass(frozen=True)
class OptimizerConfig:
    """Settings for the derivative-free parameter search."""

    grid_size: int = 24
    num_starts: int = 8
    max_evaluations_per_start: int = 500
    tolerance: float = 1e-6

    def __post_init__(self) -> None:
        if min(self.grid_size, self.num_starts, self.max_evaluations_per_start) < 1:
            raise ValueError("optimizer settings must all be >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


@dataclass(frozen=True)
class OptimizationResult:
    best_params: QaoaParams
    best_expectation: float
    trace: tuple[tuple[QaoaParams, float], ...] = field(repr=False)
    evaluations: int = 0


def init_plus_state(
    n: int, d: int, max_amplitudes: int = DEFAULT_AMPLITUDE_LIMIT
) -> Statevector:
    """Equal zero-phase superposition of all d**n basis states."""
    if d < 2:
        raise ValueError(f"arity d must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"qudit count must be non-negative, got {n}")
    size = d**n
    if size > max_amplitudes:
        raise SizeLimitError(f"d**n = {size} exceeds the limit of {max_amplitudes}")
    return Statevector(n, d, np.full(size, 1.0 / math.sqrt(size), dtype=complex))


def phase_gate(phases) -> np.ndarray:
    """Diagonal single-qudit gate diag(exp(i*phi_0), ..., exp(i*phi_{d-1}))."""
    return np.diag(np.exp(1j * np.asarray(phases, dtype=float)))


def mixer_matrix(d: int, beta: float) -> np.ndarray:
    """Single-qudit diffusion mixer W_d diag(e^{-2i*beta}, 1, ..., 1) W_d+."""
    w = walsh(d)
    phases = np.zeros(d)
    phases[0] = -2.0 * beta
    return w @ phase_gate(phases) @ w.conj().T


def _as_tensor(state: Statevector) -> np.ndarray:
    return state.amplitudes.reshape([state.d] * state.n)


def _check_qudit(state: Statevector, qudit: int) -> None:
    if not 0 <= qudit < state.n:
        raise ValueError(f"qudit index {qudit} out of range for n={state.n}")


def apply_qudit_unitary(state: Statevector, qudit: int, matrix: np.ndarray) -> Statevector:
    """Apply a d x d matrix to one qudit by contracting its axis."""
    _check_qudit(state, qudit)
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (state.d, state.d):
        raise ValueError(f"expected a {state.d}x{state.d} matrix, got {matrix.shape}")
    tensor = np.moveaxis(_as_tensor(state), qudit, 0)
    tensor = np.tensordot(matrix, tensor, axes=(1, 0))
    amps = np.moveaxis(tensor, 0, qudit).reshape(-1)
    return Statevector(state.n, state.d, amps)


def apply_qudit_phases(state: Statevector, qudit: int, phases) -> Statevector:
    """Multiply amplitudes by exp(i*phi_label) of one qudit's label."""
    _check_qudit(state, qudit)
    phases = np.asarray(phases, dtype=float)
    if phases.shape != (state.d,):
        raise ValueError(f"expected {state.d} phases, got shape {phases.shape}")
    shape = [1] * state.n
    shape[qudit] = state.d
    amps = (_as_tensor(state) * np.exp(1j * phases).reshape(shape)).reshape(-1)
    return Statevector(state.n, state.d, amps)


def apply_controlled_shift(
    state: Statevector, control: int, target: int, invert: bool = False
) -> Statevector:
    """Controlled shift: under control label k the target label m maps to
    (m - k) mod d; ``invert`` applies the adjoint (m + k) mod d."""
    _check_qudit(state, control)
    _check_qudit(state, target)
    if control == target:
        raise ValueError("control and target must differ")
    tensor = _as_tensor(state)
    out = np.empty_like(tensor)
    # Integer-indexing the control axis drops it, moving later axes down one.
    rolled_axis = target - 1 if target > control else target
    selector: list = [slice(None)] * state.n
    for k in range(state.d):
        selector[control] = k
        index = tuple(selector)
        out[index] = np.roll(tensor[index], k if invert else -k, axis=rolled_axis)
    return Statevector(state.n, state.d, out.reshape(-1))


def _check_model(state: Statevector, model: EnergyModel) -> None:
    if model.d != state.d or model.graph.num_vertices != state.n:
        raise ValueError(
            f"model shape (n={model.graph.num_vertices}, d={model.d}) does not "
            f"match state shape (n={state.n}, d={state.d})"
        )


def _phase_rotate(state: Statevector, gamma: float, energies: np.ndarray) -> Statevector:
    amps = state.amplitudes * np.exp(-1j * gamma * energies)
    return Statevector(state.n, state.d, amps)


def apply_cost_layer_diagonal(
    state: Statevector, gamma: float, model: EnergyModel
) -> Statevector:
    """Multiply each amplitude by exp(-i*gamma*E(s)); moduli are untouched."""
    _check_model(state, model)
    energies = hamiltonian_diagonal(model, max_states=state.amplitudes.size)
    return _phase_rotate(state, gamma, energies)


def apply_cost_layer_gates(
    state: Statevector, gamma: float, model: EnergyModel
) -> Statevector:
    """Gate-level cost layer, one block per edge plus field phases.

    Each edge (i, j, w) applies controlled-shift (control i, target j), a
    phase gate on j with phi_l = -gamma*w*cos(2*pi*l/d), then the inverse
    controlled-shift: between the shifts the target label reads the label
    difference, so the block phases basis state |s> by
    exp(-i*gamma*w*cos(2*pi*(s_i - s_j)/d)).  Nonzero field weights add the
    single-qudit phase exp(-i*gamma*h_i*cos(2*pi*l/d)) per vertex.
    """
    _check_model(state, model)
    pair = np.asarray(model._pair_values)
    site = np.asarray(model._site_values)
    for i, j, w in model.graph.edges:
        state = apply_controlled_shift(state, i, j)
        state = apply_qudit_phases(state, j, -gamma * w * pair)
        state = apply_controlled_shift(state, i, j, invert=True)
    for i, h in enumerate(model.graph.fields):
        if h != 0.0:
            state = apply_qudit_phases(state, i, -gamma * h * site)
    return state


def apply_mixing_layer(state: Statevector, beta: float) -> Statevector:
    """Apply the single-qudit diffusion mixer to every qudit."""
    matrix = mixer_matrix(state.d, beta)
    for qudit in range(state.n):
        state = apply_qudit_unitary(state, qudit, matrix)
    return state


def expectation(state: Statevector, model: EnergyModel) -> float:
    """Energy expectation sum_k |a_k|^2 E(s_k) of the diagonal Hamiltonian."""
    _check_model(state, model)
    energies = hamiltonian_diagonal(model, max_states=state.amplitudes.size)
    return float(state.probabilities() @ energies)


def sample(state: Statevector, shots: int, seed: int | None = 0) -> dict[str, int]:
    """Draw measurement counts from |amplitude|^2; deterministic per seed."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = state.probabilities()
    probs = probs / probs.sum()
    counts = np.random.default_rng(seed).multinomial(shots, probs)
    result: dict[str, int] = {}
    for index in np.flatnonzero(counts):
        key = str(Assignment.from_index(int(index), state.n, state.d))
        result[key] = int(counts[index])
    return result


def run_ansatz(
    model: EnergyModel,
    params: QaoaParams,
    gate_path: bool = False,
    max_amplitudes: int = DEFAULT_AMPLITUDE_LIMIT,
) -> Statevector:
    """Prepare the uniform state and alternate cost and mixing layers.

    ``gate_path`` selects the gate-level cost decomposition over the
    diagonal fast path; the results agree up to a global phase.
    """
    n = model.graph.num_vertices
    state = init_plus_state(n, model.d, max_amplitudes=max_amplitudes)
    energies = None
    if not gate_path:
        energies = hamiltonian_diagonal(model, max_states=state.amplitudes.size)
    for gamma, beta in zip(params.gammas, params.betas):
        if gate_path:
            state = apply_cost_layer_gates(state, gamma, model)
        else:
            state = _phase_rotate(state, gamma, energies)
        state = apply_mixing_layer(state, beta)
    return state


def optimize(
    model: EnergyModel,
    p: int = 1,
    config: OptimizerConfig | None = None,
    seed: int | None = 0,
    gate_path: bool = False,
    max_amplitudes: int = DEFAULT_AMPLITUDE_LIMIT,
) -> OptimizationResult:
    """Search for angles minimizing the energy expectation.

    p=1 scans a coarse (gamma, beta) grid over [-pi, pi)^2 and refines the
    best point with Nelder-Mead; p>1 runs seeded multi-start Nelder-Mead.
    Deterministic for a fixed seed and config.
    """
    if p < 1:
        raise ValueError(f"layer count p must be >= 1, got {p}")
    cfg = config or OptimizerConfig()
    n = model.graph.num_vertices
    size = model.d**n
    if size > max_amplitudes:
        raise SizeLimitError(f"d**n = {size} exceeds the limit of {max_amplitudes}")
    energies = hamiltonian_diagonal(model, max_states=size)
    uniform = init_plus_state(n, model.d, max_amplitudes=max_amplitudes)
    mixer_cache: dict[float, np.ndarray] = {}
    trace: list[tuple[QaoaParams, float]] = []

    def evaluate(theta: np.ndarray) -> float:
        params = QaoaParams.from_vector(np.asarray(theta, dtype=float))
        if gate_path:
            state = run_ansatz(model, params, gate_path=True, max_amplitudes=max_amplitudes)
        else:
            state = uniform
            for gamma, beta in zip(params.gammas, params.betas):
                state = _phase_rotate(state, gamma, energies)
                matrix = mixer_cache.get(beta)
                if matrix is None:
                    matrix = mixer_cache.setdefault(beta, mixer_matrix(model.d, beta))
                for qudit in range(n):
                    state = apply_qudit_unitary(state, qudit, matrix)
        value = float(state.probabilities() @ energies)
        if not math.isfinite(value):
            raise RuntimeError(f"non-finite expectation {value} at {params}")
        trace.append((params, value))
        return value

    if p == 1:
        points = np.linspace(-np.pi, np.pi, cfg.grid_size, endpoint=False)
        best_theta = None
        best_value = math.inf
        for gamma in points:
            for beta in points:
                value = evaluate(np.array([gamma, beta]))
                if value < best_value:
                    best_value = value
                    best_theta = np.array([gamma, beta])
        starts = [best_theta]
    else:
        rng = np.random.default_rng(seed)
        starts = list(rng.uniform(-np.pi, np.pi, size=(cfg.num_starts, 2 * p)))

    options = {
        "maxfev": cfg.max_evaluations_per_start,
        "xatol": cfg.tolerance,
        "fatol": cfg.tolerance,
        "disp": False,
    }
    for start in starts:
        minimize(evaluate, start, method="Nelder-Mead", options=options)

    values = [value for _, value in trace]
    best_index = int(np.argmin(values))
    best_params, best_value = trace[best_index]
    return OptimizationResult(
        best_params=best_params,
        best_expectation=best_value,
        trace=tuple(trace),
        evaluations=len(trace),
    )

"""Yes/no experiments, outcome sampling, schedules, and composite systems.

A measurement is a yes/no question whose mathematical content is a
projection P; "yes" happens with probability Tr(rho P) and updates the state
by the conditional rho' = P rho P / Tr(rho P), "no" by the complementary
projection 1 - P.  Schedules evolve each experiment's projection to its
measurement time before asking (the dynamics act on the observables, not on
the state).  Kronecker products, local embeddings, and partial traces cover
the composite systems needed for entangled-pair experiments.

Randomness comes from numpy's Philox counter-based generator.  A run is
keyed by a 64-bit seed; trial i of a multi-trial experiment uses the stream
Philox(key=seed).jumped(i), so trials are independent and the draw schedule
does not depend on how trials are distributed over workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    DIAGONAL,
    FULL,
    AlgebraContext,
    AlgebraElement,
    ContextMismatchError,
    Observable,
    PhaseSpace,
    Projection,
    complement,
    diagonal_context,
    full_context,
)
from .dynamics import Flow, Hamiltonian, heisenberg_evolve, koopman_evolve
from .states import P_FLOOR, State, condition, yes_probability


def make_generator(seed: int) -> np.random.Generator:
    """Root generator for a run (Philox, counter-based, 64-bit key)."""
    return np.random.Generator(np.random.Philox(key=int(seed)))


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial: the root stream jumped `trial` times."""
    return np.random.Generator(np.random.Philox(key=int(seed)).jumped(int(trial)))


@dataclass(frozen=True)
class YesNoExperiment:
    """A binary question ("Is the value of A in V?") with its projection."""

    label: str
    projection: Projection


@dataclass(frozen=True)
class Outcome:
    yes: bool
    probability: float  # pre-measurement probability of the realized answer

    def __post_init__(self):
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError(f"outcome probability {self.probability} outside [0, 1]")

    @property
    def answer(self) -> str:
        return "yes" if self.yes else "no"


@dataclass(frozen=True)
class ScheduleEntry:
    time: float
    experiment: YesNoExperiment


@dataclass(frozen=True)
class RecordEntry:
    time: float
    label: str
    outcome: Outcome
    post_state: State | None = None


@dataclass
class MeasurementRecord:
    """Audit trail of a measurement sequence: outcomes in schedule order."""

    seed: int | None
    entries: list = field(default_factory=list)
    final_state: State | None = None

    def outcomes(self) -> list:
        return [e.outcome.yes for e in self.entries]

    def all_yes(self) -> bool:
        return all(e.outcome.yes for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "entries": [
                {
                    "time": e.time,
                    "label": e.label,
                    "answer": e.outcome.answer,
                    "probability": e.outcome.probability,
                }
                for e in self.entries
            ],
        }


def perform(state: State, experiment: YesNoExperiment,
            rng: np.random.Generator) -> tuple[Outcome, State]:
    """Sample one yes/no experiment and condition the state on the result.

    Outcomes with probability at or below the floor (or at or above one minus
    it) are forced without consuming a draw, which keeps draw counts stable
    and avoids conditioning on impossible outcomes.
    """
    p = yes_probability(state, experiment.projection)
    if p <= P_FLOOR:
        yes = False
    elif p >= 1.0 - P_FLOOR:
        yes = True
    else:
        yes = bool(rng.random() < p)
    proj = experiment.projection if yes else complement(experiment.projection)
    post = condition(state, proj)
    return Outcome(yes=yes, probability=p if yes else 1.0 - p), post


def evolve_schedule(schedule, dynamics) -> list:
    """Evolve every entry's projection to its own time (observables move,
    the state does not).  With dynamics None the schedule is returned as-is."""
    if dynamics is None:
        return list(schedule)
    out = []
    for entry in schedule:
        if isinstance(dynamics, Hamiltonian):
            moved = heisenberg_evolve(entry.experiment.projection, dynamics, entry.time)
        elif isinstance(dynamics, Flow):
            moved = koopman_evolve(entry.experiment.projection, dynamics, int(entry.time))
        else:
            raise TypeError(f"dynamics must be a Hamiltonian or Flow, got {type(dynamics)!r}")
        out.append(ScheduleEntry(entry.time, YesNoExperiment(entry.experiment.label, moved)))
    return out


def run_sequence(state: State, schedule, dynamics=None, *, seed: int | None = None,
                 rng: np.random.Generator | None = None,
                 keep_snapshots: bool = False) -> MeasurementRecord:
    """Run a schedule of yes/no experiments, conditioning after each.

    Exactly one of `seed` (fresh Philox stream, recorded) or `rng` (caller
    supplies the stream, e.g. a per-trial jumped one) drives the draws.
    Deterministic given the stream.
    """
    if (seed is None) == (rng is None):
        raise ValueError("pass exactly one of seed or rng")
    if rng is None:
        rng = make_generator(seed)
    times = [e.time for e in schedule]
    if any(t2 < t1 for t1, t2 in zip(times, times[1:])):
        raise ValueError("schedule times must be non-decreasing")
    for entry in schedule:
        if entry.experiment.projection.context != state.context:
            raise ContextMismatchError(
                f"experiment {entry.experiment.label!r} lives in a different algebra"
            )

    record = MeasurementRecord(seed=seed)
    current = state
    for entry in evolve_schedule(schedule, dynamics):
        outcome, current = perform(current, entry.experiment, rng)
        record.entries.append(
            RecordEntry(entry.time, entry.experiment.label, outcome,
                        current if keep_snapshots else None)
        )
    record.final_state = current
    return record


def _tensor_contexts(contexts) -> AlgebraContext:
    kinds = {c.kind for c in contexts}
    if kinds == {FULL}:
        dim = int(np.prod([c.dim for c in contexts]))
        return full_context(dim)
    if kinds == {DIAGONAL}:
        labels = contexts[0].phase_space.points
        for c in contexts[1:]:
            labels = tuple(f"{a}⊗{b}" for a in labels for b in c.phase_space.points)
        return diagonal_context(PhaseSpace(labels))
    raise ValueError("cannot tensor full and diagonal algebras together")


def tensor(*items):
    """Kronecker product of contexts, states, or elements (all of one kind).

    Slot 0 is the leftmost factor: the basis vector e_i (x) e_j of the product
    has index i * dim_1 + j.  Products of projections are projections and
    products of states are states.
    """
    if not items:
        raise ValueError("tensor of nothing")
    if len(items) == 1:
        return items[0]
    first = items[0]
    if isinstance(first, AlgebraContext):
        if not all(isinstance(x, AlgebraContext) for x in items):
            raise TypeError("cannot tensor contexts with non-contexts")
        return _tensor_contexts(items)
    if isinstance(first, State):
        if not all(isinstance(x, State) for x in items):
            raise TypeError("cannot tensor states with non-states")
        ctx = _tensor_contexts([x.context for x in items])
        rho = items[0].rho
        for x in items[1:]:
            rho = np.kron(rho, x.rho)
        return State(ctx, rho)
    if isinstance(first, AlgebraElement):
        if not all(isinstance(x, AlgebraElement) for x in items):
            raise TypeError("cannot tensor elements with non-elements")
        ctx = _tensor_contexts([x.context for x in items])
        m = items[0].matrix
        for x in items[1:]:
            m = np.kron(m, x.matrix)
        if all(isinstance(x, Projection) for x in items):
            return Projection(ctx, m)
        if all(isinstance(x, Observable) for x in items):
            return Observable(ctx, m)
        return AlgebraElement(ctx, m)
    raise TypeError(f"cannot tensor values of type {type(first)!r}")


def embed_local(a: AlgebraElement, slot: int, dims) -> AlgebraElement:
    """Embed a one-factor element into a product algebra: 1 (x) ... A ... (x) 1.

    Embeddings into different slots commute.
    """
    dims = tuple(int(d) for d in dims)
    if not 0 <= slot < len(dims):
        raise ValueError(f"slot {slot} out of range for {len(dims)} factors")
    if a.context.kind != FULL:
        raise ValueError("local embedding is defined for full matrix algebras")
    if a.dim != dims[slot]:
        raise ValueError(f"element dimension {a.dim} does not match dims[{slot}]={dims[slot]}")
    m = np.eye(1, dtype=complex)
    for k, d in enumerate(dims):
        m = np.kron(m, a.matrix if k == slot else np.eye(d, dtype=complex))
    ctx = full_context(int(np.prod(dims)))
    if isinstance(a, (Projection, Observable)):
        return type(a)(ctx, m)
    return AlgebraElement(ctx, m)


def partial_trace(state: State, keep_slot: int, dims) -> State:
    """Reduced state of one factor of a product system.

    Expectations of locally embedded elements on the full state equal
    expectations of the bare elements on the reduction.
    """
    dims = tuple(int(d) for d in dims)
    if not 0 <= keep_slot < len(dims):
        raise ValueError(f"slot {keep_slot} out of range for {len(dims)} factors")
    if int(np.prod(dims)) != state.dim:
        raise ValueError(f"factor dimensions {dims} do not multiply to {state.dim}")
    k = len(dims)
    letters = "abcdefghijklmnop"
    if 2 * k > len(letters):
        raise ValueError("too many factors")
    row = list(letters[:k])
    col = [letters[k + i] if i == keep_slot else letters[i] for i in range(k)]
    spec = "".join(row) + "".join(col) + "->" + row[keep_slot] + col[keep_slot]
    reduced = np.einsum(spec, state.rho.reshape(dims + dims))
    return State(full_context(dims[keep_slot]), reduced)

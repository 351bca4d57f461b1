"""Executable measurement scenarios.

Each scenario wires the algebra, state, dynamics, and measurement machinery
into one quantitative experiment: sequential polarizers, precise and
coarse-window Zeno runs, an entangled-pair (EPR) experiment, a two-slit
which-path comparison, the three-observer P,Q,P sequence, and classical
control runs of the Zeno and EPR setups on the commutative algebra.

A scenario takes a parameter mapping, a trial count, and a 64-bit seed, and
returns a ScenarioResult: scalar summary statistics, sequence-valued series,
and (optionally) per-trial outcome records.  Trial i draws from the jumped
Philox stream `trial_generator(seed, i)`, so results are reproducible and
independent of any trial-level parallelism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    SIGMA_X,
    Observable,
    PhaseSpace,
    Projection,
    ValueSet,
    characteristic_projection,
    diagonal_context,
    full_context,
    spectral_projection,
)
from .dynamics import Flow, Hamiltonian, schrodinger_state
from .measurement import (
    ScheduleEntry,
    YesNoExperiment,
    embed_local,
    evolve_schedule,
    partial_trace,
    perform,
    run_sequence,
    tensor,
    trial_generator,
)
from .states import (
    State,
    ZeroProbabilityError,
    classical_state,
    condition,
    expectation,
    pure_state,
    state_distance,
    yes_probability,
)


class UnknownScenarioError(ValueError):
    """Requested scenario name is not in the registry."""


class ParameterError(ValueError):
    """Scenario parameters fail validation against the schema."""


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str  # number | integer | string | number_list | complex_list
    default: object
    description: str
    choices: tuple = None

    def schema(self) -> dict:
        out = {"name": self.name, "type": self.kind,
               "default": _echo(self.default), "description": self.description}
        if self.choices:
            out["choices"] = list(self.choices)
        return out


@dataclass
class ScenarioResult:
    scenario: str
    parameters: dict
    seed: int
    trials: int
    summary: dict
    series: dict = field(default_factory=dict)
    trial_records: list | None = None

    def to_dict(self) -> dict:
        out = {
            "scenario": self.scenario,
            "parameters": self.parameters,
            "seed": self.seed,
            "trials": self.trials,
            "summary": self.summary,
            "series": self.series,
        }
        if self.trial_records is not None:
            out["trial_records"] = self.trial_records
        return out


def _echo(value):
    """Canonical JSON-safe form of a parameter value."""
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_echo(v) for v in value]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def _coerce(spec: ParamSpec, value):
    try:
        if spec.kind == "number":
            out = float(value)
        elif spec.kind == "integer":
            out = int(value)
            if out != float(value):
                raise ParameterError(f"{spec.name} must be an integer, got {value!r}")
        elif spec.kind == "string":
            out = str(value)
        elif spec.kind == "number_list":
            out = [float(v) for v in value]
        elif spec.kind == "complex_list":
            out = [_as_complex(v) for v in value]
        else:
            raise ParameterError(f"unknown parameter kind {spec.kind!r}")
    except ParameterError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"bad value for {spec.name}: {value!r} ({exc})") from exc
    if spec.choices and out not in spec.choices:
        raise ParameterError(f"{spec.name} must be one of {spec.choices}, got {out!r}")
    return out


def _as_complex(v):
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise ValueError(f"complex entries are numbers or [re, im] pairs, got {v!r}")
        return complex(float(v[0]), float(v[1]))
    return complex(v)


def _ci4(p: float, n: int) -> float:
    """Half-width of the 4-sigma binomial band around probability p."""
    return 4.0 * math.sqrt(max(p * (1.0 - p), 0.0) / n)


def _qubit():
    return full_context(2)


def _ket_projector(ctx, v) -> Projection:
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    return Projection(ctx, np.outer(v, v.conj()))


# ---------------------------------------------------------------- scenarios


def _run_polarization(params, trials, seed, record_trials):
    angles = params["angles"]
    if len(angles) < 2:
        raise ParameterError("need at least two polarizer angles")
    ctx = _qubit()
    thetas = np.deg2rad(angles)
    initial = pure_state(ctx, [math.cos(thetas[0]), math.sin(thetas[0])])
    experiments = [
        YesNoExperiment(f"polarizer {angles[k]:g} deg",
                        _ket_projector(ctx, [math.cos(t), math.sin(t)]))
        for k, t in enumerate(thetas)
    ]
    schedule = [ScheduleEntry(float(k), experiments[k]) for k in range(1, len(angles))]

    analytic = 1.0
    for t1, t2 in zip(thetas, thetas[1:]):
        analytic *= math.cos(t2 - t1) ** 2

    # Invalidation witness: probability of passing the final polarizer on the
    # initial state versus after conditioning on "yes" at every intermediate
    # angle.  A zero turning positive is information being invalidated.
    last = experiments[-1].projection
    prob_final_initial = yes_probability(initial, last)
    witness_state = initial
    try:
        for exp in experiments[1:-1]:
            witness_state = condition(witness_state, exp.projection)
        prob_final_after = yes_probability(witness_state, last)
    except ZeroProbabilityError:
        prob_final_after = None

    passed = 0
    records = [] if record_trials else None
    for i in range(trials):
        rec = run_sequence(initial, schedule, None, rng=trial_generator(seed, i))
        ok = rec.all_yes()
        passed += ok
        if records is not None:
            records.append({"trial": i, "pass_all": bool(ok), **rec.to_dict()})

    empirical = passed / trials
    summary = {
        "num_angles": len(angles),
        "analytic_pass_all": analytic,
        "empirical_pass_all": empirical,
        "ci_halfwidth": _ci4(analytic, trials),
        "prob_final_initial": prob_final_initial,
        "prob_final_after_intermediate": prob_final_after,
        "invalidated": bool(
            prob_final_after is not None
            and prob_final_initial <= 1e-12
            and prob_final_after > 1e-12
        ),
    }
    series = {"angles_deg": list(angles)}
    return ScenarioResult("polarization_sequence", {"angles": _echo(angles)},
                          seed, trials, summary, series, records)


def _run_zeno_precise(params, trials, seed, record_trials):
    omega, t_total, n = params["omega"], params["T"], params["n"]
    if n < 1:
        raise ParameterError("n must be at least 1")
    ctx = _qubit()
    ham = Hamiltonian(Observable(ctx, (omega / 2.0) * SIGMA_X))
    survive = Projection(ctx, np.diag([1.0, 0.0]).astype(complex))
    initial = pure_state(ctx, [1.0, 0.0])
    schedule = [
        ScheduleEntry(t_total * (k + 1) / n, YesNoExperiment("still in the initial level", survive))
        for k in range(n)
    ]
    # The projections do not depend on the trial, so evolve the schedule once
    # and replay it with per-trial streams.
    evolved = evolve_schedule(schedule, ham)

    analytic = math.cos(omega * t_total / (2.0 * n)) ** (2 * n)

    survived = 0
    records = [] if record_trials else None
    for i in range(trials):
        rec = run_sequence(initial, evolved, None, rng=trial_generator(seed, i))
        ok = rec.all_yes()
        survived += ok
        if records is not None:
            records.append({"trial": i, "survived": bool(ok), **rec.to_dict()})

    summary = {
        "omega": omega,
        "T": t_total,
        "n": n,
        "analytic": analytic,
        "empirical": survived / trials,
        "ci_halfwidth": _ci4(analytic, trials),
        "survived_count": survived,
    }
    return ScenarioResult("zeno_precise", {"omega": omega, "T": t_total, "n": n},
                          seed, trials, summary, {}, records)


def _run_zeno_coarse(params, trials, seed, record_trials):
    levels = params["num_levels"]
    width = params["window_width"]
    drift = params["drift_rate"]
    steps = params["steps"]
    coupling = params["coupling"]
    dt = params["dt"]
    start = params["initial_level"]
    if levels < 2:
        raise ParameterError("need at least two levels")
    if not 1 <= width <= levels:
        raise ParameterError("window width must be between 1 and the number of levels")
    if not 1 <= start <= levels:
        raise ParameterError("initial level out of range")
    if drift < 0:
        raise ParameterError("drift rate must be non-negative")

    ctx = full_context(levels)
    level_obs = Observable(ctx, np.diag(np.arange(1, levels + 1)).astype(complex))
    hop = np.zeros((levels, levels), dtype=complex)
    for i in range(levels - 1):
        hop[i, i + 1] = hop[i + 1, i] = coupling
    ham = Hamiltonian(Observable(ctx, hop))

    # window of `width` consecutive eigenvalues; even widths extend upward;
    # near the spectrum edge the window shifts rather than shrinks
    below = (width - 1) // 2

    def window_projection(center):
        lo = int(np.clip(center - below, 1, levels - width + 1))
        hi = lo + width - 1
        return lo, hi, spectral_window(level_obs, lo, hi)

    trajectories = np.zeros((trials, steps + 1))
    records = [] if record_trials else None
    for i in range(trials):
        rng = trial_generator(seed, i)
        state = pure_state(ctx, np.eye(levels)[start - 1])
        center = start
        levels_seen = [float(expectation(state, level_obs).real)]
        entries = []
        for step in range(1, steps + 1):
            state = schrodinger_state(state, ham, dt)
            target = int(round(expectation(state, level_obs).real))
            center += int(np.clip(target - center, -drift, drift))
            center = int(np.clip(center, 1, levels))
            lo, hi, proj = window_projection(center)
            outcome, state = perform(
                state, YesNoExperiment(f"level within [{lo},{hi}]", proj), rng
            )
            a_now = float(expectation(state, level_obs).real)
            levels_seen.append(a_now)
            if records is not None:
                entries.append({"time": step, "label": f"level within [{lo},{hi}]",
                                "answer": outcome.answer, "probability": outcome.probability,
                                "mean_level": a_now})
        trajectories[i] = levels_seen
        if records is not None:
            records.append({"trial": i, "entries": entries})

    mean_traj = trajectories.mean(axis=0)
    freeze_metric = float(np.abs(np.diff(mean_traj)).sum())
    summary = {
        "num_levels": levels,
        "window_width": width,
        "drift_rate": drift,
        "steps": steps,
        "coupling": coupling,
        "dt": dt,
        "initial_level": start,
        "freeze_metric": freeze_metric,
        "net_drift": float(mean_traj[-1] - mean_traj[0]),
        "max_mean_excursion": float(np.abs(mean_traj - mean_traj[0]).max()),
    }
    series = {"mean_level_trajectory": [float(x) for x in mean_traj]}
    echo = {k: params[k] for k in ("num_levels", "window_width", "drift_rate",
                                   "steps", "coupling", "dt", "initial_level")}
    return ScenarioResult("zeno_coarse", echo, seed, trials, summary, series, records)


def spectral_window(obs: Observable, lo: float, hi: float) -> Projection:
    """Projection of "is the level between lo and hi (inclusive)?"."""
    return spectral_projection(obs, ValueSet(intervals=((lo, hi),)))


def _run_epr(params, trials, seed, record_trials):
    which = params["state"]
    ctx2 = _qubit()
    ctx4 = tensor(ctx2, ctx2)
    if which == "singlet":
        psi = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / math.sqrt(2.0)
    elif which == "product":
        psi = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    else:
        raise ParameterError(f"unknown initial state {which!r}")
    joint = pure_state(ctx4, psi)

    up = Projection(ctx2, np.diag([1.0, 0.0]).astype(complex))
    ask_a = YesNoExperiment("particle 1 spin-up", embed_local(up, 0, (2, 2)))
    ask_b = YesNoExperiment("particle 2 spin-up", embed_local(up, 1, (2, 2)))

    mixed = State(ctx2, np.eye(2, dtype=complex) / 2.0)
    marg0 = state_distance(partial_trace(joint, 0, (2, 2)), mixed)
    marg1 = state_distance(partial_trace(joint, 1, (2, 2)), mixed)

    a_yes = b_yes = anti = 0
    b_prob_after_a_yes, b_prob_after_a_no = [], []
    records = [] if record_trials else None
    for i in range(trials):
        rng = trial_generator(seed, i)
        out_a, st = perform(joint, ask_a, rng)
        b_pre = yes_probability(st, ask_b.projection)
        out_b, st = perform(st, ask_b, rng)
        a_yes += out_a.yes
        b_yes += out_b.yes
        anti += out_a.yes != out_b.yes
        (b_prob_after_a_yes if out_a.yes else b_prob_after_a_no).append(b_pre)
        if records is not None:
            records.append({
                "trial": i,
                "entries": [
                    {"time": 0.0, "label": ask_a.label, "answer": out_a.answer,
                     "probability": out_a.probability},
                    {"time": 0.0, "label": ask_b.label, "answer": out_b.answer,
                     "probability": out_b.probability},
                ],
            })

    summary = {
        "state": which,
        "a_yes_rate": a_yes / trials,
        "b_yes_rate": b_yes / trials,
        "anticorrelation_rate": anti / trials,
        "anticorrelated_every_trial": anti == trials,
        "correlation_rate": (trials - anti) / trials,
        "marginal_ci_halfwidth": _ci4(0.5, trials),
        "b_yes_prob_given_a_yes": _mean_or_none(b_prob_after_a_yes),
        "b_yes_prob_given_a_no": _mean_or_none(b_prob_after_a_no),
        "marginal_mixed_distance_slot0": marg0,
        "marginal_mixed_distance_slot1": marg1,
    }
    return ScenarioResult("epr", {"state": which}, seed, trials, summary, {}, records)


def _mean_or_none(xs):
    return float(np.mean(xs)) if xs else None


def _sample_point(state, projectors, labels, rng):
    """Sample a position by asking "is it at point m?" in index order,
    conditioning on each answer.  The chain reproduces the Born distribution;
    the final question is forced once all earlier answers were no."""
    st = state
    for m, proj in enumerate(projectors):
        out, st = perform(st, YesNoExperiment(labels[m], proj), rng)
        if out.yes:
            return m, st
    return len(projectors) - 1, st


def _run_two_slit(params, trials, seed, record_trials):
    amp_l = np.asarray(params["amp_l"], dtype=complex)
    amp_r = np.asarray(params["amp_r"], dtype=complex)
    if amp_l.shape != amp_r.shape or amp_l.ndim != 1:
        raise ParameterError("amp_l and amp_r must be vectors of equal length")
    m_points = amp_l.shape[0]
    if m_points < 1:
        raise ParameterError("need at least one screen point")
    joint_norm2 = float(np.vdot(amp_l, amp_l).real + np.vdot(amp_r, amp_r).real)
    if joint_norm2 <= 0.0:
        raise ParameterError("slit amplitudes have zero total norm")
    combined = amp_l + amp_r
    combined_norm2 = float(np.vdot(combined, combined).real)
    if combined_norm2 <= 0.0:
        raise ParameterError("slit amplitudes cancel everywhere; screen state has zero norm")

    analytic_nwp = (np.abs(combined) ** 2 / combined_norm2).tolist()
    analytic_wp = ((np.abs(amp_l) ** 2 + np.abs(amp_r) ** 2) / joint_norm2).tolist()

    ctx_screen = full_context(m_points)
    ctx2 = _qubit()
    ctx_joint = tensor(ctx_screen, ctx2)

    point_projs = [Projection(ctx_screen, np.diag(np.eye(m_points)[m]).astype(complex))
                   for m in range(m_points)]
    point_labels = [f"screen point {m}" for m in range(m_points)]
    joint_projs = [embed_local(p, 0, (m_points, 2)) for p in point_projs]
    path_left = YesNoExperiment(
        "went through the left slit", embed_local(
            Projection(ctx2, np.diag([1.0, 0.0]).astype(complex)), 1, (m_points, 2))
    )

    screen_state = pure_state(ctx_screen, combined)
    psi_joint = np.kron(amp_l, np.array([1.0, 0.0])) + np.kron(amp_r, np.array([0.0, 1.0]))
    joint_state = pure_state(ctx_joint, psi_joint)

    counts_nwp = np.zeros(m_points, dtype=int)
    counts_wp = np.zeros(m_points, dtype=int)
    left_count = 0
    records = [] if record_trials else None
    for i in range(trials):
        rng = trial_generator(seed, i)
        pos, _ = _sample_point(screen_state, point_projs, point_labels, rng)
        counts_nwp[pos] += 1
        out_path, st = perform(joint_state, path_left, rng)
        left_count += out_path.yes
        pos_wp, _ = _sample_point(st, joint_projs, point_labels, rng)
        counts_wp[pos_wp] += 1
        if records is not None:
            records.append({"trial": i, "no_which_path_point": int(pos),
                            "path_answer": out_path.answer,
                            "which_path_point": int(pos_wp)})

    flipped = [m for m in range(m_points)
               if analytic_nwp[m] <= 1e-12 and analytic_wp[m] > 1e-12]
    summary = {
        "num_points": m_points,
        "left_slit_rate": left_count / trials,
        "invalidated_points": len(flipped),
        "first_invalidated_point": flipped[0] if flipped else None,
    }
    series = {
        "analytic_no_which_path": analytic_nwp,
        "analytic_which_path": analytic_wp,
        "empirical_no_which_path": (counts_nwp / trials).tolist(),
        "empirical_which_path": (counts_wp / trials).tolist(),
        "invalidated_point_indices": flipped,
    }
    echo = {"amp_l": _echo([complex(v) for v in amp_l]),
            "amp_r": _echo([complex(v) for v in amp_r])}
    return ScenarioResult("two_slit", echo, seed, trials, summary, series, records)


def _run_three_observer(params, trials, seed, record_trials):
    middle = params["middle"]
    ctx = _qubit()
    p_exp = YesNoExperiment("spin-up along z", Projection(ctx, np.diag([1.0, 0.0]).astype(complex)))
    q_exp = YesNoExperiment("spin-up along x", _ket_projector(ctx, [1.0, 1.0]))
    if middle == "plus":
        chain = [p_exp, q_exp, p_exp]
        analytic = 0.5
    elif middle == "none":
        chain = [p_exp, p_exp]
        analytic = 0.0
    elif middle == "repeat":
        chain = [p_exp, p_exp, p_exp]
        analytic = 0.0
    else:
        raise ParameterError(f"unknown middle experiment {middle!r}")
    schedule = [ScheduleEntry(float(k), exp) for k, exp in enumerate(chain)]
    initial = pure_state(ctx, [1.0, 0.0])

    mismatch = 0
    q_yes = 0
    records = [] if record_trials else None
    for i in range(trials):
        rec = run_sequence(initial, schedule, None, rng=trial_generator(seed, i))
        outs = rec.outcomes()
        mismatch += outs[0] != outs[-1]
        if middle == "plus":
            q_yes += outs[1]
        if records is not None:
            records.append({"trial": i, "mismatch": bool(outs[0] != outs[-1]),
                            **rec.to_dict()})

    summary = {
        "middle": middle,
        "analytic_mismatch": analytic,
        "empirical_mismatch": mismatch / trials,
        "ci_halfwidth": _ci4(analytic, trials),
        "q_yes_rate": (q_yes / trials) if middle == "plus" else None,
    }
    return ScenarioResult("three_observer", {"middle": middle}, seed, trials,
                          summary, {}, records)


def _run_classical_control(params, trials, seed, record_trials):
    which = params["scenario"]
    if which == "zeno":
        return _classical_zeno(params, trials, seed, record_trials)
    if which == "epr":
        return _classical_epr(params, trials, seed, record_trials)
    raise ParameterError(f"unknown classical control scenario {which!r}")


def _classical_zeno(params, trials, seed, record_trials):
    n_points = params["num_points"]
    steps = params["steps"]
    if n_points < 2:
        raise ParameterError("need at least two phase-space points")
    space = PhaseSpace(tuple(f"x{i + 1}" for i in range(n_points)))
    ctx = diagonal_context(space)
    cycle = Flow(space, tuple((i + 1) % n_points for i in range(n_points)))
    initial = classical_state(ctx, np.eye(n_points)[0])
    point_exps = [
        YesNoExperiment(f"at {space.points[j]}", characteristic_projection(ctx, space.subset([j])))
        for j in range(n_points)
    ]

    # Precise observation of a point mass is deterministic: every yes/no
    # answer is forced, so all trials coincide and no draws are consumed.
    trajectories = []
    records = [] if record_trials else None
    for i in range(trials):
        rng = trial_generator(seed, i)
        state = initial
        positions = [0]
        entries = []
        for t in range(1, steps + 1):
            schedule = [ScheduleEntry(float(t), e) for e in point_exps]
            evolved = evolve_schedule(schedule, cycle)
            pos = None
            for j, entry in enumerate(evolved):
                out, state = perform(state, entry.experiment, rng)
                if records is not None:
                    entries.append({"time": t, "label": entry.experiment.label,
                                    "answer": out.answer, "probability": out.probability})
                if out.yes:
                    pos = j
                    break
            positions.append(pos)
        trajectories.append(positions)
        if records is not None:
            records.append({"trial": i, "trajectory": positions, "entries": entries})

    traj = trajectories[0]
    moves = sum(a != b for a, b in zip(traj, traj[1:]))
    summary = {
        "scenario": "zeno",
        "num_points": n_points,
        "steps": steps,
        "advanced_every_step": moves == steps,
        "frozen_steps": steps - moves,
        "cycles_completed": steps // n_points,
        "all_trials_identical": all(t == traj for t in trajectories),
    }
    series = {"position_trajectory": traj}
    echo = {"scenario": "zeno", "num_points": n_points, "steps": steps}
    return ScenarioResult("classical_control", echo, seed, trials, summary, series, records)


def _classical_epr(params, trials, seed, record_trials):
    spin = PhaseSpace(("up", "down"))
    ctx = tensor(diagonal_context(spin), diagonal_context(spin))
    space = ctx.phase_space
    # perfectly anticorrelated pair: all mass on (up,down) and (down,up)
    mu = np.array([0.0, 0.5, 0.5, 0.0])
    initial = classical_state(ctx, mu)
    a_up = YesNoExperiment("particle 1 up", characteristic_projection(ctx, space.subset([0, 1])))
    b_up = YesNoExperiment("particle 2 up", characteristic_projection(ctx, space.subset([0, 2])))
    zero_idx = np.flatnonzero(mu == 0.0)

    a_yes = anti = 0
    zero_preserved = True
    b_prob_after_a_yes, b_prob_after_a_no = [], []
    records = [] if record_trials else None
    for i in range(trials):
        rng = trial_generator(seed, i)
        out_a, st = perform(initial, a_up, rng)
        b_pre = yes_probability(st, b_up.projection)
        out_b, st = perform(st, b_up, rng)
        a_yes += out_a.yes
        anti += out_a.yes != out_b.yes
        if np.any(st.probabilities()[zero_idx] > 1e-15):
            zero_preserved = False
        (b_prob_after_a_yes if out_a.yes else b_prob_after_a_no).append(b_pre)
        if records is not None:
            records.append({
                "trial": i,
                "entries": [
                    {"time": 0.0, "label": a_up.label, "answer": out_a.answer,
                     "probability": out_a.probability},
                    {"time": 0.0, "label": b_up.label, "answer": out_b.answer,
                     "probability": out_b.probability},
                ],
            })

    summary = {
        "scenario": "epr",
        "a_up_rate": a_yes / trials,
        "anticorrelation_rate": anti / trials,
        "anticorrelated_every_trial": anti == trials,
        "zero_probabilities_preserved": zero_preserved,
        "b_up_prob_given_a_up": _mean_or_none(b_prob_after_a_yes),
        "b_up_prob_given_a_down": _mean_or_none(b_prob_after_a_no),
    }
    echo = {"scenario": "epr"}
    return ScenarioResult("classical_control", echo, seed, trials, summary, {}, records)


# ---------------------------------------------------------------- registry


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    params: tuple
    fn: object

    def defaults(self) -> dict:
        return {p.name: p.default for p in self.params}

    def schema(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "parameters": [p.schema() for p in self.params],
        }


SCENARIOS = {
    s.name: s
    for s in (
        Scenario(
            "polarization_sequence",
            "Photon through a sequence of polarizers; pass-all probability and "
            "the zero-to-positive invalidation witness.",
            (ParamSpec("angles", "number_list", [0.0, 45.0, 90.0],
                       "polarizer angles in degrees; the photon starts aligned with the first"),),
            _run_polarization,
        ),
        Scenario(
            "zeno_precise",
            "Driven qubit under n equally spaced precise survival measurements; "
            "frequent measurement freezes the evolution.",
            (
                ParamSpec("omega", "number", math.pi, "drive angular frequency (rad/s)"),
                ParamSpec("T", "number", 1.0, "total duration (s)"),
                ParamSpec("n", "integer", 100, "number of equally spaced measurements"),
            ),
            _run_zeno_precise,
        ),
        Scenario(
            "zeno_coarse",
            "Ladder of levels watched through a coarse window that drifts toward "
            "the current mean level; imprecise observation does not freeze.",
            (
                ParamSpec("num_levels", "integer", 8, "number of levels"),
                ParamSpec("window_width", "integer", 3, "eigenvalues per measurement window"),
                ParamSpec("drift_rate", "integer", 1, "max window-center move per step (levels)"),
                ParamSpec("steps", "integer", 24, "number of measurement steps"),
                ParamSpec("coupling", "number", 0.3, "nearest-neighbor coupling strength"),
                ParamSpec("dt", "number", 1.0, "evolution time between measurements"),
                ParamSpec("initial_level", "integer", 1, "starting level (1-based)"),
            ),
            _run_zeno_coarse,
        ),
        Scenario(
            "epr",
            "Two observers measure spin-up on the two particles of an entangled "
            "pair; outcomes anticorrelate in every trial.",
            (ParamSpec("state", "string", "singlet", "initial pair state",
                       choices=("singlet", "product")),),
            _run_epr,
        ),
        Scenario(
            "two_slit",
            "Abstract two-slit screen: interference distribution without path "
            "information versus the distribution after a which-path measurement.",
            (
                ParamSpec("amp_l", "complex_list",
                          [0.7071067811865476, 0.7071067811865476],
                          "left-slit amplitude at each screen point (numbers or [re,im] pairs)"),
                ParamSpec("amp_r", "complex_list",
                          [0.7071067811865476, -0.7071067811865476],
                          "right-slit amplitude at each screen point"),
            ),
            _run_two_slit,
        ),
        Scenario(
            "three_observer",
            "Noncommuting questions asked in the order P, Q, P on a qubit; the "
            "two P answers disagree half the time.",
            (ParamSpec("middle", "string", "plus", "middle experiment",
                       choices=("plus", "none", "repeat")),),
            _run_three_observer,
        ),
        Scenario(
            "classical_control",
            "Commutative control runs: a watched classical cycle keeps moving "
            "(zeno), and a correlated classical pair anticorrelates by plain "
            "conditioning (epr).",
            (
                ParamSpec("scenario", "string", "zeno", "which control run",
                          choices=("zeno", "epr")),
                ParamSpec("num_points", "integer", 4, "cycle length (zeno only)"),
                ParamSpec("steps", "integer", 8, "observation steps (zeno only)"),
            ),
            _run_classical_control,
        ),
    )
}


def scenario_names() -> list:
    return list(SCENARIOS)


def validate_params(name: str, overrides: dict | None) -> dict:
    if name not in SCENARIOS:
        raise UnknownScenarioError(f"unknown scenario {name!r}; try one of {scenario_names()}")
    scen = SCENARIOS[name]
    known = {p.name: p for p in scen.params}
    merged = scen.defaults()
    for key, value in (overrides or {}).items():
        if key not in known:
            raise ParameterError(
                f"scenario {name!r} has no parameter {key!r}; known: {sorted(known)}"
            )
        merged[key] = _coerce(known[key], value)
    return merged


def run_scenario(name: str, params: dict | None = None, trials: int = 1000,
                 seed: int = 0, record_trials: bool = False) -> ScenarioResult:
    """Validate parameters against the scenario's schema and execute it."""
    merged = validate_params(name, params)
    trials = int(trials)
    if trials < 1:
        raise ParameterError("trials must be positive")
    return SCENARIOS[name].fn(merged, trials, int(seed), record_trials)

import math

import numpy as np
import pytest

from noncomm.algebra import (
    SIGMA_X,
    SIGMA_Z,
    ContextMismatchError,
    Observable,
    PhaseSpace,
    Projection,
    diagonal_context,
    element,
    full_context,
)
from noncomm.dynamics import Flow, Hamiltonian, heisenberg_evolve, schrodinger_state
from noncomm.measurement import (
    MeasurementRecord,
    Outcome,
    ScheduleEntry,
    YesNoExperiment,
    embed_local,
    evolve_schedule,
    make_generator,
    partial_trace,
    perform,
    run_sequence,
    tensor,
    trial_generator,
)
from noncomm.states import (
    State,
    expectation,
    pure_state,
    state_distance,
    yes_probability,
)

QUBIT = full_context(2)
GROUND = Projection(QUBIT, np.diag([1.0, 0.0]))
EXCITED = Projection(QUBIT, np.diag([0.0, 1.0]))
DIAG45 = Projection(QUBIT, np.full((2, 2), 0.5))


def rand_density(ctx, rng):
    g = rng.standard_normal((ctx.dim, ctx.dim)) + 1j * rng.standard_normal((ctx.dim, ctx.dim))
    rho = g @ g.conj().T
    return State(ctx, rho / np.trace(rho).real)


# ------------------------------------------------------------------ perform


def test_perform_certain_yes_leaves_state():
    psi0 = pure_state(QUBIT, [1, 0])
    rng = make_generator(0)
    out, post = perform(psi0, YesNoExperiment("ground", GROUND), rng)
    assert out.yes and out.probability == 1.0
    assert state_distance(post, psi0) <= 1e-9
    # forced outcome consumed no draw: the next number matches a fresh stream
    assert rng.random() == make_generator(0).random()


def test_perform_certain_no_conditions_complement():
    psi0 = pure_state(QUBIT, [1, 0])
    out, post = perform(psi0, YesNoExperiment("excited", EXCITED), make_generator(0))
    assert not out.yes and out.probability == 1.0
    assert state_distance(post, psi0) <= 1e-9


def test_perform_borderline_polarizer():
    psi0 = pure_state(QUBIT, [1, 0])
    target = pure_state(QUBIT, np.array([1.0, 1.0]) / math.sqrt(2))
    rng = make_generator(42)
    yes_count = 0
    for _ in range(2000):
        out, post = perform(psi0, YesNoExperiment("45 deg", DIAG45), rng)
        yes_count += out.yes
        if out.yes:
            assert abs(out.probability - 0.5) <= 1e-12
            assert state_distance(post, target) <= 1e-9
    assert abs(yes_count / 2000 - 0.5) <= 4 * math.sqrt(0.25 / 2000)


def test_perform_deterministic_given_stream():
    s = pure_state(QUBIT, np.array([1.0, 1.0]) / math.sqrt(2))
    outs1 = [perform(s, YesNoExperiment("g", GROUND), trial_generator(9, i))[0].yes
             for i in range(20)]
    outs2 = [perform(s, YesNoExperiment("g", GROUND), trial_generator(9, i))[0].yes
             for i in range(20)]
    assert outs1 == outs2
    assert len(set(outs1)) == 2  # both outcomes occur


def test_outcome_validation():
    with pytest.raises(ValueError):
        Outcome(yes=True, probability=1.5)
    assert Outcome(yes=False, probability=0.25).answer == "no"


# ------------------------------------------------------------- run_sequence


def test_run_sequence_empty_schedule():
    psi0 = pure_state(QUBIT, [1, 0])
    rec = run_sequence(psi0, [], None, seed=1)
    assert rec.entries == [] and state_distance(rec.final_state, psi0) == 0.0


def test_run_sequence_repetition_consistency():
    rng = np.random.default_rng(30)
    for i in range(20):
        s = rand_density(QUBIT, rng)
        exp = YesNoExperiment("45 deg", DIAG45)
        rec = run_sequence(s, [ScheduleEntry(0.0, exp), ScheduleEntry(0.0, exp)],
                           None, seed=i)
        outs = rec.outcomes()
        assert outs[0] == outs[1]
        assert rec.entries[1].outcome.probability == 1.0


def test_run_sequence_requires_sorted_schedule():
    exp = YesNoExperiment("g", GROUND)
    psi0 = pure_state(QUBIT, [1, 0])
    with pytest.raises(ValueError):
        run_sequence(psi0, [ScheduleEntry(1.0, exp), ScheduleEntry(0.0, exp)], None, seed=0)


def test_run_sequence_context_mismatch():
    psi0 = pure_state(QUBIT, [1, 0])
    other = Projection(full_context(3), np.diag([1.0, 0.0, 0.0]))
    with pytest.raises(ContextMismatchError):
        run_sequence(psi0, [ScheduleEntry(0.0, YesNoExperiment("x", other))], None, seed=0)


def test_run_sequence_seed_rng_exclusive():
    psi0 = pure_state(QUBIT, [1, 0])
    with pytest.raises(ValueError):
        run_sequence(psi0, [], None)
    with pytest.raises(ValueError):
        run_sequence(psi0, [], None, seed=1, rng=make_generator(1))


def test_run_sequence_snapshots_and_record_dict():
    psi0 = pure_state(QUBIT, [1, 0])
    exp = YesNoExperiment("ground", GROUND)
    rec = run_sequence(psi0, [ScheduleEntry(0.0, exp)], None, seed=5, keep_snapshots=True)
    assert isinstance(rec, MeasurementRecord)
    assert rec.seed == 5
    assert rec.entries[0].post_state is not None
    doc = rec.to_dict()
    assert doc["entries"][0]["answer"] == "yes"
    assert doc["entries"][0]["probability"] == 1.0


def test_run_sequence_snapshot_probability_consistency():
    # each recorded probability is the pre-measurement probability of the
    # realized answer, recomputable from the previous snapshot
    omega = 1.1
    ham = Hamiltonian(Observable(QUBIT, (omega / 2) * SIGMA_X))
    psi0 = pure_state(QUBIT, [1, 0])
    schedule = [ScheduleEntry(0.4 * k, YesNoExperiment("g", GROUND)) for k in range(1, 6)]
    rec = run_sequence(psi0, schedule, ham, seed=3, keep_snapshots=True)
    previous = psi0
    for entry, evolved in zip(rec.entries, evolve_schedule(schedule, ham)):
        p_yes = yes_probability(previous, evolved.experiment.projection)
        expected = p_yes if entry.outcome.yes else 1.0 - p_yes
        assert abs(entry.outcome.probability - expected) <= 1e-12
        previous = entry.post_state


def test_run_sequence_heisenberg_matches_pre_evolved_schedule():
    omega = 0.9
    ham = Hamiltonian(Observable(QUBIT, (omega / 2) * SIGMA_X))
    psi0 = pure_state(QUBIT, [1, 0])
    schedule = [ScheduleEntry(0.25 * k, YesNoExperiment("g", GROUND)) for k in range(1, 9)]
    rec1 = run_sequence(psi0, schedule, ham, seed=77)
    rec2 = run_sequence(psi0, evolve_schedule(schedule, ham), None, seed=77)
    assert rec1.outcomes() == rec2.outcomes()
    assert state_distance(rec1.final_state, rec2.final_state) <= 1e-10


def test_koopman_schedule_evolution():
    space = PhaseSpace(("a", "b", "c"))
    ctx = diagonal_context(space)
    flow = Flow(space, (1, 2, 0))
    from noncomm.algebra import characteristic_projection
    from noncomm.states import classical_state

    chi_a = characteristic_projection(ctx, space.subset([0]))
    state = classical_state(ctx, [1.0, 0.0, 0.0])
    # at time 1 the point mass sits at b, so asking "is it at b?" via the
    # evolved projection of "is it at a's image?" must answer yes
    chi_b = characteristic_projection(ctx, space.subset([1]))
    schedule = [ScheduleEntry(1, YesNoExperiment("at b", chi_b))]
    rec = run_sequence(state, schedule, flow, seed=0)
    assert rec.outcomes() == [True]


def test_heisenberg_scheduling_duality():
    rng = np.random.default_rng(31)
    for n in (2, 4):
        ctx = full_context(n)
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        ham = Hamiltonian(Observable(ctx, (m + m.conj().T) / 2))
        s = rand_density(ctx, rng)
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q, _ = np.linalg.qr(g)
        v = q[:, : max(1, n // 2)]
        p = Projection(ctx, v @ v.conj().T)
        t = float(rng.standard_normal())
        lhs = yes_probability(s, heisenberg_evolve(p, ham, t))
        rhs = yes_probability(schrodinger_state(s, ham, t), p)
        assert abs(lhs - rhs) <= 1e-10


# ------------------------------------------------------------------- tensor


def test_tensor_units():
    one2 = np.eye(2)
    t = tensor(element(QUBIT, one2), element(QUBIT, one2))
    assert np.array_equal(t.matrix, np.eye(4))


def test_tensor_pure_states_kron_convention():
    # e_i (x) e_j has index i * dim_1 + j: |0> (x) |1> lands at index 1
    s = tensor(pure_state(QUBIT, [1, 0]), pure_state(QUBIT, [0, 1]))
    expected = np.zeros((4, 4))
    expected[1, 1] = 1.0
    assert np.allclose(s.rho, expected)


def test_tensor_sigma_z_with_identity_eigenvalues():
    t = tensor(element(QUBIT, SIGMA_Z), element(QUBIT, np.eye(2)))
    assert np.allclose(np.sort(np.linalg.eigvalsh(t.matrix)), [-1, -1, 1, 1])
    assert np.array_equal(t.matrix, np.kron(SIGMA_Z, np.eye(2)))


def test_tensor_projections_stay_projections():
    t = tensor(GROUND, EXCITED)
    assert isinstance(t, Projection)


def test_tensor_diagonal_contexts_builds_product_space():
    a = diagonal_context(PhaseSpace(("u", "d")))
    prod = tensor(a, a)
    assert prod.is_diagonal and prod.dim == 4
    assert prod.phase_space.points == ("u⊗u", "u⊗d", "d⊗u", "d⊗d")


def test_tensor_mixed_kinds_rejected():
    a = diagonal_context(PhaseSpace(("u", "d")))
    with pytest.raises(ValueError):
        tensor(a, QUBIT)
    with pytest.raises(TypeError):
        tensor(pure_state(QUBIT, [1, 0]), GROUND)


# ------------------------------------------------------------- embed_local


def test_embed_identity_is_global_identity():
    t = embed_local(Projection(QUBIT, np.eye(2)), 1, (2, 2))
    assert np.array_equal(t.matrix, np.eye(4))


def test_embed_sigma_z_slot0():
    t = embed_local(element(QUBIT, SIGMA_Z), 0, (2, 2))
    assert np.array_equal(t.matrix, np.kron(SIGMA_Z, np.eye(2)))


def test_embedded_slots_commute():
    rng = np.random.default_rng(32)
    for _ in range(10):
        a = element(QUBIT, rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        b = element(full_context(3), rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        ea = embed_local(a, 0, (2, 3))
        eb = embed_local(b, 1, (2, 3))
        assert np.allclose((ea @ eb - eb @ ea).matrix, 0.0, atol=1e-12)


def test_embed_local_errors():
    with pytest.raises(ValueError):
        embed_local(GROUND, 2, (2, 2))
    with pytest.raises(ValueError):
        embed_local(GROUND, 0, (3, 2))


# ------------------------------------------------------------ partial trace


def test_partial_trace_of_product_state():
    rng = np.random.default_rng(33)
    rho = rand_density(QUBIT, rng)
    sigma = rand_density(full_context(3), rng)
    joint = State(full_context(6), np.kron(rho.rho, sigma.rho))
    assert state_distance(partial_trace(joint, 0, (2, 3)), rho) <= 1e-12
    assert state_distance(partial_trace(joint, 1, (2, 3)), sigma) <= 1e-12


def test_partial_trace_singlet_is_maximally_mixed():
    singlet = pure_state(full_context(4), np.array([0, 1, -1, 0]) / math.sqrt(2))
    mixed = State(QUBIT, np.eye(2) / 2)
    for slot in (0, 1):
        assert state_distance(partial_trace(singlet, slot, (2, 2)), mixed) <= 1e-12


def test_partial_trace_expectation_consistency():
    rng = np.random.default_rng(34)
    joint = rand_density(full_context(6), rng)
    a = element(QUBIT, rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
    lhs = expectation(partial_trace(joint, 0, (2, 3)), a)
    rhs = expectation(joint, embed_local(a, 0, (2, 3)))
    assert abs(lhs - rhs) <= 1e-10


def test_partial_trace_dimension_mismatch():
    with pytest.raises(ValueError):
        partial_trace(pure_state(full_context(4), [1, 0, 0, 0]), 0, (3, 2))


def test_singlet_conditioning_drives_partner():
    singlet = pure_state(full_context(4), np.array([0, 1, -1, 0]) / math.sqrt(2))
    from noncomm.states import condition

    after = condition(singlet, embed_local(GROUND, 0, (2, 2)))
    assert abs(yes_probability(after, embed_local(EXCITED, 1, (2, 2))) - 1.0) <= 1e-12


# -------------------------------------------------------------------- rng


def test_trial_generators_are_reproducible_and_distinct():
    a1 = trial_generator(5, 0).random(4)
    a2 = trial_generator(5, 0).random(4)
    b = trial_generator(5, 1).random(4)
    assert np.array_equal(a1, a2)
    assert not np.array_equal(a1, b)

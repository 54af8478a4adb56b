import random

import pytest

from tardyjobs import (
    DEFAULT_CALIBRATION,
    Instance,
    Job,
    SolverPolicy,
    auto_select,
    brute_force,
    build_solution_vector_dp,
    forward_states,
    group_by_due_date,
    lawler_moore,
    prefix_vector_semantics_check,
    reconstruct_schedule,
    solve,
    solve_maxplus,
    validate_solution_vector,
)
from tardyjobs.generate import SplitMix64

from conftest import ALL_POLICIES, random_small_instance


def J(i, p, w, d):
    return Job(id=i, p=p, w=w, d=d)


TWO_JOBS = Instance((J(0, 2, 3, 2), J(1, 2, 5, 3)))


class TestLawlerMoore:
    def test_two_jobs(self):
        assert lawler_moore(TWO_JOBS).min_tardy_weight == 3

    def test_single_fitting_job(self):
        assert lawler_moore(Instance((J(0, 1, 1, 1),))).min_tardy_weight == 0

    def test_forced_tardy(self):
        assert lawler_moore(Instance((J(0, 2, 7, 1),))).min_tardy_weight == 7

    def test_weight_identity(self):
        res = lawler_moore(TWO_JOBS)
        assert res.min_tardy_weight + res.max_early_weight == TWO_JOBS.w_total


class TestSolveMaxplus:
    def test_single_due_date_is_knapsack(self):
        jobs = tuple(J(i, p, w, 7) for i, (p, w) in enumerate([(3, 4), (2, 3), (4, 6), (5, 2)]))
        inst = Instance(jobs)
        knap = build_solution_vector_dp(list(jobs), 7)[7]
        for policy in ALL_POLICIES:
            res = solve_maxplus(inst, policy)
            assert res.max_early_weight == knap

    def test_both_jobs_early(self):
        inst = Instance((J(0, 1, 2, 1), J(1, 1, 2, 2)))
        for policy in ALL_POLICIES:
            assert solve_maxplus(inst, policy).min_tardy_weight == 0

    def test_policies_match_oracle(self):
        rng = SplitMix64(12345)
        for trial in range(300):
            inst = random_small_instance(rng, seed=trial)
            want = brute_force(inst).min_tardy_weight
            for policy in ALL_POLICIES:
                assert solve_maxplus(inst, policy).min_tardy_weight == want, (
                    policy,
                    trial,
                    [(j.p, j.w, j.d) for j in inst.jobs],
                )

    def test_policies_agree_on_larger_instances(self):
        from tardyjobs import generate_instance

        rng = random.Random(83)
        for trial in range(12):
            n = rng.randint(50, 200)
            d_max = rng.randint(20, 300)
            inst = generate_instance(
                seed=trial, n=n, d_hash=rng.randint(1, min(n, d_max, 20)),
                d_max=d_max, p_max=12, w_max=12,
            )
            answers = {p: solve_maxplus(inst, p).min_tardy_weight for p in ALL_POLICIES}
            assert len(set(answers.values())) == 1, answers

    def test_input_order_invariance(self):
        rng = random.Random(89)
        base = [J(i, rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 15)) for i in range(9)]
        want = solve_maxplus(Instance(tuple(base)), SolverPolicy.MAXPLUS_NAIVE).min_tardy_weight
        for _ in range(10):
            rng.shuffle(base)
            inst = Instance(tuple(base))
            for policy in ALL_POLICIES:
                assert solve_maxplus(inst, policy).min_tardy_weight == want

    def test_accumulators_are_valid_solution_vectors(self):
        rng = SplitMix64(777)
        for trial in range(40):
            inst = random_small_instance(rng, seed=trial + 400)
            for policy in (
                SolverPolicy.MAXPLUS_NAIVE,
                SolverPolicy.PREDICTION,
                SolverPolicy.CONCAVE_BY_P,
            ):
                for i, acc in forward_states(inst, policy):
                    assert validate_solution_vector(acc) == []
                    d_i = group_by_due_date(inst).due_dates[i - 1]
                    assert len(acc) == d_i + 1

    def test_auto_policy_solves(self):
        rng = SplitMix64(31337)
        for trial in range(40):
            inst = random_small_instance(rng, seed=trial + 900)
            assert (
                solve_maxplus(inst, SolverPolicy.AUTO).min_tardy_weight
                == brute_force(inst).min_tardy_weight
            )


class TestPrefixSemantics:
    def test_first_iteration_is_group_vector(self):
        inst = Instance((J(0, 2, 3, 4), J(1, 1, 1, 4), J(2, 2, 2, 9)))
        states = dict(forward_states(inst, SolverPolicy.MAXPLUS_NAIVE))
        grouping = group_by_due_date(inst)
        assert states[1] == build_solution_vector_dp(list(grouping.groups[0]), 4)
        assert prefix_vector_semantics_check(inst, 1, states[1])

    def test_mid_iterations(self):
        rng = SplitMix64(2024)
        for trial in range(30):
            inst = random_small_instance(rng, seed=trial + 50)
            for i, acc in forward_states(inst, SolverPolicy.MAXPLUS_NAIVE):
                assert prefix_vector_semantics_check(inst, i, acc)

    def test_final_entry_is_optimum(self):
        inst = TWO_JOBS
        *_, (i, acc) = forward_states(inst, SolverPolicy.MAXPLUS_NAIVE)
        assert acc[-1] == brute_force(inst).max_early_weight


class TestReconstruct:
    def test_single_fitting_job(self):
        inst = Instance((J(0, 1, 1, 1),))
        assert reconstruct_schedule(inst, 1) == [0]

    def test_two_job_example(self):
        assert reconstruct_schedule(TWO_JOBS, 5) == [1]

    def test_all_tardy(self):
        inst = Instance((J(0, 5, 2, 1), J(1, 7, 3, 2)))
        assert reconstruct_schedule(inst, 0) == []

    def test_impossible_target_errors(self):
        with pytest.raises(ValueError, match="optimum"):
            reconstruct_schedule(TWO_JOBS, 6)

    def test_solve_attaches_witness(self):
        res = solve(TWO_JOBS, SolverPolicy.MAXPLUS_NAIVE, reconstruct=True)
        assert res.early_set == (1,)

    def test_witness_always_verifies(self):
        from tardyjobs import edd_feasible

        rng = SplitMix64(555)
        for trial in range(60):
            inst = random_small_instance(rng, seed=trial + 777)
            res = solve(inst, SolverPolicy.CONCAVE_BY_P, reconstruct=True)
            by_id = {j.id: j for j in inst.jobs}
            chosen = [by_id[i] for i in res.early_set]
            assert sum(j.w for j in chosen) == res.max_early_weight
            assert edd_feasible(chosen)


class TestAutoSelect:
    def test_returns_concrete_policy(self):
        inst = TWO_JOBS
        assert auto_select(inst) in ALL_POLICIES

    def test_calibration_is_configuration(self):
        inst = TWO_JOBS
        # an absurd penalty on everything except one policy forces that policy
        cal = {p: 1e18 for p in DEFAULT_CALIBRATION}
        cal[SolverPolicy.PREDICTION] = 1.0
        assert auto_select(inst, cal) is SolverPolicy.PREDICTION

    def test_few_jobs_huge_horizon_prefers_baseline(self):
        # n*d_max is tiny next to every convolution bound here
        jobs = tuple(J(i, 10, 10, 100 * (i + 1)) for i in range(10))
        assert auto_select(Instance(jobs)) is SolverPolicy.LAWLER_MOORE

    def test_single_due_date_prefers_merge(self):
        jobs = tuple(J(i, 1, 1, 2) for i in range(500))
        assert auto_select(Instance(jobs)) is not SolverPolicy.LAWLER_MOORE

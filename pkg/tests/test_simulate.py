"""Tests for the Monte Carlo simulator, exact enumeration, and the
measurement-count comparison report."""

from math import comb

import numpy as np
import pytest

from subqec import (
    NoiseModel,
    PauliGrid,
    ShorCode,
    SubsystemCode,
    compare_report,
    exact_rate_enumeration,
    recover,
    repetition,
    run_trials,
)
from subqec.simulate import _batch_failures, _trial_uniforms


@pytest.fixture(scope="module")
def code4(rep2):
    return SubsystemCode(rep2, rep2)


def analytic_rep_grid_rate(n, p):
    """Closed-form x_only failure rate for the rep(n) x rep(n) grid.

    The X part of the error only matters through its row parities; each row
    is bad independently with probability q = P(odd number of flips among n
    sites).  Bit-flip decoding then reduces to decoding one rep(n) word
    whose bits are the row parities.
    """
    q = sum(comb(n, w) * p ** w * (1 - p) ** (n - w)
            for w in range(1, n + 1, 2))
    if n == 2:
        # Coset leader of syndrome 1 is [0,1]; failure iff parities are
        # [1,0] or [1,1], total probability q.
        return q
    if n == 3:
        # Failure iff two or more row parities are bad.
        return 3 * q * q * (1 - q) + q ** 3
    raise NotImplementedError


# -- noise models ------------------------------------------------------------

def test_noise_validation():
    with pytest.raises(ValueError):
        NoiseModel.depolarizing(1.5)
    with pytest.raises(ValueError):
        NoiseModel.independent_xz(0.1, -0.2)


def test_depolarizing_splits_evenly():
    noise = NoiseModel.depolarizing(0.3)
    u = np.array([[0.05, 0.15, 0.25, 0.35]])
    z, x = noise.errors_from_uniforms(u, 4)
    # thirds: [0,0.1) X, [0.1,0.2) Y, [0.2,0.3) Z, rest identity
    assert x.tolist() == [[1, 1, 0, 0]]
    assert z.tolist() == [[0, 1, 1, 0]]


def test_independent_xz_layout():
    noise = NoiseModel.independent_xz(0.5, 0.5)
    u = np.array([[0.4, 0.6, 0.6, 0.4]])
    z, x = noise.errors_from_uniforms(u, 2)
    assert x.tolist() == [[1, 0]]
    assert z.tolist() == [[0, 1]]


# -- counter-based RNG ---------------------------------------------------------

def test_uniforms_are_partition_independent():
    whole = _trial_uniforms(42, 0, 200, 9)
    pieces = np.vstack([
        _trial_uniforms(42, 0, 13, 9),
        _trial_uniforms(42, 13, 100, 9),
        _trial_uniforms(42, 100, 200, 9),
    ])
    assert np.array_equal(whole, pieces)


def test_uniforms_depend_on_seed():
    assert not np.array_equal(_trial_uniforms(1, 0, 10, 9),
                              _trial_uniforms(2, 0, 10, 9))


# -- batched recovery ------------------------------------------------------------

def test_batch_matches_reference_recovery_exhaustive(code9):
    """Every single-axis pattern on the 3x3 grid, both axes."""
    zero = np.zeros((3, 3), np.uint8)
    pats = ((np.arange(512)[:, None] >> np.arange(9)) & 1).astype(np.uint8)
    grids = pats.reshape(-1, 3, 3)
    batch_x = _batch_failures(code9, np.zeros_like(grids), grids)
    batch_z = _batch_failures(code9, grids, np.zeros_like(grids))
    for i, g in enumerate(grids):
        assert batch_x[i] == (not recover(code9, PauliGrid(zero, g)).logical_ok)
        assert batch_z[i] == (not recover(code9, PauliGrid(g, zero)).logical_ok)


def test_batch_matches_reference_recovery_mixed(code49):
    rng = np.random.default_rng(61)
    z = rng.integers(0, 2, (200, 7, 7), dtype=np.uint8)
    x = rng.integers(0, 2, (200, 7, 7), dtype=np.uint8)
    batch = _batch_failures(code49, z, x)
    for i in range(200):
        single = not recover(code49, PauliGrid(z[i], x[i])).logical_ok
        assert batch[i] == single


# -- run_trials -------------------------------------------------------------------

def test_same_seed_same_report(code9):
    noise = NoiseModel.depolarizing(0.05)
    a = run_trials(code9, noise, 20000, seed=5)
    b = run_trials(code9, noise, 20000, seed=5)
    assert a == b


def test_worker_count_does_not_change_results(code9):
    noise = NoiseModel.x_only(0.05)
    reports = [run_trials(code9, noise, 30000, seed=17, workers=w)
               for w in (1, 2, 8)]
    assert reports[0] == reports[1] == reports[2]


def test_batch_size_does_not_change_results(code9):
    noise = NoiseModel.independent_xz(0.03, 0.07)
    a = run_trials(code9, noise, 10000, seed=23, batch_size=8192)
    b = run_trials(code9, noise, 10000, seed=23, batch_size=777)
    assert a == b


def test_zero_probability_never_fails(code9):
    for noise in (NoiseModel.depolarizing(0.0), NoiseModel.x_only(0.0)):
        report = run_trials(code9, noise, 5000, seed=1)
        assert report.logical_failures == 0
        assert report.rate == 0.0


def test_report_fields(code9):
    report = run_trials(code9, NoiseModel.x_only(0.1), 10000, seed=4)
    assert report.trials == 10000
    assert report.code_params == (9, 1, 4, 4)
    assert report.rate == report.logical_failures / 10000
    expect_se = np.sqrt(report.rate * (1 - report.rate) / 10000)
    assert report.std_error == pytest.approx(expect_se, rel=1e-12)


def test_run_trials_validation(code9):
    noise = NoiseModel.x_only(0.1)
    with pytest.raises(ValueError):
        run_trials(code9, noise, 0, seed=1)
    with pytest.raises(ValueError):
        run_trials(code9, noise, 10, seed=-1)
    with pytest.raises(ValueError):
        run_trials(code9, noise, 10, seed=1 << 64)
    with pytest.raises(ValueError):
        run_trials(code9, noise, 10, seed=1, workers=0)


# -- exact enumeration ---------------------------------------------------------

def test_exact_rate_zero_and_one(code9):
    assert exact_rate_enumeration(code9, NoiseModel.x_only(0.0)) == 0.0
    # At p = 1 the all-X pattern hits every site; its row parities are all
    # bad, which flips the logical qubit.
    assert exact_rate_enumeration(code9, NoiseModel.x_only(1.0)) == 1.0


@pytest.mark.parametrize("p", [0.01, 0.05, 0.1])
def test_exact_rate_matches_closed_form(code9, code4, p):
    for code, n in ((code9, 3), (code4, 2)):
        expect = analytic_rep_grid_rate(n, p)
        got = exact_rate_enumeration(code, NoiseModel.x_only(p))
        assert got == pytest.approx(expect, rel=1e-12)
        # The construction is symmetric, so z_only matches too.
        got_z = exact_rate_enumeration(code, NoiseModel.z_only(p))
        assert got_z == pytest.approx(expect, rel=1e-12)


def test_exact_rate_agrees_with_monte_carlo(code9):
    noise = NoiseModel.x_only(0.05)
    exact = exact_rate_enumeration(code9, noise)
    mc = run_trials(code9, noise, 40000, seed=12)
    assert abs(mc.rate - exact) <= 3 * mc.std_error


def test_exact_rate_refuses_mixed_channels(code9):
    with pytest.raises(ValueError):
        exact_rate_enumeration(code9, NoiseModel.depolarizing(0.1))


def test_exact_rate_refuses_large_grids():
    code = SubsystemCode(repetition(5), repetition(5))
    with pytest.raises(ValueError):
        exact_rate_enumeration(code, NoiseModel.x_only(0.1))


# -- failure-rate scaling ---------------------------------------------------------

def test_failure_rate_scales_with_distance(code9, code4):
    """log-log slope of rate vs p should be around (d-1)/2 + 1; allow half
    a unit of slack for Monte Carlo noise."""
    ps = [0.002, 0.005, 0.01]
    trials = {0.002: 2000000, 0.005: 600000, 0.01: 300000}
    for code, d in ((code9, 3), (code4, 2)):
        rates = []
        for p in ps:
            t = trials[p] if code is code9 else 200000
            r = run_trials(code, NoiseModel.depolarizing(p), t, seed=99)
            assert r.logical_failures > 0
            rates.append(r.rate)
        slope = np.polyfit(np.log(ps), np.log(rates), 1)[0]
        assert slope >= (d - 1) // 2 + 1 - 0.5


# -- compare report ----------------------------------------------------------------

def test_compare_rep3(rep3):
    report = compare_report(rep3, rep3)
    assert report["subsystem_stabilizers"] == 4
    assert report["shor_stabilizers"] == 8
    assert report["stabilizers_saved"] == 4
    assert report["grid"] == {"n": 9, "k": 1, "gauge_qubits": 4,
                              "distance": 3}
    assert "composed_schemes" not in report


@pytest.mark.parametrize("n", range(2, 7))
def test_compare_repetition_formulas(n):
    rep = repetition(n)
    report = compare_report(rep, rep)
    assert report["subsystem_stabilizers"] == 2 * (n - 1)
    assert report["shor_stabilizers"] == n * n - 1


def test_compare_counts_match_built_codes(ham, rep3):
    report = compare_report(rep3, ham)
    built = SubsystemCode(rep3, ham)
    shor_built = ShorCode(rep3, ham)
    assert report["subsystem_stabilizers"] == len(built.stabilizers)
    assert report["shor_stabilizers"] == len(shor_built.stabilizers)


def test_compare_hamming_composed_schemes(ham):
    report = compare_report(ham, ham)
    assert report["subsystem_stabilizers"] == 24
    assert report["shor_stabilizers"] == 33
    totals = {s["total"] for s in report["composed_schemes"]}
    assert totals == {30, 28, 48}
    by_total = {s["total"]: s for s in report["composed_schemes"]}
    assert by_total[30]["inner_stabilizers"] == 24
    assert by_total[30]["outer_stabilizers"] == 6
    assert by_total[28]["outer_stabilizers"] == 4
    assert by_total[48]["inner_stabilizers"] == 42
    assert by_total[48]["outer_stabilizers"] == 6

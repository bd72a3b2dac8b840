"""Smoke tests for the hmp_entropy python module."""

import math

import pytest

import hmp_entropy as hmp


def test_process_probabilities():
    params = hmp.ProcessParams(0.3, 0.1)
    assert hmp.markov_prob([1], 0.3) == pytest.approx(0.5)
    assert hmp.emission_prob([1, -1], [1, -1], 0.0) == 1.0
    brute = hmp.observed_prob_brute([1, 1, -1], params)
    forward = math.exp(hmp.observed_prob_forward([1, 1, -1], params))
    assert forward == pytest.approx(brute, rel=1e-12)


def test_param_validation():
    with pytest.raises(ValueError):
        hmp.ProcessParams(1.5, 0.1)
    with pytest.raises(ValueError):
        hmp.coefficient(12, 0.3)


def test_sampling_is_deterministic():
    params = hmp.ProcessParams(0.3, 0.1)
    first = hmp.sample(params, 50, seed=7)
    second = hmp.sample(params, 50, seed=7)
    assert first == second
    s, r = hmp.sample(hmp.ProcessParams(0.3, 0.0), 50, seed=7)
    assert s == r


def test_entropies_and_bounds():
    params = hmp.ProcessParams(0.3, 0.05)
    assert hmp.block_entropy(1, params) == pytest.approx(math.log(2.0))
    c8 = hmp.conditional_entropy(8, params)
    l8 = hmp.lower_bound(8, params)
    assert l8 <= c8
    series = hmp.entropy_series(0.3, 0.05, order=11)
    slack = abs(series["terms"][-1]) + 1e-12  # truncation scale of the partial sum
    assert l8 - slack <= series["value"] <= c8 + slack


def test_ising_consistency():
    params = hmp.ProcessParams(0.3, 0.1)
    ising = hmp.ising_couplings(params, 6)
    a = ising.a0 * ising.a1
    r = [1, -1, -1, 1, 1, 1]
    assert a * hmp.ising_z(r, ising) == pytest.approx(
        hmp.observed_prob_brute(r, params), rel=1e-10
    )


def test_series_and_radius():
    assert hmp.coefficient(0, 0.5) == pytest.approx(math.log(2.0))
    assert hmp.iid_entropy(0.5, 0.3) == pytest.approx(math.log(2.0))
    assert hmp.iid_radius_exact(0.25) == pytest.approx(0.5)
    coeffs = [hmp.iid_coefficient(k, 0.3) for k in range(12)]
    fit = hmp.radius_estimate(coeffs, 2, 11)
    assert fit["radius"] == pytest.approx(0.75, rel=0.15)
    assert hmp.entropy_series(0.05, 0.01)["divergence"]


def test_symbolic_verification():
    report = hmp.verify_conjecture(3, 4)
    assert report["all_ok"]
    orders = {entry["k"]: entry for entry in report["orders"]}
    assert orders[2]["settling_n"] == 3
    assert orders[3]["table_match"]
    assert hmp.free_element(3) in ("1/6", "-1/6")
    display = hmp.conditional_series_display(3, 2)
    assert len(display) == 3
    assert "log" in display[0]


def test_smb_estimate():
    estimate, stderr = hmp.smb_estimate(hmp.ProcessParams(0.3, 0.0), 100000, 11)
    h_b = -(0.3 * math.log(0.3) + 0.7 * math.log(0.7))
    assert abs(estimate - h_b) < 4 * stderr

"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import gmew


def test_make_state_and_schmidt():
    ghz = gmew.make_state("ghz:d=3,n=3")
    assert ghz.dim == 27
    lambdas = gmew.schmidt_values(ghz, 0b001)
    assert len(lambdas) == 3
    assert all(abs(l - 1 / 3) < 1e-10 for l in lambdas)

    w3 = gmew.make_state("w:n=3")
    l = gmew.schmidt_values(w3, 0b001)
    assert abs(l[0] - 2 / 3) < 1e-10
    assert abs(l[1] - 1 / 3) < 1e-10


def test_state_amps_roundtrip():
    psi = gmew.make_state("w:n=3")
    amps = psi.amps
    again = gmew.PureState([2, 2, 2], amps)
    assert np.allclose(again.amps, amps)


def test_construct_w4():
    w = gmew.construct("w:n=4")
    assert w.blocks == 3
    dense = w.dense()
    assert dense.shape == (16, 16)
    assert np.allclose(dense, dense.conj().T)


def test_tolerances():
    assert abs(gmew.construct("ghz:d=3,n=3").noise_tolerance - 0.75) < 1e-9
    assert abs(gmew.cluster_noise_tolerance(4) - 24 / 41) < 1e-9
    assert gmew.cluster_noise_tolerance(10) > gmew.fidelity_tolerance_bound(2, 10)


def test_lift_matches_analytic():
    analytic = gmew.construct("ghz:d=3,n=3", method="analytic")
    lifted = gmew.construct("ghz:d=3,n=3", method="lift")
    assert np.max(np.abs(analytic.dense() - lifted.dense())) < 1e-10


def test_certify_margins():
    margins = gmew.certify("w:n=3")
    assert len(margins) == 3
    assert all(m >= -1e-9 for _, m in margins)


def test_vk_class():
    assert gmew.vk_class("1101100") == 2
    assert gmew.vk_class("1001011") == 3


def test_unfaithfulness_formulas():
    uniform = [1 / 3] * 3
    assert abs(gmew.pf(uniform) - 0.75) < 1e-12
    assert abs(gmew.po(uniform) - 0.75) < 1e-12
    assert gmew.po([0.9, 0.08, 0.02]) >= gmew.pf([0.9, 0.08, 0.02])


def test_measure_bounds():
    eps_o, eps_f, _ = gmew.eps_o(3, 3, 0.0)
    assert abs(eps_o - 2 / 3) < 1e-6
    assert abs(eps_f - 2 / 3) < 1e-9
    assert gmew.ehat_closed(3, 0.0) == pytest.approx(0.0)


def test_expectation_noise_model():
    w = gmew.construct("ghz:d=3,n=3")
    at_zero = gmew.expectation(w, 0.0)
    assert abs(at_zero - (1 / 3 - 1)) < 1e-10
    pstar = w.noise_tolerance
    assert gmew.expectation(w, pstar) == pytest.approx(0.0, abs=1e-10)


def test_reproduce_deterministic():
    a = gmew.reproduce("fig1")
    b = gmew.reproduce("fig1")
    assert a == b
    assert a.startswith("# gmew")
    assert "n,p_ours,p_fidelity" in a


def test_witness_json():
    text = gmew.construct("w:n=3").to_json()
    assert '"kind": "lifted"' in text


def test_fast_verification():
    ok, report = gmew.verify(fast=True, restarts=8)
    assert ok, report

"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import esdlab


def test_make_pure_w3():
    psi = esdlab.make_pure("w:3").ravel()
    amp = 1 / math.sqrt(3)
    assert psi[1] == pytest.approx(amp)
    assert psi[2] == pytest.approx(amp)
    assert psi[4] == pytest.approx(amp)
    assert np.linalg.norm(psi) == pytest.approx(1.0)


def test_gad_kraus_completeness():
    ops = esdlab.gad_kraus(0.41, 0.5)
    total = sum(op.conj().T @ op for op in ops)
    assert np.allclose(total, np.eye(2), atol=1e-14)


def test_bell_concurrence():
    rho = esdlab.density_from_pure(esdlab.make_pure("ghz:2"))
    assert esdlab.wootters_concurrence(rho) == pytest.approx(1.0)


def test_apply_gad_and_pairwise():
    rho = esdlab.density_from_pure(esdlab.make_pure("w:3"))
    damped, prob = esdlab.apply_gad(rho, [1, 2], gamma=0.41)
    assert prob == pytest.approx(1.0)
    assert esdlab.pairwise_concurrence(damped, 1, 2) == 0.0
    assert esdlab.pairwise_concurrence(damped, 0, 1) == pytest.approx(0.2102302, abs=1e-6)


def test_filter_success_probability():
    rho = esdlab.density_from_pure(esdlab.make_pure("w:3"))
    _, prob = esdlab.apply_filter(rho, [0], kappa=0.24)
    assert prob == pytest.approx((1 - 0.24) * 2 / 3 + 0.24 / 3)


def test_run_point_and_threshold():
    rec = esdlab.run_point("w:3", [1, 2], [], ["pairwise:ab", "pairwise:bc"], gamma=0.0)
    assert rec.values[0] == pytest.approx(2 / 3, abs=1e-9)

    gamma_star = esdlab.find_esd_threshold("w:3", [1, 2], "pairwise:bc")
    assert gamma_star == pytest.approx(0.4076, abs=5e-4)


def test_solve_equal_kappa():
    kappa = esdlab.solve_equal_kappa(
        "w:3", [1, 2], [0], 0.4076, "pairwise:ab", "pairwise:bc"
    )
    assert kappa == pytest.approx(0.2324, abs=5e-3)


def test_bipartite_concurrence_cluster():
    rho = esdlab.density_from_pure(esdlab.make_pure("cluster4"))
    assert esdlab.bipartite_concurrence(rho, [0, 1], [2, 3]) == pytest.approx(1.0)
    # the pair-versus-sibling cut is separable for this state
    assert esdlab.bipartite_concurrence(rho, [0, 1], [2], [3]) == 0.0


def test_i_concurrence():
    psi = esdlab.make_pure("ghz:3")
    assert esdlab.i_concurrence_pure(psi, [0], [1, 2]) == pytest.approx(1.0)


def test_ghz_retrieval_check():
    result = esdlab.ghz_retrieval_check(3)
    assert result.applicable
    assert result.no_retrieval


def test_w_scaling_row():
    row = esdlab.w_scaling_row(3, 1)
    assert row.gamma_star == pytest.approx(0.4076, abs=5e-4)
    assert row.retrieved == pytest.approx(0.1521, abs=5e-3)

import math
import os
import subprocess

import pytest

import qbm_sbs as q


def test_special_functions():
    assert abs(q.si(1.0) - 0.946083070367183) < 1e-13
    assert abs(q.ci(1.0) - 0.337403922900968) < 1e-13
    with pytest.raises(ValueError):
        q.ci(0.0)


def test_means_agree_with_quadrature():
    w = q.FrequencyWindow(10.0, 20.0, 1.0)
    for t in (0.01, 0.5, 30.0):
        e = q.mean_exact(q.MeanKind.LowT_f0, t, w)
        r = q.mean_quadrature(q.MeanKind.LowT_f0, t, w)
        assert abs(e / r - 1) < 1e-8
    c2 = q.short_time_coefficient(q.MeanKind.LowT_f0, w)
    assert c2 == pytest.approx(2 / (10 * math.pi) * math.log(2), rel=1e-14)


def test_bound_and_constants():
    w = q.FrequencyWindow(10.0, 20.0)
    c = q.asymptote_constants(q.MeanKind.LowT_f0, w)
    assert c.B == pytest.approx(0.003821141619, rel=1e-9)
    b = q.nmac_bound(q.MeanKind.LowT_f0, 1e-3, w)
    assert b.n_mac(1.0) == pytest.approx(4 * b.n_mac(2.0))
    assert q.nmac_bound(q.MeanKind.LowT_f0, 1.0, w).bound_exact == 0.0


def test_sampling_is_deterministic():
    a = q.sample_frequencies(10.0, 20.0, 100, 5)
    assert a == q.sample_frequencies(10.0, 20.0, 100, 5)
    assert all(10.0 <= x <= 20.0 for x in a)


def test_run_checks_subset():
    assert "fock_oracle" in q.check_names()
    (r,) = q.run_checks(["closed_form_vs_quadrature"])
    assert r["passed"]
    (strict,) = q.run_checks(["closed_form_vs_quadrature"], 1e-15)
    assert not strict["passed"]


def test_cli_exit_codes(tmp_path):
    exe = os.environ.get("QBM_SBS_CLI")
    if not exe:
        pytest.skip("command-line tool not built")
    cfg = tmp_path / "c.toml"
    cfg.write_text("[env]\nomega_L = 10.0\nomega_U = 20.0\n")
    run = subprocess.run([exe, "regime", "-c", str(cfg), "-o", str(tmp_path)], capture_output=True, text=True)
    assert run.returncode == 2
    assert "env.T" in run.stderr
    run = subprocess.run([exe, "means", "-c", str(cfg), "-o", str(tmp_path), "--kind", "lowt",
                          "--set", "run.t_min=0.01", "--set", "run.t_points=5"], capture_output=True, text=True)
    assert run.returncode == 0
    assert (tmp_path / "means_LowT_f0.csv").read_text().startswith("t,mean_exact")

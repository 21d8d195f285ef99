import json
import math
import os
import subprocess

import pytest

import rkhs


def test_hardy_kernel_value():
    assert abs(rkhs.kernel(0.5, rkhs.HardyParams(p=1)) - 4.0) < 1e-12


def test_bergman_closed_form_matches_series():
    space = rkhs.BergmanParams(alpha=0.5, beta0=-0.25, p=1, R=1.0, m=1)
    xi = 0.4 + 0.3j
    a = rkhs.kernel(xi, space)
    b = rkhs.kernel_series(xi, space)
    assert abs(a - b) < 1e-9 * abs(b)


def test_bargmann_m0_is_exponential():
    xi = 0.7 - 1.1j
    value = rkhs.kernel(xi, rkhs.BargmannParams(theta=1.5, beta0=0.0))
    assert abs(value - complex(math.e) ** (1.5 * xi)) < 1e-12 * abs(value)


def test_special_functions():
    assert rkhs.pochhammer(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5, rel=1e-15)
    assert rkhs.incomplete_beta(0.7, 2.0, 3.0) == pytest.approx(0.0763583333333333305, rel=1e-13)
    value = rkhs.pfq([0.5, 1.25], [2.5], 0.3 + 0.6j)
    assert abs(value - (1.02334711043843587 + 0.178818331180220257j)) < 1e-13


def test_laurent_series_round_trip():
    f = rkhs.LaurentSeries(-1, [1.0, 2.0 + 1.0j, 0.5])
    assert f.min_index == -1 and f.max_index == 1
    assert rkhs.LaurentSeries.from_json(f.to_json()) == f
    assert abs(f(2.0) - (0.5 + 2.0 + 1.0j + 1.0)) < 1e-15


def test_transform_kernel_oracle():
    spec = rkhs.transform_spec("disk", "full", 1, 2, beta0=-0.25, alpha=0.5)
    value = rkhs.transform_kernel(spec, 0.5 + 0.2j, 0.3 - 0.4j)
    assert abs(value - (1.22127415966876735 - 1.48945808311049104j)) < 1e-12


def test_transform_is_isometric():
    spec = rkhs.transform_spec("fock", "full", 1, 2, beta0=-0.25, theta=1.5)
    source = rkhs.BargmannParams(theta=1.5, beta0=-0.25, p=1)
    target = rkhs.BargmannParams(theta=1.5, beta0=-0.25, p=2)
    f = rkhs.LaurentSeries(-1, [0.3, 1.0 - 0.5j, 0.0, 0.25j])
    image = rkhs.apply_transform(spec, f)
    assert rkhs.dirichlet_norm(image, target) == pytest.approx(
        rkhs.dirichlet_norm(f, source), rel=1e-12)


def test_domain_errors_surface():
    with pytest.raises(rkhs.DomainError):
        rkhs.kernel(1.5, rkhs.HardyParams())


def test_run_suite_groups():
    reports = rkhs.run_suite(seed=7, groups=["kernels", "m0_forms"])
    assert reports
    assert all(r["passed"] for r in reports)
    assert {"check_name", "measured_error", "tolerance", "passed"} <= set(reports[0])


@pytest.mark.skipif("RKHS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_kernel_json():
    out = subprocess.run(
        [os.environ["RKHS_CLI"], "kernel", "--family", "hardy", "--p", "1",
         "--xi", "0.5,0", "--format", "json"],
        check=True, capture_output=True, text=True).stdout
    assert "4" in out
    json.loads(out)

"""Reproducing kernels and Segal-Bargmann transforms on modified Bergman,
Bargmann-Fock and Hardy type spaces."""

import json as _json

from ._rkhs import (
    BargmannParams,
    BergmanParams,
    ConvergenceError,
    DomainError,
    HardyParams,
    IndexError,
    LaurentSeries,
    UnsupportedError,
    apply_transform,
    bergman_kernel_m0_forms,
    c_pq,
    d_pq,
    dirichlet_inner_product,
    dirichlet_norm,
    gamma_coeff,
    gamma_ratio,
    incomplete_beta,
    kernel,
    kernel_series,
    log_gamma,
    monomial_norm,
    pfq,
    pochhammer,
    series_identity,
    sigma_coeff,
    transform_kernel,
)
from ._rkhs import run_suite as _run_suite


def run_suite(seed=None, groups=()):
    """Run the verification suite and return a list of report dicts."""
    kwargs = {"groups": list(groups)}
    if seed is not None:
        kwargs["seed"] = seed
    return _json.loads(_run_suite(**kwargs))


def transform_spec(family, kind, p, q, beta0=0.0, alpha=None, theta=None):
    """JSON transform spec accepted by transform_kernel and apply_transform."""
    spec = {"family": family, "kind": kind, "p": p, "q": q, "beta0": beta0}
    if family == "disk":
        spec["alpha"] = 0.0 if alpha is None else alpha
    else:
        spec["theta"] = 1.0 if theta is None else theta
    return _json.dumps(spec)

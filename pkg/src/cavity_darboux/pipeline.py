"""Simulation runs behind the ``jc`` and ``darboux`` sub-commands."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

import numpy as np

from . import output
from .darboux import DarbouxSolution, Sigma
from .errors import SeriesError, SolverError
from .jc import atomic_inversion, poisson_truncation
from .modified import drive_from_solution, modified_inversion
from .solvers import sigma1, sigma2, sigma3

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trace:
    name: str
    column: str
    t: np.ndarray
    y: np.ndarray
    title: str
    ylabel: str


def time_grid(cfg):
    return np.linspace(cfg.t0, cfg.t1, cfg.samples)


def simulate_jc(cfg):
    p = cfg.params()
    t = time_grid(cfg)
    w = atomic_inversion(t, p, poisson_truncation(p.nbar, cfg.poisson_tol))
    return [Trace("jc_W", "W", t, w, "Jaynes-Cummings atomic inversion", "W(t)")]


def solve_darboux(cfg):
    """Return the :class:`DarbouxSolution` for ``cfg.sigma``."""
    p = cfg.params()
    t = time_grid(cfg)
    sigma = Sigma(cfg.sigma)
    if sigma is Sigma.X:
        if cfg.sigma1_drive == "closed_form":
            alpha, beta = sigma1.closed_form_sigma1(t, p)
            dalpha, dbeta = sigma1.closed_form_sigma1_dot(t, p)
        else:
            h = sigma1.hpm_solve_sigma1(p, cfg.hpm_order)
            ra, rb = sigma1.resum_sigma1(h, cfg.pade_m, cfg.pade_n)
            alpha, beta = ra(t), rb(t)
            dalpha, dbeta = ra.derivative()(t), rb.derivative()(t)
        sol = DarbouxSolution.build(sigma, t, alpha, beta, p, dalpha, dbeta, prefactor=cfg.v_prefactor)
    elif sigma is Sigma.Z:
        if cfg.ic_alpha is None:
            ic = sigma3.default_initial_state(p, cfg.ic_beta, cfg.t0)
        else:
            ic = (cfg.ic_alpha, cfg.ic_beta)
        sol = sigma3.solve_sigma3(p, t, ic)
    else:
        sol = sigma2.solve_sigma2(p, t, cfg.ic_beta)
    if cfg.v_prefactor and sigma is not Sigma.X:
        sol = DarbouxSolution.build(sol.sigma, sol.t, sol.alpha, sol.beta, p,
                                    sol.dalpha, sol.dbeta, prefactor=True)
    if not (np.all(np.isfinite(sol.beta)) and np.all(np.isfinite(sol.alpha))):
        bad = int(np.argmax(~(np.isfinite(sol.beta) & np.isfinite(sol.alpha))))
        raise SolverError("non-finite trajectory", t=float(t[bad]))
    return sol


def simulate_darboux(cfg):
    p = cfg.params()
    sol = solve_darboux(cfg)
    drive = drive_from_solution(sol)
    if sol.sigma is Sigma.X:
        drive = drive.switched_on(cfg.t_on)
    elif sol.sigma is Sigma.Y:
        drive = drive.scaled(cfg.sigma2_scale)
    if not np.all(np.isfinite(drive.nbb)):
        raise SolverError("classical occupation overflowed", t=float(sol.t[np.argmax(~np.isfinite(drive.nbb))]))
    w = modified_inversion(sol.t, drive.nbb, p, poisson_truncation(p.nbar, cfg.poisson_tol))
    i = int(sol.sigma)
    return [
        Trace(f"sigma{i}_W", "W", sol.t, w, f"Modified atomic inversion, sigma_{i}", "W(t)"),
        Trace(f"sigma{i}_V", "V", sol.t, sol.vmag, f"Transformed potential magnitude, sigma_{i}", "|V(t)|"),
    ]


def write_traces(traces, cfg):
    os.makedirs(cfg.out, exist_ok=True)
    written = []
    for tr in traces:
        if cfg.csv:
            path = os.path.join(cfg.out, tr.name + ".csv")
            output.write_csv(path, tr.t, tr.y, tr.column)
            written.append(path)
        if cfg.svg:
            path = os.path.join(cfg.out, tr.name + ".svg")
            output.write_svg(path, tr.t, tr.y, title=tr.title, ylabel=tr.ylabel,
                             logy=cfg.logy and tr.column == "V")
            written.append(path)
    return written


def run(cfg, command):
    """Simulate and write outputs; returns the list of written paths."""
    if command == "jc":
        traces = simulate_jc(cfg)
    elif command == "darboux":
        try:
            traces = simulate_darboux(cfg)
        except SeriesError as exc:
            raise SolverError(f"resummation failed: {exc}") from exc
    else:
        raise ValueError(f"unknown command {command!r}")
    for tr in traces:
        log.info("%s: %d samples on [%g, %g]", tr.name, len(tr.t), tr.t[0], tr.t[-1])
    return write_traces(traces, cfg)

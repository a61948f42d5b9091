r"""
Verification suites

Each suite evaluates the invariants of one package and returns a list of
checks ``{'name', 'gap', 'tol', 'passed'}``. :func:`run_suites` gathers them
in a report suitable for JSON output.

"""
import math
import time

import numpy as np
from scipy.stats import qmc

from fracwave.logger import msg
from fracwave.specfun import (MLParams, WrightParams, mittag_leffler_array,
                              wright_array)
from fracwave.fracops import (TimeMesh, SampledFn, PowerTerm, caputo_grid,
                              check_law_of_exponents)
from fracwave.regions import Region, region_masks
from fracwave.field import GridField
from fracwave.greens import (SeqCauchyProblem, fundamental_solution, normalization,
                             solve_sequential, coupling_residuals)
from fracwave.coupledsim import (CoupledState, SimConfig, CoupledSimulator,
                                 recover_velocity)


def _check(name, gap, tol):
    gap = float(gap)
    return dict(name=name, gap=gap, tol=float(tol), passed=bool(gap <= tol))


def _scaled_gap(values, exact):
    return np.max(np.abs(values - exact)/np.maximum(1., np.abs(exact)))


def verify_specfun(tol=None, max_terms=None):
    checks = []
    y = np.linspace(-5., 5., 100)
    x = np.linspace(0., 10., 100)
    opts = dict(tol=tol, max_terms=max_terms)

    values, _ = mittag_leffler_array(MLParams(1., 1.), y, **opts)
    checks.append(_check('E_{1,1}(y) = exp(y)', _scaled_gap(values, np.exp(y)), 1.e-10))
    values, _ = mittag_leffler_array(MLParams(2., 1.), -x**2, **opts)
    checks.append(_check('E_{2,1}(-x^2) = cos(x)', _scaled_gap(values, np.cos(x)), 1.e-10))
    nonzero = y[y != 0]
    values, _ = mittag_leffler_array(MLParams(1., 2.), nonzero, **opts)
    exact = np.expm1(nonzero)/nonzero
    checks.append(_check('E_{1,2}(y) = (exp(y) - 1)/y', _scaled_gap(values, exact), 1.e-10))
    values, _ = wright_array(WrightParams(0., 1.), y, **opts)
    checks.append(_check('W_{0,1}(y) = exp(y)', _scaled_gap(values, np.exp(y)), 1.e-10))
    values, _ = wright_array(WrightParams(-0.5, 0.5), -x, **opts)
    exact = np.exp(-x**2/4)/math.sqrt(math.pi)
    checks.append(_check('W_{-1/2,1/2}(-x) = exp(-x^2/4)/sqrt(pi)',
                         _scaled_gap(values, exact), 1.e-10))
    return checks


def verify_fracops(tol=None, max_terms=None):
    checks = []
    rng = np.random.default_rng(0)
    gap_a = 0.
    for _ in range(200):
        alpha = rng.uniform(0.01, 0.99)
        beta = rng.uniform(0.001, 1 - alpha)
        report = check_law_of_exponents(PowerTerm(1., alpha + beta + 1), alpha, beta)
        gap_a = max(gap_a, report['max_abs_gap'])
    checks.append(_check('law of exponents in region A', gap_a, 0.))
    min_gap = np.inf
    for _ in range(200):
        alpha = rng.uniform(0.2, 0.99)
        beta = rng.uniform(1.01 - alpha, min(0.99, 1.8 - alpha))
        report = check_law_of_exponents(PowerTerm(1., 1.), alpha, beta)
        min_gap = min(min_gap, report['max_abs_gap'])
    # the check passes when the smallest gap stays above 0.1
    checks.append(_check('law of exponents fails in region B', 0.1/min_gap, 1.))
    for alpha in [0.3, 0.5, 0.8]:
        errors = []
        for k in range(7, 12):
            mesh = TimeMesh.over(1., 2**k)
            t = mesh.nodes
            out = caputo_grid(SampledFn(mesh, t**3), alpha)
            exact = 6/math.gamma(4 - alpha)*t**(3 - alpha)
            errors.append(np.max(np.abs(out.values - exact)))
        order = float(np.min(np.log2(np.array(errors[:-1])/np.array(errors[1:]))))
        checks.append(_check('caputo_grid order at alpha={0}'.format(alpha),
                             (2 - alpha - 0.15)/order, 1.))
    return checks


def verify_regions(tol=None, max_terms=None):
    points = 2*qmc.Sobol(d=2, scramble=True, seed=1).random_base2(m=20)
    points = points[(points[:, 0] > 0) & (points[:, 1] > 0)]
    alpha, beta = points[:, 0], points[:, 1]
    masks = region_masks(alpha, beta)
    count = sum(m.astype(int) for m in masks.values())
    swapped = region_masks(beta, alpha)
    asym = (np.count_nonzero(masks[Region.A] != swapped[Region.A])
            + np.count_nonzero(masks[Region.B] != swapped[Region.B])
            + np.count_nonzero(masks[Region.C] != swapped[Region.D]))
    return [_check('one label per point', np.count_nonzero(count != 1), 0),
            _check('swap symmetry', asym, 0)]


def verify_greens(tol=None, max_terms=None):
    checks = []
    for gamma in [0.5, 1., 1.5]:
        total = normalization(gamma, 1., 1., tol=tol)
        checks.append(_check('normalization at gamma={0}'.format(gamma),
                             abs(total - 1), 1.e-6))
    z = np.linspace(-6., 6., 121)
    gap = 0.
    for t in [0.25, 1.]:
        heat = np.exp(-z**2/(4*t))/(2*np.sqrt(np.pi*t))
        gap = max(gap, np.max(np.abs(fundamental_solution(1., 1., z, t, tol=tol) - heat)))
    checks.append(_check('heat kernel at gamma=1', gap, 1.e-9))

    g = GridField.centered(8., 64, lambda z: 1 + np.exp(-z**2))
    g_bar = GridField.centered(8., 64, lambda z: -2*z*np.exp(-z**2))
    p = SeqCauchyProblem(0.5, 0.3, 1., g, g_bar)
    f = solve_sequential(p, 1., tol=tol)
    checks.append(_check('mass at zero frequency', abs(f.mean() - g.mean()), 1.e-12))
    coarse = coupling_residuals(p, 1., TimeMesh.over(1., 32), tol=tol)
    fine = coupling_residuals(p, 1., TimeMesh.over(1., 64), tol=tol)
    for key in ('beta_eq', 'alpha_eq'):
        checks.append(_check('coupling residual {0}'.format(key), fine[key], 1.e-2))
        checks.append(_check('coupling residual {0} decreases'.format(key),
                             fine[key]/coarse[key], 1.))
    return checks


def verify_coupledsim(tol=None, max_terms=None):
    checks = []
    cfg = SimConfig.over(0.6, 0.4, 8., 32, 0.5, 128)
    rho = GridField.centered(8., 32, lambda z: 1 + np.exp(-z**2))
    w = GridField.centered(8., 32, lambda z: z*np.exp(-z**2))
    history = CoupledSimulator(cfg).run(CoupledState(rho, w), silent=True)
    means = history.rho.mean(axis=1)
    checks.append(_check('density mean conserved', np.max(np.abs(means - means[0])),
                         1.e-10))
    velocity = recover_velocity(history, cfg, w)
    checks.append(_check('velocity recovery', np.max(np.abs(velocity.values - history.w[-1])),
                         1.e-2))
    return checks


SUITES = dict(specfun=verify_specfun, fracops=verify_fracops,
              regions=verify_regions, greens=verify_greens,
              coupledsim=verify_coupledsim)


def run_suites(name='all', tol=None, max_terms=None, silent=False):
    """Run one suite, or all of them for ``name='all'``

    Returns
    -------
    report : dict
        ``{'suites': {name: {'checks': [...], 'passed': bool,
        'seconds': float}}, 'passed': bool}``

    """
    names = list(SUITES) if name == 'all' else [name]
    if any(n not in SUITES for n in names):
        raise ValueError('Unknown suite: {0}'.format(name))
    report = dict(suites={}, passed=True)
    for n in names:
        msg('Running verification suite {0}'.format(n), silent=silent)
        start = time.perf_counter()
        checks = SUITES[n](tol=tol, max_terms=max_terms)
        passed = all(c['passed'] for c in checks)
        for c in checks:
            msg('{0}: gap {1:.3g}, tol {2:.3g}, {3}'.format(c['name'], c['gap'],
                c['tol'], 'ok' if c['passed'] else 'FAILED'), level=1, silent=silent)
        report['suites'][n] = dict(checks=checks, passed=passed,
                                   seconds=time.perf_counter() - start)
        report['passed'] = report['passed'] and passed
    return report

r"""
Command-line interface

Every command writes its CSV files and a JSON manifest naming them into
``--out``. Exit codes: ``0`` success, ``2`` invalid arguments, ``3``
numerical failure, ``4`` failed invariant or verification.

"""
import argparse
import csv
import json
import os
import sys
import time

import numpy as np

from fracwave.version import __version__
from fracwave.constants import TOL, MAX_TERMS, DEFAULT_STEPS
from fracwave.errors import (FracwaveError, NonConvergenceError,
                             HistoryOverflowError, InvariantViolationError)
from fracwave.logger import msg, error, set_quiet
from fracwave.field import GridField, discrete_delta
from fracwave.specfun import (MLParams, WrightParams, mittag_leffler_array,
                              wright_array)
from fracwave.fracops import (TimeMesh, SampledFn, PowerTerm, caputo_power,
                              rl_integral_power, caputo_grid, rl_integral_grid)
from fracwave.regions import FracOrderPair, region_raster
from fracwave.greens import (SeqCauchyProblem, fundamental_solution,
                             default_half_width, solve_sequential,
                             solve_sequential_wright)
from fracwave.coupledsim import (FluidParams, CoupledState, SimConfig,
                                 CoupledSimulator)
from fracwave.verify import SUITES, run_suites


EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3
EXIT_INVARIANT = 4


def _fmt(value):
    if isinstance(value, str):
        return value
    return format(float(value), '.17g')


def write_csv(path, header, rows):
    """CSV with a header row, ``'.17g'`` floats and LF line endings"""
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
    return path


def write_manifest(out, command, args, outputs, start):
    parameters = {k: v for k, v in sorted(vars(args).items())
                  if k not in ('func', 'out', 'outputs', 'tol', 'max_terms',
                               'quiet')}
    manifest = dict(command=command,
                    version=__version__,
                    parameters=parameters,
                    tolerances=dict(tol=args.tol, max_terms=args.max_terms),
                    outputs=[os.path.basename(p) for p in outputs],
                    wall_time=time.perf_counter() - start)
    path = os.path.join(out, '{0}_manifest.json'.format(command))
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write('\n')
    return path


def _arguments(args):
    """Points of the ``--y`` / ``--y-min --y-max --n-points`` options"""
    if args.y is not None:
        return np.array(args.y, dtype=float)
    if args.y_min is None or args.y_max is None:
        raise ValueError('either --y or --y-min and --y-max are required')
    return np.linspace(args.y_min, args.y_max, args.n_points)


def _print_rows(header, rows):
    sys.stdout.write(','.join(header) + '\n')
    for row in rows:
        sys.stdout.write(','.join(_fmt(v) for v in row) + '\n')


def cmd_ml(args):
    ys = _arguments(args)
    values, errors = mittag_leffler_array(MLParams(args.eta, args.gamma), ys,
                                          tol=args.tol, max_terms=args.max_terms)
    header = ['y', 'value', 'est_abs_error']
    rows = list(zip(ys, values, errors))
    _print_rows(header, rows)
    return [write_csv(os.path.join(args.out, 'ml.csv'), header, rows)]


def cmd_wright(args):
    ys = _arguments(args)
    values, errors = wright_array(WrightParams(args.kappa, args.eta), ys,
                                  tol=args.tol, max_terms=args.max_terms)
    header = ['y', 'value', 'est_abs_error']
    rows = list(zip(ys, values, errors))
    _print_rows(header, rows)
    return [write_csv(os.path.join(args.out, 'wright.csv'), header, rows)]


def cmd_deriv(args):
    term = PowerTerm(args.coeff, args.exponent)
    mesh = TimeMesh.over(args.t_end, args.n_steps)
    t = mesh.nodes
    sampled = SampledFn(mesh, term(t))
    if args.integral:
        exact = rl_integral_power(term, args.alpha)(t)
        grid = rl_integral_grid(sampled, args.alpha).values
    else:
        with np.errstate(divide='ignore'):
            exact = caputo_power(term, args.alpha)(t)
        grid = caputo_grid(sampled, args.alpha).values
    rows = list(zip(t, exact, grid))
    return [write_csv(os.path.join(args.out, 'deriv.csv'), ['t', 'exact', 'grid'], rows)]


def cmd_regions(args):
    if args.resolution < 16:
        raise ValueError('--resolution must be >= 16')
    rows = region_raster(args.resolution)
    return [write_csv(os.path.join(args.out, 'regions.csv'),
                      ['alpha', 'beta', 'label'], rows)]


def cmd_green(args):
    z_max = args.z_max
    if z_max is None:
        z_max = 0.5*default_half_width(args.gamma, args.lam, args.t)
    z = np.linspace(-z_max, z_max, args.n_points)
    values = fundamental_solution(args.gamma, args.lam, z, args.t, tol=args.tol)
    return [write_csv(os.path.join(args.out, 'green.csv'), ['z', 'value'],
                      zip(z, values))]


def _initial_field(name, half_width, n):
    length = 2*half_width
    if name == 'zero':
        return GridField.centered(half_width, n)
    if name == 'gaussian':
        return GridField.centered(half_width, n, lambda z: np.exp(-z**2))
    if name == 'odd':
        return GridField.centered(half_width, n, lambda z: -2*z*np.exp(-z**2))
    if name == 'sine':
        return GridField.centered(half_width, n, lambda z: np.sin(2*np.pi*z/length))
    if name == 'delta':
        return discrete_delta(half_width, n)
    raise ValueError('Unknown initial field: {0}'.format(name))


def cmd_sequential(args):
    box = args.box
    if box is None:
        box = default_half_width(args.alpha + args.beta, args.lam, args.t)
    g = _initial_field(args.init, box, args.grid_n)
    g_bar = _initial_field(args.init_bar, box, args.grid_n)
    p = SeqCauchyProblem(args.alpha, args.beta, args.lam, g, g_bar)
    if args.route == 'wright':
        f = solve_sequential_wright(p, args.t, tol=args.tol, silent=args.quiet)
    else:
        f = solve_sequential(p, args.t, tol=args.tol, silent=args.quiet)
    return [write_csv(os.path.join(args.out, 'sequential.csv'), ['z', 'value'],
                      zip(f.z, f.values))]


def cmd_simulate(args):
    fluid = FluidParams(args.rho0, args.cs)
    box = args.box
    if box is None:
        box = default_half_width(args.alpha + args.beta, fluid.diffusivity, args.t_end)
    dt = args.t_end/DEFAULT_STEPS if args.dt is None else args.dt
    n_steps = max(1, int(round(args.t_end/dt)))
    grid = GridField.centered(box, args.grid_n)
    cfg = SimConfig(FracOrderPair(args.alpha, args.beta), fluid, TimeMesh(dt, n_steps),
                    grid, corrector=args.corrector, history_cap=args.history_cap,
                    truncate=args.truncate, num_cores=args.num_cores)
    init = CoupledState(_initial_field(args.init, box, args.grid_n),
                        _initial_field('zero', box, args.grid_n))
    history = CoupledSimulator(cfg).run(init, args.t_end, silent=args.quiet)
    outputs = []
    for k in history.snapshot_indices(args.snapshots):
        path = os.path.join(args.out, 'snapshot_{0:05d}.csv'.format(k))
        rows = zip(grid.z, history.rho[k], history.w[k])
        outputs.append(write_csv(path, ['z', 'rho_p', 'w_p'], rows))
    rows = [(k, t) for k, t in enumerate(history.times)]
    outputs.append(write_csv(os.path.join(args.out, 'times.csv'), ['level', 't'], rows))
    return outputs


def cmd_verify(args):
    report = run_suites(args.suite, tol=args.tol, max_terms=args.max_terms,
                        silent=args.quiet)
    path = os.path.join(args.out, 'verify_{0}.json'.format(args.suite))
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(report, f, indent=2, sort_keys=True)
        f.write('\n')
    if not report['passed']:
        failed = [c['name'] for s in report['suites'].values()
                  for c in s['checks'] if not c['passed']]
        args.outputs = [path]
        raise InvariantViolationError('failed checks: {0}'.format(', '.join(failed)))
    return [path]


def _common(parser):
    parser.add_argument('--out', default='.', help='output directory')
    parser.add_argument('--tol', type=float, default=TOL,
                        help='special function accuracy (default %(default)g)')
    parser.add_argument('--max-terms', type=int, default=MAX_TERMS,
                        help='series term cap (default %(default)d)')
    parser.add_argument('--quiet', action='store_true', help='no log messages')


def _points(parser):
    parser.add_argument('--y', type=float, nargs='+')
    parser.add_argument('--y-min', type=float)
    parser.add_argument('--y-max', type=float)
    parser.add_argument('--n-points', type=int, default=101)


def build_parser():
    parser = argparse.ArgumentParser(prog='fracwave',
        description='Fractional acoustic waves: special functions, '
                    'Green\'s functions and coupled simulations.')
    parser.add_argument('--version', action='version', version=__version__)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('ml', help='Mittag-Leffler function E_{eta,gamma}(y)')
    p.add_argument('--eta', type=float, required=True)
    p.add_argument('--gamma', type=float, required=True)
    _points(p)
    p.set_defaults(func=cmd_ml)

    p = sub.add_parser('wright', help='Wright function W_{kappa,eta}(y)')
    p.add_argument('--kappa', type=float, required=True)
    p.add_argument('--eta', type=float, required=True)
    _points(p)
    p.set_defaults(func=cmd_wright)

    p = sub.add_parser('deriv', help='Caputo derivative or RL integral of c*t**e')
    p.add_argument('--alpha', type=float, required=True)
    p.add_argument('--exponent', type=float, required=True)
    p.add_argument('--coeff', type=float, default=1.)
    p.add_argument('--integral', action='store_true')
    p.add_argument('--t-end', type=float, default=1.)
    p.add_argument('--n-steps', type=int, default=256)
    p.set_defaults(func=cmd_deriv)

    p = sub.add_parser('regions', help='region labels of the order plane')
    p.add_argument('--resolution', type=int, default=100)
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser('green', help='fundamental solution')
    p.add_argument('--gamma', type=float, required=True)
    p.add_argument('--lam', type=float, default=1.)
    p.add_argument('--t', type=float, default=1.)
    p.add_argument('--z-max', type=float)
    p.add_argument('--n-points', type=int, default=201)
    p.set_defaults(func=cmd_green)

    fields = ['zero', 'gaussian', 'odd', 'sine', 'delta']
    p = sub.add_parser('sequential', help='sequential Cauchy problem')
    p.add_argument('--alpha', type=float, required=True)
    p.add_argument('--beta', type=float, required=True)
    p.add_argument('--lam', type=float, default=1.)
    p.add_argument('--t', type=float, default=1.)
    p.add_argument('--grid-n', type=int, default=256)
    p.add_argument('--box', type=float, help='box half-width')
    p.add_argument('--init', choices=fields, default='gaussian')
    p.add_argument('--init-bar', choices=fields, default='zero')
    p.add_argument('--route', choices=['ml', 'wright'], default='ml')
    p.set_defaults(func=cmd_sequential)

    p = sub.add_parser('simulate', help='coupled density/velocity simulation')
    p.add_argument('--alpha', type=float, required=True)
    p.add_argument('--beta', type=float, required=True)
    p.add_argument('--rho0', type=float, default=1.)
    p.add_argument('--cs', type=float, default=1.)
    p.add_argument('--grid-n', type=int, default=128)
    p.add_argument('--box', type=float, help='box half-width')
    p.add_argument('--t-end', type=float, default=1.)
    p.add_argument('--dt', type=float)
    p.add_argument('--init', choices=['gaussian', 'delta', 'sine'], default='gaussian')
    p.add_argument('--snapshots', type=int, default=5)
    p.add_argument('--corrector', choices=['implicit', 'pece'], default='implicit')
    p.add_argument('--history-cap', type=int)
    p.add_argument('--truncate', action='store_true')
    p.add_argument('--num-cores', type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('verify', help='run verification suites')
    p.add_argument('suite', choices=list(SUITES) + ['all'])
    p.set_defaults(func=cmd_verify)

    for p in sub.choices.values():
        _common(p)
    return parser


def _report(e, args):
    # library errors are logged where they are raised
    if not isinstance(e, FracwaveError) or isinstance(e, InvariantViolationError):
        error(str(e), silent=args.quiet)


def main(argv=None):
    """Entry point, returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    set_quiet(args.quiet)
    try:
        return _run(args)
    finally:
        set_quiet(False)


def _run(args):
    start = time.perf_counter()
    args.outputs = []
    code = EXIT_OK
    try:
        os.makedirs(args.out, exist_ok=True)
        args.outputs = args.func(args)
    except (NonConvergenceError, HistoryOverflowError) as e:
        _report(e, args)
        code = EXIT_NUMERICAL
    except InvariantViolationError as e:
        _report(e, args)
        code = EXIT_INVARIANT
    except ValueError as e:
        _report(e, args)
        return EXIT_INVALID
    path = write_manifest(args.out, args.command, args, args.outputs, start)
    msg('Wrote {0}'.format(path), silent=args.quiet)
    return code


if __name__ == '__main__':
    sys.exit(main())

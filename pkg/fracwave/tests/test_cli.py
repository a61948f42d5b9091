import csv
import json
import logging
import os

import mpmath
import numpy as np

from fracwave.cli import main
from fracwave.logger import logger


def read_csv(path):
    with open(path, newline='') as f:
        return list(csv.reader(f))


def read_manifest(out, command):
    with open(os.path.join(out, '{0}_manifest.json'.format(command))) as f:
        return json.load(f)


def check_outputs(out, command):
    manifest = read_manifest(out, command)
    assert manifest['command'] == command
    for name in manifest['outputs']:
        assert os.path.isfile(os.path.join(out, name))
    return manifest


def test_ml(tmp_path, capsys):
    out = str(tmp_path)
    assert main(['ml', '--eta', '1', '--gamma', '1', '--y', '1', '--out', out,
                 '--quiet']) == 0
    printed = capsys.readouterr().out.splitlines()
    assert printed[0] == 'y,value,est_abs_error'
    assert printed[1].split(',')[1].startswith('2.718281828')
    rows = read_csv(os.path.join(out, 'ml.csv'))
    assert rows[1][1] == printed[1].split(',')[1]
    manifest = check_outputs(out, 'ml')
    assert manifest['outputs'] == ['ml.csv']
    assert manifest['tolerances']['tol'] == 1e-12


def test_ml_oracle(tmp_path, capsys):
    out = str(tmp_path)
    assert main(['ml', '--eta', '0.8', '--gamma', '1', '--y', '-2.5', '--out', out,
                 '--quiet']) == 0
    value = float(read_csv(os.path.join(out, 'ml.csv'))[1][1])
    with mpmath.workdps(40):
        oracle = mpmath.fsum(mpmath.mpf(-2.5)**k*mpmath.rgamma(mpmath.mpf(0.8)*k + 1)
                             for k in range(200))
    assert abs(value - float(oracle)) < 1e-12


def test_wright(tmp_path, capsys):
    out = str(tmp_path)
    assert main(['wright', '--kappa', '0', '--eta', '1', '--y', '1.3', '--out', out,
                 '--quiet']) == 0
    value = float(read_csv(os.path.join(out, 'wright.csv'))[1][1])
    assert np.isclose(value, 3.669296668, atol=1e-9)


def test_deterministic(tmp_path, capsys):
    bodies = []
    for name in ['a', 'b']:
        out = str(tmp_path/name)
        assert main(['ml', '--eta', '0.6', '--gamma', '1.2', '--y-min', '-4',
                     '--y-max', '4', '--n-points', '17', '--out', out, '--quiet']) == 0
        with open(os.path.join(out, 'ml.csv'), 'rb') as f:
            bodies.append(f.read())
    assert bodies[0] == bodies[1]
    assert b'\r' not in bodies[0]
    assert bodies[0].count(b'\n') == 18


def test_regions(tmp_path):
    out = str(tmp_path)
    assert main(['regions', '--resolution', '20', '--out', out, '--quiet']) == 0
    rows = read_csv(os.path.join(out, 'regions.csv'))
    assert rows[0] == ['alpha', 'beta', 'label']
    labels = {(float(a), float(b)): label for a, b, label in rows[1:]}
    assert len(labels) == 19*19
    assert labels[(0.5, 0.3)] == 'A'
    assert labels[(1.5, 0.5)] == 'D'
    assert labels[(1.9, 1.9)] == 'Outside'
    check_outputs(out, 'regions')
    assert main(['regions', '--resolution', '8', '--out', out, '--quiet']) == 2


def test_green(tmp_path):
    out = str(tmp_path)
    assert main(['green', '--gamma', '1', '--z-max', '2', '--n-points', '5',
                 '--out', out, '--quiet']) == 0
    rows = read_csv(os.path.join(out, 'green.csv'))
    values = {float(z): float(v) for z, v in rows[1:]}
    assert np.isclose(values[0.], 0.2820947918, atol=1e-10)
    assert np.isclose(values[2.], 0.1037768744, atol=1e-10)
    assert main(['green', '--gamma', '2', '--out', out, '--quiet']) == 2
    assert main(['green', '--gamma', '1', '--t', '0', '--out', out, '--quiet']) == 2


def test_deriv(tmp_path):
    out = str(tmp_path)
    assert main(['deriv', '--alpha', '0.5', '--exponent', '1', '--n-steps', '512',
                 '--out', out, '--quiet']) == 0
    rows = np.array(read_csv(os.path.join(out, 'deriv.csv'))[1:], dtype=float)
    assert np.max(np.abs(rows[:, 1] - rows[:, 2])) < 2e-3
    assert main(['deriv', '--alpha', '0.5', '--exponent', '1', '--integral',
                 '--out', out, '--quiet']) == 0


def test_sequential(tmp_path):
    out = str(tmp_path)
    assert main(['sequential', '--alpha', '0.5', '--beta', '0.5', '--t', '0.5',
                 '--grid-n', '128', '--box', '10', '--out', out, '--quiet']) == 0
    rows = np.array(read_csv(os.path.join(out, 'sequential.csv'))[1:], dtype=float)
    z = rows[:, 0]
    exact = np.exp(-z**2/3)/np.sqrt(3)
    assert np.max(np.abs(rows[:, 1] - exact)) < 1e-8
    assert main(['sequential', '--alpha', '1.9', '--beta', '1.9', '--out', out,
                 '--quiet']) == 2


def test_simulate(tmp_path):
    out = str(tmp_path)
    assert main(['simulate', '--alpha', '0.5', '--beta', '0.5', '--grid-n', '32',
                 '--box', '8', '--t-end', '0.5', '--dt', '0.0078125',
                 '--snapshots', '3', '--out', out, '--quiet']) == 0
    manifest = check_outputs(out, 'simulate')
    snapshots = [n for n in manifest['outputs'] if n.startswith('snapshot_')]
    assert len(snapshots) == 3
    rows = read_csv(os.path.join(out, snapshots[-1]))
    assert rows[0] == ['z', 'rho_p', 'w_p']
    assert len(rows) == 33
    assert main(['simulate', '--alpha', '0.5', '--beta', '0.5', '--grid-n', '32',
                 '--t-end', '0.5', '--dt', '0.3', '--out', out, '--quiet']) == 2
    assert main(['simulate', '--alpha', '0.5', '--beta', '0.5', '--grid-n', '32',
                 '--t-end', '0.5', '--dt', '0.0625', '--history-cap', '4',
                 '--out', out, '--quiet']) == 3


def test_verify(tmp_path):
    out = str(tmp_path)
    assert main(['verify', 'regions', '--out', out, '--quiet']) == 0
    with open(os.path.join(out, 'verify_regions.json')) as f:
        report = json.load(f)
    assert report['passed']
    assert all(c['passed'] for c in report['suites']['regions']['checks'])
    check_outputs(out, 'verify')


def test_invalid_arguments(tmp_path):
    assert main([]) == 2
    assert main(['nope']) == 2
    assert main(['ml', '--eta', '1', '--out', str(tmp_path), '--quiet']) == 2
    assert main(['ml', '--eta', '-1', '--gamma', '1', '--y', '1', '--out',
                 str(tmp_path), '--quiet']) == 2



def test_quiet(tmp_path, caplog):
    out = str(tmp_path)
    logger.addHandler(caplog.handler)
    try:
        assert main(['green', '--gamma', '2', '--out', out, '--quiet']) == 2
        assert not caplog.records
        assert logger.level == logging.INFO
        assert main(['green', '--gamma', '2', '--out', out]) == 2
        assert any(r.levelno == logging.ERROR for r in caplog.records)
    finally:
        logger.removeHandler(caplog.handler)


if __name__ == '__main__':
    import tempfile
    import pathlib
    test_regions(pathlib.Path(tempfile.mkdtemp()))

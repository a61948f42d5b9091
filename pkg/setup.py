#!/usr/bin/env python
"""fracwave: time-fractional acoustics of a compressible fluid in Python
Mittag-Leffler and Wright special functions, Caputo derivatives and
Riemann-Liouville integrals, the order-plane region taxonomy, analytic
solvers for fractional diffusion-wave and sequential Cauchy problems and a
spectral simulator of the coupled density/velocity system.
"""
import os
import subprocess
from setuptools import setup, find_packages


DOCLINES = __doc__.split("\n")


def git_version():
    """Short hash of HEAD, or 'Unknown' outside a git checkout"""
    env = {k: os.environ[k] for k in ('SYSTEMROOT', 'PATH') if k in os.environ}
    env.update(LANGUAGE='C', LANG='C', LC_ALL='C')
    try:
        proc = subprocess.run(['git', 'rev-parse', '--short=7', 'HEAD'],
                              capture_output=True, env=env)
    except OSError:
        return 'Unknown'
    return proc.stdout.strip().decode('ascii') or 'Unknown'


def get_version_info(version, is_released):
    if is_released:
        return version
    return '{0}.dev0+{1}'.format(version, git_version())


def write_version_py(version, is_released, filename='fracwave/version.py'):
    fullversion = get_version_info(version, is_released)
    with open(filename, 'w', encoding='utf-8') as f:
        f.write('__version__ = "{0}"\n'.format(fullversion))
    return fullversion


def read(fname):
    setupdir = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(setupdir, fname), encoding='utf-8') as f:
        return f.read()


#_____________________________________________________________________________

install_requires = [
        "numpy >= 1.23.0",
        "scipy >= 1.8",
        "mpmath",
        ]

CLASSIFIERS = """\
Development Status :: 3 - Alpha
Intended Audience :: Science/Research
Topic :: Scientific/Engineering
Topic :: Scientific/Engineering :: Mathematics
Topic :: Scientific/Engineering :: Physics
Operating System :: OS Independent
Programming Language :: Python :: 3
License :: OSI Approved :: BSD License
"""

is_released = False
version = '0.1.0'

fullversion = write_version_py(version, is_released)

package_data = {
        '': ['tests/*.*'],
        }

s = setup(
    name = "fracwave",
    version = fullversion,
    description = DOCLINES[0],
    long_description = read('README.md'),
    long_description_content_type = 'text/markdown',
    license = "BSD",
    keywords=['fractional', 'calculus', 'Caputo', 'Mittag-Leffler',
        'Wright', 'anomalous diffusion', 'acoustics'],
    package_data = package_data,
    classifiers = [_f for _f in CLASSIFIERS.split('\n') if _f],
    install_requires = install_requires,
    python_requires = '>=3.8',
    entry_points = {
        'console_scripts': ['fracwave = fracwave.cli:main'],
        },
    packages = find_packages(exclude=['examples', 'examples.*']),
)

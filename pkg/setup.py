#!/usr/bin/env python3
import os
import sys
from setuptools import setup
from qhtoeplitz import __version__ as VERSION

if sys.version_info < (3, 6):
    sys.exit('Python 3.6 is required to run qhtoeplitz')

data_files = []

for directory, _, filenames in os.walk(u'share'):
    dest = directory[6:]
    if filenames:
        files = []
        for filename in filenames:
            filename = os.path.join(directory, filename)
            files.append(filename)
        data_files.append((os.path.join('share', dest), files))

setup(
    name='qhtoeplitz',
    version=VERSION,
    license='GPL-3',
    packages=[
        'qhtoeplitz',
        'qhtoeplitz.theorems',
        'qhtoeplitz.util',
    ],
    scripts=['bin/qhtoeplitz'],
    data_files=data_files,
    zip_safe=False,
    install_requires=[
        'PyYAML',
        'appdirs',
        'numpy',
        'scipy',
    ],
    entry_points={
        'console_scripts': ['qhtoeplitz-cli = qhtoeplitz.cli:main'],
    },
    description='Finite-rank products of quasihomogeneous Toeplitz operators',
    long_description="""qhtoeplitz computes commutators and generalized
    semicommutators of quasihomogeneous Toeplitz operators on the Bergman and
    harmonic Bergman spaces of the unit disk, detects when they have finite
    rank, extracts their rank-one canonical forms and checks the
    classification theorems that predict them.""",
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Programming Language :: Python',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
)

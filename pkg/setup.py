#!/usr/bin/env python
import os
try:
    from setuptools import setup
except ImportError:
    from ez_setup import use_setuptools
    use_setuptools()
    from setuptools import setup

long_description = """Zero forcing sets, bounds and certificates for generalized Johnson, Grassmann and Hamming graphs."""

if os.path.isfile("DESCRIPTION.rst"):
    with open('DESCRIPTION.rst') as file:
        long_description = file.read()

setup(
    name='python-zeroforcing',
    version='0.1.0',
    description='Zero forcing on generalized Johnson, Grassmann and Hamming graphs',
    packages=['zeroforcing'],
    install_requires=['jsonpickle', 'numpy'],
    test_suite='zeroforcing.tests',
    entry_points={
        'console_scripts': ['zeroforcing=zeroforcing.cli:main'],
    },
    license='LGPL v3',
    long_description=long_description
)

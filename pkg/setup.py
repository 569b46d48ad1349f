from __future__ import absolute_import, division, print_function, unicode_literals

from setuptools import find_packages, setup

import cychom

classifiers = [
    'Development Status :: 2 - Pre-Alpha',
    'Programming Language :: Python :: 3',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Topic :: Scientific/Engineering :: Mathematics',
]

with open('README.rst', 'r') as fp:
    long_description = fp.read()

setup(name='cychom',
      version=cychom.__version__,
      packages=find_packages(exclude=['tests', 'tests.*']),
      include_package_data=True,
      package_data={'cychom': ['data/*.json']},
      install_requires=['six', 'sympy>=1.12'],
      tests_require=['pytest', 'hypothesis'],
      test_suite='tests',
      entry_points={'console_scripts': ['cychom = cychom.cli:main']},
      license='MIT',
      description='Exact Hochschild and cyclic homology, strong connections and Chern characters',
      long_description=long_description,
      classifiers=classifiers,
      python_requires='>=3.8, <4',
      )

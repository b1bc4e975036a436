import io
import os

from setuptools import setup, find_packages


here = os.path.abspath(os.path.dirname(__file__))

# Avoids IDE errors, but actual version is read from version.py
__version__ = None
exec(open('twistlie/version.py').read())

short_description = 'Exact normal forms, diamond lemma checks and Lie ' \
                    'polynomial characterization for AB = mBA + bI.'

# Get the long description from the README file
with io.open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

install_requires = [
    'sympy >= 1.5',
    'numpy >= 1.14',
    'pandas >= 0.25',
    'tqdm >= 4.19.4',
    'dill >= 0.2.7.1',
    'tabulate >= 0.8.2',
    'click >= 7.0',
]

extras_requires = {
    'tests': [
        'coverage >= 4.3.4',
        'codecov >= 2.0.15',
        'pytest >= 3.7.4',
        'pytest-cov >= 2.4.0',
        'hypothesis >= 4.0',
        'flake8 >= 3.6.0',
        'flake8_docstrings >= 1.3.0'],
}


setup(
    name="TwistLie",
    version=__version__,
    author="TwistLie contributors",
    description=(short_description),
    license="Apache 2.0",
    keywords="noncommutative algebra diamond lemma lie polynomials",
    packages=find_packages(exclude=['tests', 'tests.*']),
    long_description=long_description,
    long_description_content_type='text/markdown',
    classifiers=[
        "Development Status :: 3 - Alpha",
        'Environment :: Console',
        'Operating System :: POSIX :: Linux',
        'Topic :: Scientific/Engineering :: Mathematics',
        "License :: OSI Approved :: Apache Software License",
        'Programming Language :: Python :: 3.6'
    ],
    install_requires=install_requires,
    extras_require=extras_requires,
    entry_points={
        'console_scripts': ['twistlie = twistlie.cli:main'],
    },
)

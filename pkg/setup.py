#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from setuptools import setup, find_packages

# Setup the project
setup(
    name="subcondpy",
    version="1.0.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "scipy",
        "pandas>=1.5",
        "setuptools",
    ],
    extras_require={
        "tests": [
            "pytest",
            "hypothesis",
        ],
    },
    entry_points={
        "console_scripts": [
            "subcondpy=subcondpy.cli.main:main",
        ],
    },
    description="Tolerant closeness testing of distributions over strings under subcube conditioning",
    long_description="This is a Python library for testing whether two distributions over strings \
        of a fixed length are close or far in total variation distance, when both can only be \
        accessed through subcube conditional sampling. It includes the point evaluator that \
        estimates the probability of a single string, the taming transform that keeps every \
        conditional marginal away from zero, the tolerant tester itself, simulated oracles over \
        explicit, product and chain models, and a seeded validation suite for every guarantee.",
)

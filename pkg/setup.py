"""setup.py shim for tools that cannot read pyproject.toml."""

from setuptools import find_packages, setup

# Metadata, dependencies and package data live in pyproject.toml.
setup(
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    package_data={"koszul_golod": ["classifier/data/*.json"]},
)

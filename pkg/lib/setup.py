from setuptools import setup, find_packages

setup(
    name="hadamard_algebra",
    version="0.1",
    packages=find_packages(exclude=["*.tests"]),
    install_requires=[
        "django",
        "sympy",
    ],
)

#!/usr/bin/env python3
from setuptools import setup, find_packages

setup(
    name="vertex-ramsey-toolkit",
    version="0.1.0",
    description="Vertex Ramsey toolkit: degeneracy, certified colourings and random F-free dense graphs",
    author="Your Name",
    python_requires=">=3.8",
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    py_modules=["main"],
    install_requires=[
        "numpy>=1.22",
    ],
    extras_require={
        "dev": ["pytest", "hypothesis", "networkx", "jsonschema", "black", "flake8"],
    },
    entry_points={
        "console_scripts": [
            "vertex-ramsey=main:main",
        ],
    },
)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages
import os

# Read version from tree_ramsey/version.py or use default
version = "0.1.0"
try:
    version_file = os.path.join(os.path.dirname(__file__), 'tree_ramsey', 'version.py')
    with open(version_file, 'r', encoding='utf-8') as f:
        for line in f.readlines():
            if line.startswith('__version__'):
                version = line.split('=')[1].strip().strip('"')
                break
except OSError:
    pass

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as f:
    requirements = [line.strip() for line in f.readlines() if line.strip()]

setup(
    name="tree_ramsey",
    version=version,
    author="Original Author",
    author_email="author@example.com",
    description="Search and verify arithmetic structures in dense subsets of products of trees",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["test", "test.*"]),
    include_package_data=True,
    package_data={
        "tree_ramsey": [
            "*.json",
            "templates/*.j2",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "tree-ramsey=tree_ramsey.cli:main",
        ],
    },
)

# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

import os
import re

from setuptools import setup


def get_version():
    here = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(here, "hitset", "_version.py")) as f:
        return re.search(r'__version__ = "([^"]+)"', f.read()).group(1)


setup(
    name="hitset",
    packages=["hitset"],
    version=get_version(),
    python_requires=">=3.8",
    install_requires=["numpy>=1.17", "sortedcontainers>=2.1"],
    extras_require={"test": ["pytest", "hypothesis"], "docs": ["sphinx", "numpydoc"]},
    entry_points={"console_scripts": ["hitset=hitset.cli:main"]},
    description="Exact minimum-weight hitting sets for line-constrained disks "
    "and half-planes",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    author="The hitset authors",
    license="BSD-3-Clause",
    classifiers=[
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
)

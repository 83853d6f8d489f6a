from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from setuptools import setup, find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()

dask_deps = ["dask[complete]>=2.1.0", "distributed>=2.3.2"]
ray_deps = ["ray>=0.7.3"]

setup(
    name="fracslice",
    version="0.1.0",
    description="fracslice: numerical fractional slice monogenic calculus over Clifford algebras.",
    packages=find_packages(),
    package_data={"fracslice.harness": ["default.cfg"]},
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=["numpy", "scipy", "pandas>=0.25.2"],
    extras_require={
        # can be installed by pip install fracslice[dask]
        "dask": dask_deps,
        "ray": ray_deps,
        "all": dask_deps + ray_deps,
    },
    entry_points={"console_scripts": ["fracslice=fracslice.harness.cli:main"]},
)

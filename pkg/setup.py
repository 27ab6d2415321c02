"""Builds the optional compiled kernels; the package works without them."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "knotpoly._kernels._speedups",
                ["src/knotpoly/_kernels/_speedups.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)

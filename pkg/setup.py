"""Build script for the optional compiled kernels.

The package works without the extension (a numpy fallback is selected at
import time), so the extension is marked optional: a missing compiler or
Cython degrades the install instead of failing it.
"""

import warnings

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "digitaudit._fastkernels",
        ["src/digitaudit/_fastkernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

if cythonize is not None:
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
else:
    warnings.warn("Cython not available; installing with pure-Python kernels only")
    ext_modules = []

setup(ext_modules=ext_modules)

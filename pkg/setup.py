"""Build script: compiles the optional float-kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed compile only costs speed, never functionality.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "quatpoly._kernel_c",
                ["src/quatpoly/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    sys.stderr.write(f"quatpoly: skipping compiled kernel ({exc!r})\n")
    ext_modules = []

setup(ext_modules=ext_modules)

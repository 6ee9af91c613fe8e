"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a missing compiler or Cython
only costs speed, never correctness.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "grlsim._ckernels",
                ["src/grlsim/_ckernels.pyx"],
                # -ffp-contract=off keeps the compiled adjacency predicate
                # bit-identical to the pure-Python/numpy fallback (no FMA).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

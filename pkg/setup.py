"""Build the optional Cython kernels.

The package imports and runs without them; ``bsdh_fano.kernels`` falls back
to the pure-Python implementation when the extension is missing.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "bsdh_fano._ckernels",
                ["src/bsdh_fano/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)

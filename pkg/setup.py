"""Build script for the optional compiled kernel backend.

The package is pure Python except for one extension module,
``higgsres._kernels._fast``, which mirrors ``higgsres._kernels.pure``.
The extension is marked optional: if Cython or a C compiler is missing
the install still succeeds and the package falls back to the pure
backend at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "higgsres._kernels._fast",
                ["src/higgsres/_kernels/_fast.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    for ext in extensions:
        ext.optional = True
except ImportError:
    extensions = []

setup(ext_modules=extensions)

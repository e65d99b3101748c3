"""Build hook for the optional compiled kernels.

The package is fully functional without the extension; rxkit._kernels
falls back to the vectorized numpy implementation when the native module
is absent. Set RXKIT_PURE_PYTHON=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("RXKIT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "rxkit._kernels._native",
                    sources=["src/rxkit/_kernels/_native.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)

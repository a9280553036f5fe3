"""Build script: compiles the enumeration kernels when Cython is available.

Without Cython the package still installs; kclass._core then selects the
numpy fallback at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kclass._core._speedups",
                ["src/kclass/_core/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

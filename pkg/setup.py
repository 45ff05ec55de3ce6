"""Build script: compiles the optional term-arithmetic speedup extension.

The extension is marked optional; if the build fails the package falls back
to the pure-Python kernel in kdvsym._kernel._pure.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kdvsym._kernel._speedups",
                ["src/kdvsym/_kernel/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

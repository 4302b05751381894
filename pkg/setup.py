"""Build hook: compile the optional kernel extension when Cython is available.

The package is pure Python; `quasiortho._kernels_c` is a compiled twin of
`quasiortho._kernels_py` picked up at import time if present.  Every failure
mode here (no Cython, no compiler) degrades to the pure-Python kernels.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({ext.name}): {exc}")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/quasiortho/_kernels_c.pyx"], language_level=3
    )
except Exception as exc:
    warnings.warn(f"building without compiled kernels: {exc}")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})

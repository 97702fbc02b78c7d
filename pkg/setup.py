"""Build the optional compiled enumeration kernels.

The package is pure Python except for ``singlab._kernels``, a small Cython
module that speeds up lattice-box scans.  If Cython or a C compiler is
missing the build falls back to a pure install; ``singlab._engine`` then
selects the Python implementation of the same kernels at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to a pure-Python install on any failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: compiled kernels were not built (%s); "
            "singlab will use the pure-Python fallback" % exc,
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("singlab._kernels", ["src/singlab/_kernels.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})

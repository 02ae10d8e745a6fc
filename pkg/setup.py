"""Build hook for the optional compiled decision kernel.

The package is pure Python out of the box. When Cython and a C compiler
are available, ``src/edc/_kernels.pyx`` is compiled and preferred at
import time; a failed extension build must never fail the install, it
only means the pure-Python kernels are used.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to the pure-Python kernels on any failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, link failure, ...
            print(f"warning: skipping compiled kernels ({exc}); "
                  "falling back to pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure Python")


def extensions():
    if os.environ.get("EDC_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "edc._kernels",
                ["src/edc/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})

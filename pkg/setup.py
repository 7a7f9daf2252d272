"""Build script: compiles the bitset kernel extension when a toolchain
is available and falls back to the pure-Python kernels otherwise."""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    'Treat extension build failures as a soft error; the package still works.'

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"skipping compiled kernels ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name} ({exc}); using pure-Python fallback")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "togglekit.kernels._bitops",
                ["src/togglekit/kernels/_bitops.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})

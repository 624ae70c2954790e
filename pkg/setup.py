"""Build shim: compile the Cython kernel, fall back to pure Python on failure."""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class OptionalBuildExt(build_ext):
    """The compiled core is an accelerator; a failed compile must not block install."""

    def run(self):
        try:
            super().run()
        except (CCompilerError, ExecError, PlatformError) as exc:
            print(f"WARNING: skipping compiled kernel ({exc}); "
                  "somborlab will use the pure-Python fallback", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError) as exc:
            print(f"WARNING: skipping {ext.name} ({exc}); "
                  "somborlab will use the pure-Python fallback", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython unavailable; building without the compiled kernel",
              file=sys.stderr)
        return []
    from setuptools.extension import Extension

    return cythonize(
        [
            Extension(
                "somborlab._kernels._core",
                ["src/somborlab/_kernels/_core.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})

import sys

import numpy
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    """Build the C kernels if possible; the package falls back to the
    pure-Python kernels when the extension is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping compiled kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not compile {ext.name} ({exc})", file=sys.stderr)


if sys.platform == "win32":
    compile_args = ["/O2"]
else:
    compile_args = ["-O3"]

extensions = [
    Extension(
        "fastbin._ckernels",
        ["src/fastbin/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=compile_args,
        language="c",
    )
]

if cythonize is not None:
    ext_modules = cythonize(extensions, language_level="3")
else:
    print("warning: Cython not available, building without compiled kernels", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})

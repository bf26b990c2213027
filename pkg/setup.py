# Builds the optional compiled scan kernel. The package imports and runs
# without it (pure-Python fallback), so a failed build is not fatal.
import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("PFHULL_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "pfhull.kernels._scan",
                    ["src/pfhull/kernels/_scan.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover
        print(f"pfhull: compiled kernel disabled ({exc})", file=sys.stderr)
        ext_modules = []

setup(ext_modules=ext_modules)

"""Build script: compiles the optional F2 kernel extension.

The package works without the extension (a pure-Python backend is selected at
import time), so any failure here degrades to a pure install instead of
aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "jacrank._f2core",
                sources=["src/jacrank/_f2core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"jacrank: skipping compiled F2 kernel ({exc}); pure backend will be used")

setup(ext_modules=ext_modules)

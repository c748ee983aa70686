"""Build script: compiles the optional crossing-count extension when Cython
and a C compiler are available, otherwise installs pure-Python only."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hiveplot/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

"""Build script.

The compiled kernel is optional: when Cython (and a C toolchain) is
available the hot rational/vector routines are compiled, otherwise the
pure-Python twin in plexalg.kernel is used at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/plexalg/kernel/_ratvec_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

"""Build script: compiles the optional word-operator kernel.

The package is pure Python; the Cython extension only accelerates the
inner-loop word operators.  If Cython is unavailable the extension is
skipped and the pure fallback in ``queercrystals._kernel_py`` is used.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/queercrystals/_fastops.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

"""Build script: compiles the optional kernel extension when Cython is
available; the pure-Python fallback keeps the package fully functional
without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/qgroupoid/_kernel_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

"""Builds the optional compiled histogram kernel.

The package works without the extension: entrovol.kernels falls back to the
NumPy implementation when entrovol._ckernels is not importable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("entrovol._ckernels", ["src/entrovol/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

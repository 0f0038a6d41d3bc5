"""Build the optional fraction-free RREF extension.

The extension is a speedup only: if Cython or a C compiler is unavailable the
install still succeeds and bihomlie.linalg falls back to the pure-Python
kernel with identical results.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "bihomlie._rrefc",
                sources=["src/bihomlie/_rrefc.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

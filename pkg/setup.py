"""Build script for the optional compiled counting kernels.

The package is fully functional without the extension (a NumPy fallback is
selected at import time); the extension only speeds up the hot counting
loops.  Build failures are therefore demoted to warnings via ``optional``.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext = Extension(
        "failprob._kernels_cy",
        sources=["src/failprob/_kernels_cy.pyx"],
        include_dirs=[numpy.get_include()],
        # no -ffast-math: the kernels rely on IEEE inf/nan semantics for
        # clamped standardized coordinates
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext.optional = True
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

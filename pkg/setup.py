import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "repbar._fp._core",
                ["src/repbar/_fp/_core.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-Python backend is selected at import time when the extension
    # is unavailable; the package remains fully functional.
    ext_modules = []

setup(ext_modules=ext_modules)

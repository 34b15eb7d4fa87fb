from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure
# backend at import time when the extension is unavailable.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "dynaclique._kernels._speedups",
                sources=["src/dynaclique/_kernels/_speedups.pyx"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# implementations in oddbalanced._kernels_py if the extension is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("oddbalanced._speedups", ["src/oddbalanced/_speedups.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

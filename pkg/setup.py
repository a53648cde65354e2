from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # fall back to the pure-Python kernels
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("ecsum._ckernel", ["src/ecsum/_ckernel.pyx"], optional=True)],
        language_level=3,
    )

setup(ext_modules=ext_modules)

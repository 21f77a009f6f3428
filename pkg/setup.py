from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: install the pure-Python fallback only
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("tangle4._ckernels", ["src/tangle4/_ckernels.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)

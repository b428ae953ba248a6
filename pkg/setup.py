import os

from setuptools import setup

ext_modules = []
if not os.environ.get("KNOTREP_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("knotrep._kernels", ["src/knotrep/_kernels.pyx"],
                       extra_compile_args=["-O3"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

import os

from setuptools import Extension, setup

# The compiled kernels are an optional accelerator. Builds without Cython,
# or with STONEKIT_PURE set, fall back to the pure-Python kernels.
ext_modules = []
if os.environ.get("STONEKIT_PURE", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext = Extension("stonekit._core", ["src/stonekit/_core.pyx"])
        ext.optional = True
        ext_modules = cythonize(
            [ext],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)

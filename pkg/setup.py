"""Build the optional compiled kernel.

When Cython (or a C compiler) is unavailable the package still installs and
runs on the pure-Python kernels; the extension only accelerates.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "einbool._kernels_c",
                ["src/einbool/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

import os

from setuptools import Extension, setup

# The compiled kernel is optional: tegreconf.kernels falls back to the pure
# Python implementation when the extension is missing. Set TEGRECONF_NO_EXT=1
# to skip compilation entirely.
ext_modules = []
if os.environ.get("TEGRECONF_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("tegreconf._kernels", ["src/tegreconf/_kernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

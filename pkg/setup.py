"""Build the optional Cython kernel.

The extension is optional: if Cython or a C compiler is missing the package
still installs and ``fnq.kernel`` falls back to the pure-Python implementation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FNQ_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("fnq._kernel", ["src/fnq/_kernel.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)

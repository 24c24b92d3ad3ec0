"""Build script: compiles the optional Cython solver kernel.

If Cython or a C compiler is unavailable the build falls back to a
pure-Python package; the kernel dispatch in phaserec.kernels picks the
numpy implementation at import time.
"""

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "phaserec.kernels._core",
                ["src/phaserec/kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

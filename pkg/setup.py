import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("RADSQ_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("radsq._kernels", ["src/radsq/_kernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)

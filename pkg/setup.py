import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FREEPROD_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("freeprod._ckernels", ["src/freeprod/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)

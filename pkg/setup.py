from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "greenp.ffalg._core",
                ["src/greenp/ffalg/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # pure-python backend still works without the compiled core
    ext_modules = []

setup(ext_modules=ext_modules)

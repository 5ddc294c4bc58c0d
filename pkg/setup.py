from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # optional=True: a failed compile leaves the pure fallback in charge.
    ext_modules = cythonize(
        [
            Extension(
                "ksforge._kernels._brutescan",
                ["src/ksforge/_kernels/_brutescan.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)

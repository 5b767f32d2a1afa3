import os

from setuptools import Extension, setup

# The compiled Ryser kernel is optional: the package falls back to the pure
# Python implementation when the extension is absent or TRADEFORGE_PURE=1.
ext_modules = []
if os.environ.get("TRADEFORGE_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "tradeforge._ryser",
                    ["src/tradeforge/_ryser.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

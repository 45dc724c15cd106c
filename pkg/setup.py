from setuptools import Extension, setup

# The compiled elimination kernel is optional: the package falls back to the
# pure-Python kernel in ordertop._kernel._pure when the extension is absent.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "ordertop._kernel._speedups",
                ["src/ordertop/_kernel/_speedups.pyx"],
                language="c++",
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

from setuptools import setup

# The compiled row-reduction kernel is optional: the package falls back to
# the pure-Python twin in lcsq/_rowred_py.py when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lcsq/_rowred_c.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

"""Build hook for the optional compiled scanner.

The package is pure Python except for faultlint._scanner, a Cython port of
the token scanner (the per-character hot loop). The build is best-effort:
if Cython or a C compiler is missing, or FAULTLINT_NO_EXT is set, the
package installs without it and falls back to the pure-Python scanner.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("FAULTLINT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "faultlint._scanner",
        ["src/faultlint/_scanner.pyx"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())

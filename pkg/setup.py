"""Build script for the optional compiled row-reduction core.

The package is fully functional without the extension: weitzlab.linalg
falls back to the pure-Python twin at import time.  Set
WEITZ_NO_EXTENSION=1 to skip the compilation attempt entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Try to build the extension, but never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: building the compiled core failed ({exc}); "
              "falling back to the pure-Python row reducer")


ext_modules = []
if os.environ.get("WEITZ_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("weitzlab._rowred", ["src/weitzlab/_rowred.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; using the pure-Python row reducer")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})

"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so a missing compiler must not break installation.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the kernel extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        import warnings

        warnings.warn(
            "hardyweight: compiled kernels unavailable (%s); "
            "falling back to the pure-Python/NumPy implementation" % (exc,)
        )


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "hardyweight._kernels_cy",
        ["src/hardyweight/_kernels_cy.pyx"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": optional_build_ext},
)

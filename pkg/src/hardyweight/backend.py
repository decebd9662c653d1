"""Kernel backend selection.

The compiled extension is preferred when importable; the NumPy implementation
is the fallback.  ``HARDYWEIGHT_KERNELS=python`` (or ``compiled``) forces a
choice, which the benchmark and the cross-backend tests rely on.
"""

import os

from . import _kernels_py

_ENV_VAR = "HARDYWEIGHT_KERNELS"


def _load():
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice not in ("", "python", "compiled"):
        raise ImportError(
            f"{_ENV_VAR} must be 'python' or 'compiled', got {choice!r}")
    if choice == "python":
        return _kernels_py
    try:
        from . import _kernels_cy
    except ImportError:
        if choice == "compiled":
            raise ImportError(
                "HARDYWEIGHT_KERNELS=compiled but the extension is not built; "
                "run `pip install -e .` or `python setup.py build_ext --inplace`"
            )
        return _kernels_py
    return _kernels_cy


kernels = _load()


def kernel_backend():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return kernels.BACKEND

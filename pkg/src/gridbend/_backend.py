"""Kernel selection: compiled ``_kernels`` when importable, else the pure-Python twin.

Set ``GRIDBEND_PURE_PYTHON=1`` to force the fallback.  Callers look up
``_backend.kernels`` at call time so :func:`use` takes effect immediately.
"""
import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if _compiled is not None and not os.environ.get("GRIDBEND_PURE_PYTHON"):
    kernels = _compiled
else:
    kernels = _kernels_py


def available():
    return ["python"] + (["cython"] if _compiled is not None else [])


def use(name: str):
    """Switch the active backend (``"python"`` or ``"cython"``); returns the previous name."""
    global kernels
    previous = kernels.BACKEND
    if name == "python":
        kernels = _kernels_py
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        kernels = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous

"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``SIERDOM_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("SIERDOM_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

DEFAULT_BACKEND = "compiled" if _ckernels is not None else "python"


def get(name=None):
    name = name or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(BACKENDS)}") from None

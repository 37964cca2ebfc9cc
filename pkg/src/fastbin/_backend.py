"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the
pure-Python kernels are always available as a fallback.
"""

from fastbin import _pykernels

try:
    from fastbin import _ckernels
except ImportError:
    _ckernels = None

_active = _ckernels if _ckernels is not None else _pykernels

BACKENDS = ("auto", "compiled", "python")


def active_name():
    """Name of the backend used by default ("compiled" or "python")."""
    return _active.NAME


def get(name="auto"):
    """Return a kernel module by name; "auto" picks the best available."""
    if name == "auto":
        return _active
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _ckernels is None:
            raise ValueError("compiled kernels are not available in this install")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")

"""Kernel selection: compiled extension when available, pure fallback otherwise.

Set GRLSIM_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the equivalence tests). Both implementations are bit-identical; only speed
differs.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load_compiled() -> ModuleType | None:
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = _load_compiled()

if _compiled is not None and not os.environ.get("GRLSIM_PURE_PYTHON"):
    active = _compiled
else:
    active = _pykernels

HAVE_COMPILED = _compiled is not None


def active_implementation() -> str:
    """Name of the kernel implementation in use: 'compiled' or 'pure'."""
    return active.IMPLEMENTATION


def get_kernel(name: str) -> ModuleType:
    """Fetch a kernel implementation by name, for benchmarks and tests."""
    if name == "pure":
        return _pykernels
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available in this installation")
        return _compiled
    raise ValueError(f"unknown kernel implementation {name!r}")

"""Hot search kernels with a numba path and a pure-numpy fallback.

The numba path is used unless numba is missing or the environment variable
``CODEGRAPH_NO_NUMBA`` is set to a truthy value. Both backends expose the
same functions; :func:`get_backend` returns either one explicitly, which is
how the tests and the benchmark compare them.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _np

_TRUTHY = {"1", "true", "yes", "on"}


def _load_jit() -> ModuleType | None:
    try:
        from . import _jit
    except ImportError:  # numba not installed
        return None
    return _jit


def get_backend(name: str) -> ModuleType:
    """Return the kernel module called ``name`` (``"numba"`` or ``"numpy"``)."""
    if name == "numpy":
        return _np
    if name == "numba":
        mod = _load_jit()
        if mod is None:
            raise RuntimeError("numba backend requested but numba is not importable")
        return mod
    raise ValueError(f"unknown kernel backend {name!r}")


def _select() -> ModuleType:
    if os.environ.get("CODEGRAPH_NO_NUMBA", "").strip().lower() in _TRUTHY:
        return _np
    return _load_jit() or _np


active = _select()
BACKEND: str = active.NAME

bfs_distances = active.bfs_distances
resolves = active.resolves
first_resolving_set = active.first_resolving_set
has_forbidden_threshold = active.has_forbidden_threshold
has_forbidden_chain = active.has_forbidden_chain
l21_search = active.l21_search
min_beta_supersets = active.min_beta_supersets

__all__ = [
    "BACKEND",
    "get_backend",
    "bfs_distances",
    "resolves",
    "first_resolving_set",
    "has_forbidden_threshold",
    "has_forbidden_chain",
    "l21_search",
    "min_beta_supersets",
]

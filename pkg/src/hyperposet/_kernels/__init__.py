"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when
``HYPERPOSET_PURE=1`` is set, the pure-Python module is used.  Both expose the
same functions, see ``_pykernels`` for the contracts.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("HYPERPOSET_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

active = compiled_backend if compiled_backend is not None else python_backend

MAX_VERTICES = 64


def backends():
    """Every importable backend, compiled first."""
    return [b for b in (compiled_backend, python_backend) if b is not None]


def __getattr__(name):
    return getattr(active, name)

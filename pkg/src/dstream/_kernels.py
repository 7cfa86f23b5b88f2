"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or when
``DSTREAM_PURE_PYTHON=1`` is set, the pure-Python ``_pykernels`` are used. Both
expose the same functions with identical results.
"""

from __future__ import annotations

import os

from . import _pykernels

EMPTY = _pykernels.EMPTY
STEADY, STRETCHED, TILTED = _pykernels.STEADY, _pykernels.STRETCHED, _pykernels.TILTED
ALGO_CODES = {"steady": STEADY, "stretched": STRETCHED, "tilted": TILTED}

_impl = _pykernels
BACKEND = "python"
if os.environ.get("DSTREAM_PURE_PYTHON", "0") != "1":
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

site = _impl.site
lookup = _impl.lookup
select_range = _impl.select_range
bunch_site = _impl.bunch_site
ScenarioConflict = _impl.ScenarioConflict
iter_lookup = _pykernels.iter_lookup

# Kernels that must stay inside 64-bit words.
_WORD = 1 << 64


def backend() -> str:
    return BACKEND

"""Select the compiled counting kernels when available, else the pure-Python ones.

Set ``RAINBOWDECOMP_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("RAINBOWDECOMP_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND


def reduced_latin_count(m: int) -> int:
    return int(_impl.reduced_latin_count(m))


def permanent_rows(rows, m: int) -> int:
    # int64 products overflow past side 13
    if m > 13:
        return _pykernels.permanent_rows(rows, m)
    return int(_impl.permanent_rows(list(rows), m))


def shao_wei_sum(m: int) -> int:
    return int(_impl.shao_wei_sum(m))

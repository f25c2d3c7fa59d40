"""Row-reduction kernel selection.

Prefers the compiled Cython kernel when the extension was built; falls back
to the pure-Python twin.  ``KERNEL_NAME`` records which one is active.
Set ``LCSQ_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by tests that compare the two).
"""

import os

from . import _rowred_py

if os.environ.get("LCSQ_PURE_PYTHON"):
    Reducer = _rowred_py.Reducer
    KERNEL_NAME = "python (forced)"
else:
    try:
        from . import _rowred_c

        Reducer = _rowred_c.Reducer
        KERNEL_NAME = "cython"
    except ImportError:
        Reducer = _rowred_py.Reducer
        KERNEL_NAME = "python"

PY_REDUCER = _rowred_py.Reducer

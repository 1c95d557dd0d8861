"""Backend selection for the permutation kernel.

The compiled module is used when it imports cleanly and ``FNQ_PURE`` is not
set; otherwise the pure-Python twin is loaded.  ``BACKEND`` records which.
"""

from __future__ import annotations

import os

if os.environ.get("FNQ_PURE"):
    from fnq import _pykernel as _impl

    BACKEND = "python"
else:
    try:
        from fnq import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from fnq import _pykernel as _impl

        BACKEND = "python"

perm_closure = _impl.perm_closure
class_labels = _impl.class_labels
perm_orders = _impl.perm_orders
count_commuting = _impl.count_commuting
multiplication_table = _impl.multiplication_table
table_join = _impl.table_join

__all__ = [
    "BACKEND",
    "perm_closure",
    "class_labels",
    "perm_orders",
    "count_commuting",
    "multiplication_table",
    "table_join",
]

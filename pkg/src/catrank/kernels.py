"""Select the fixed-point kernel backend at import time.

The compiled extension is preferred. Set ``CATRANK_PURE_PYTHON=1`` to force the
numpy fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("CATRANK_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

apply_f = _impl.apply_f
fixed_point = _impl.fixed_point
sandwich = _impl.sandwich

"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Setting ``FREEPROD_PURE=1`` forces the fallback.
"""
import os

from . import _pykernels as python_backend

try:
    if os.environ.get("FREEPROD_PURE"):
        raise ImportError("pure backend requested")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

backend = compiled_backend or python_backend
BACKEND_NAME = "cython" if compiled_backend is not None else "python"

reduce_codes = backend.reduce_codes
failure_function = backend.failure_function
minimal_period = backend.minimal_period
least_rotation = backend.least_rotation

"""Pick the Littlewood-Richardson kernel at import time.

The compiled ``_lrcore`` extension is used when it was built; otherwise the
pure-Python ``_lr_py`` fallback.  Setting ``THAGOMIZER_PURE_PYTHON=1`` forces
the fallback.
"""

import os

from thagomizer import _lr_py

try:
    from thagomizer import _lrcore
except ImportError:  # extension not built
    _lrcore = None

BACKENDS = {"python": _lr_py.lr_expand}
if _lrcore is not None:
    BACKENDS["cython"] = _lrcore.lr_expand

if os.environ.get("THAGOMIZER_PURE_PYTHON") or _lrcore is None:
    DEFAULT_BACKEND = "python"
else:
    DEFAULT_BACKEND = "cython"

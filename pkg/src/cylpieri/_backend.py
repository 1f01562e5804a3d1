"""Select the polynomial kernel implementation at import time.

The compiled ``_kern_c`` extension is used when it was built and importable;
setting ``CYLPIERI_PURE=1`` in the environment forces the pure-Python kernels.
"""

import os

from . import _kern_py

if os.environ.get("CYLPIERI_PURE", "") not in ("", "0"):
    kern = _kern_py
else:
    try:
        from . import _kern_c as kern
    except ImportError:
        kern = _kern_py

BACKEND = "compiled" if kern is not _kern_py else "python"

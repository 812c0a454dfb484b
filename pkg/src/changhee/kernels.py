"""Backend selection for the integer convolution kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``CHANGHEE_PURE_PYTHON`` is set to a non-empty value,
the pure-Python module is used.  ``BACKEND`` names the active choice.
"""

import os

from changhee import _pykernels

if os.environ.get("CHANGHEE_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from changhee import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

convolve = _impl.convolve
convolve2d = _impl.convolve2d

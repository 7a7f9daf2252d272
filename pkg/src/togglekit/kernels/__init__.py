"""Kernel selection: compiled bitset core with a pure-Python fallback.

The compiled module is used when it built successfully, the poset fits in
64 bits, and TOGGLEKIT_PURE is unset; otherwise the identical pure-Python
kernels take over.  Callers ask per poset size via kernel_for().
"""

import os

from . import pybitops

try:
    from . import _bitops
except ImportError:
    _bitops = None

HAVE_COMPILED = _bitops is not None


def kernel_for(size):
    'Pick the kernel module for a poset with this many elements.'
    if _bitops is not None and size <= 64 and not os.environ.get("TOGGLEKIT_PURE"):
        return _bitops
    return pybitops

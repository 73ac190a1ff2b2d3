"""Select the word-operator kernel: compiled extension or pure fallback.

Set the environment variable ``QUEERCRYSTALS_PURE=1`` to force the pure
Python kernel even when the compiled one is importable.
"""

import os

from . import _kernel_py

if os.environ.get("QUEERCRYSTALS_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _fastops as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

IMPLEMENTATION = _impl.IMPLEMENTATION

weight_of = _impl.weight_of
eps_phi = _impl.eps_phi
apply_e = _impl.apply_e
apply_f = _impl.apply_f
apply_ebar1 = _impl.apply_ebar1
apply_fbar1 = _impl.apply_fbar1
weyl_s = _impl.weyl_s
apply_ebar = _impl.apply_ebar
apply_fbar = _impl.apply_fbar
is_gl_highest = _impl.is_gl_highest
is_q_highest = _impl.is_q_highest

"""Hot-loop kernels, compiled when the extension is built.

Set ``SPINFORGE_PURE=1`` to force the numpy fallback. ``BACKEND`` names the
implementation that was picked at import.
"""

import os

from . import _kernels_py as python

compiled = None
if os.environ.get("SPINFORGE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

associativity_violations = _impl.associativity_violations
fold_mat8 = _impl.fold_mat8
fold_mat4c = _impl.fold_mat4c
fold_quatpair = _impl.fold_quatpair
fold_star = _impl.fold_star

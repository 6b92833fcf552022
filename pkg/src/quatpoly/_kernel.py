"""Float-kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python twin; set
``QUATPOLY_PURE=1`` to force the fallback.  ``BACKEND`` names the choice.
"""

import os

if os.environ.get("QUATPOLY_PURE"):
    from ._kernel_py import BACKEND, eval_poly, qconj, qinv, qmul, qnormsq
else:
    try:
        from ._kernel_c import BACKEND, eval_poly, qconj, qinv, qmul, qnormsq
    except ImportError:
        from ._kernel_py import BACKEND, eval_poly, qconj, qinv, qmul, qnormsq

__all__ = ["BACKEND", "eval_poly", "qconj", "qinv", "qmul", "qnormsq"]

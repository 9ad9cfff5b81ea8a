"""Backend selection for the polynomial hot loops.

The compiled ``_ckernel`` extension is used when it has been built; otherwise
the pure-Python ``_pykernel`` is used.  Set ``SUPERHV_PURE_PYTHON=1`` to force
the fallback.  Both expose ``affine_shift``, ``normalize``,
``combination_is_zero`` and ``BACKEND``.
"""
import os

from . import _pykernel

if os.environ.get("SUPERHV_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl
    except ImportError:  # extension not built
        _impl = _pykernel

affine_shift = _impl.affine_shift
normalize = _impl.normalize
combination_is_zero = _impl.combination_is_zero
BACKEND = _impl.BACKEND
# whole-vector module-axiom checker; compiled backend only
AxiomChecker = getattr(_impl, "AxiomChecker", None)


def available_backends():
    """Map backend name to module for every backend importable here."""
    found = {"python": _pykernel}
    try:
        from . import _ckernel

        found["cython"] = _ckernel
    except ImportError:
        pass
    return found

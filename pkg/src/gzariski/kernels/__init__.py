"""Hot inner loops over multiplication/addition tables.

Two implementations share one interface: ``_numba`` (default) and
``_numpy``.  Set ``GZARISKI_BACKEND=numpy`` before import to use the latter.
"""
from .._backend import BACKEND, USE_NUMBA
from . import _numpy as numpy_impl

if USE_NUMBA:
    from . import _numba as numba_impl
    _impl = numba_impl
else:
    numba_impl = None
    _impl = numpy_impl

first_nonassociative = _impl.first_nonassociative
first_nondistributive = _impl.first_nondistributive
first_action_nonassociative = _impl.first_action_nonassociative
first_action_nondistributive = _impl.first_action_nondistributive
span = _impl.span
colon = _impl.colon
power_hits = _impl.power_hits
first_product_in = _impl.first_product_in

__all__ = [
    "BACKEND", "numpy_impl", "numba_impl",
    "first_nonassociative", "first_nondistributive",
    "first_action_nonassociative", "first_action_nondistributive",
    "span", "colon", "power_hits", "first_product_in",
]

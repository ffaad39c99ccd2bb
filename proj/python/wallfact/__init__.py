"""Exact reflection factorizations in orthogonal groups of quadratic spaces.

Scalars are returned as ``int`` over F_p and ``fractions.Fraction`` over Q.
Errors raise ``WallfactError`` with ``args == (code, detail)``.
"""

from ._wallfact import *  # noqa: F401,F403
from ._wallfact import WallfactError

__all__ = [name for name in dir() if not name.startswith("_")]

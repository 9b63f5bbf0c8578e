"""Python bindings for the gmplab C++ core.

Operators are exchanged as square complex numpy arrays.
"""

from ._core import *  # noqa: F401,F403
from ._core import GmplabError, ThresholdOverflowError, ValidationError

__version__ = "0.1.0"

__all__ = ["GmplabError", "ThresholdOverflowError", "ValidationError", "__version__"]

"""Double Hurwitz numbers computed exactly by four independent methods,
plus the chamber structure of the genus-0 Hurwitz function."""

from .exactmath import Fraction, HurwitzInput, Partition
from .methods import METHODS, hurwitz, hurwitz_all

__all__ = ["Fraction", "HurwitzInput", "METHODS", "Partition", "hurwitz", "hurwitz_all"]
__version__ = "0.1.0"

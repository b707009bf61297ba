"""Markoff triples and numbers through Farey slopes.

Enumeration, the characters ``u_t, v_t``, Markoff matrices ``M_t``, Markoff
forms, and unicity certificates for Markoff numbers that are prime powers
or twice prime powers.
"""
from .farey import Slope, make_slope
from .kernels import BACKEND
from .tree import enumerate_numbers, markoff_number

__all__ = ["BACKEND", "Slope", "enumerate_numbers", "make_slope", "markoff_number"]
__version__ = "0.1.0"

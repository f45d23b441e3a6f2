"""Exact computations for the even and odd Prym-null divisor classes on R_g."""

from .class_space import BasisClass, ClassVector, Space, basis, normalize_label, pullback_R, pullback_SPlus
from .counting import CountTable, count_table
from .known_classes import mnull_class, prym_null_even, prym_null_odd, prym_null_total, theta_null_class
from .curves import PrymNullPair, TestCurveRow, pair, prym_null_numbers, row
from .solver import assemble_and_verify

__version__ = "0.1.0"

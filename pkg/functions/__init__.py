"""
Catalog of highly nonlinear functions and table-backed functions
"""
from .func import Func, func_from_table
from .catalog import (
    WEAK, STRONG, mm_func, dillon_func, dillon_dual_func, trace_mult_func, cdfpw_func, gf, trace_table,
)

__all__ = [
    'Func',
    'func_from_table',
    'WEAK',
    'STRONG',
    'mm_func',
    'dillon_func',
    'dillon_dual_func',
    'trace_mult_func',
    'cdfpw_func',
    'gf',
    'trace_table',
]

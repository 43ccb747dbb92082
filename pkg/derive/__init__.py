"""
Functions derived from systematic AMD codes and their nonlinearity bounds
"""
from .derived import (
    EncodingTable, DerivedFunction, Theorem3Report, Theorem4Report,
    extract_function, restricted_nonlinearity, analyze, theorem3_check, theorem4_check,
    code_from_table, table_from_rows,
)
from .corpus import random_systematic_code, random_corpus

__all__ = [
    'EncodingTable',
    'DerivedFunction',
    'Theorem3Report',
    'Theorem4Report',
    'extract_function',
    'restricted_nonlinearity',
    'analyze',
    'theorem3_check',
    'theorem4_check',
    'code_from_table',
    'table_from_rows',
    'random_systematic_code',
    'random_corpus',
]

"""
Finite field and finite abelian group machinery
"""
from .field import (
    FieldDesc, FieldElem, field_make, field_over, field_arith, trace_map, dual_basis,
    is_prime, prime_power,
)
from .groups import GroupSpec, GroupElem, Iso, cyclic_iso, crt_split, parse_group_spec

__all__ = [
    'FieldDesc',
    'FieldElem',
    'field_make',
    'field_over',
    'field_arith',
    'trace_map',
    'dual_basis',
    'is_prime',
    'prime_power',
    'GroupSpec',
    'GroupElem',
    'Iso',
    'cyclic_iso',
    'crt_split',
    'parse_group_spec',
]

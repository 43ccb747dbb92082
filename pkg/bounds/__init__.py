"""
Lower bounds, tag-size windows and optimality verdicts
"""
from .lower_bounds import (
    LogValue, Witness, TagWindow, weak_lower_bound, regular_lower_bound, g_lower_bound,
    effective_tag_window, mm_witness, trace_witness,
)
from .verdict import BoundReport, CodeWindow, optimality_verdict

__all__ = [
    'LogValue',
    'Witness',
    'TagWindow',
    'weak_lower_bound',
    'regular_lower_bound',
    'g_lower_bound',
    'effective_tag_window',
    'mm_witness',
    'trace_witness',
    'BoundReport',
    'CodeWindow',
    'optimality_verdict',
]

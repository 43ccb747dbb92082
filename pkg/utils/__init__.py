"""
Utility functions and helpers
"""
from .errors import AmdkitError, ValidationError, SizeCapExceeded, VerificationFailed
from .helpers import (
    configure_logging, set_max_cells, get_max_cells, get_default_workers, check_size,
    floor_log2, render_log2, rational_dict,
)

__all__ = [
    'AmdkitError',
    'ValidationError',
    'SizeCapExceeded',
    'VerificationFailed',
    'configure_logging',
    'set_max_cells',
    'get_max_cells',
    'get_default_workers',
    'check_size',
    'floor_log2',
    'render_log2',
    'rational_dict',
]

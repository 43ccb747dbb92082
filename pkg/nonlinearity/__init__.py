"""
Differential spectra and nonlinearity measures
"""
from .spectrum import (
    DifferentialSpectrum, differential_spectrum, nonlinearity_of, partial_nonlinearity_of,
    is_balanced, is_perfect_nonlinear, derivatives_balanced,
)
from .oracle import naive_spectrum, verify_spectrum

__all__ = [
    'DifferentialSpectrum',
    'differential_spectrum',
    'nonlinearity_of',
    'partial_nonlinearity_of',
    'is_balanced',
    'is_perfect_nonlinear',
    'derivatives_balanced',
    'naive_spectrum',
    'verify_spectrum',
]

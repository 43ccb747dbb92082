"""
Systematic AMD codes, their attack models and JSON reports
"""
from .code import (
    WEAK, STRONG, STRONGER, MODELS, AmdCode, Codeword, SeededSampler, ForcedSampler, TagSize,
    build_code, encode, decode, success_given, tag_size,
)
from .evaluator import SuccessProfile, evaluate
from .report import RationalOut, SourceEntry, CodeReport, FullReport, build_report, to_json

__all__ = [
    'WEAK',
    'STRONG',
    'STRONGER',
    'MODELS',
    'AmdCode',
    'Codeword',
    'SeededSampler',
    'ForcedSampler',
    'TagSize',
    'build_code',
    'encode',
    'decode',
    'success_given',
    'tag_size',
    'SuccessProfile',
    'evaluate',
    'RationalOut',
    'SourceEntry',
    'CodeReport',
    'FullReport',
    'build_report',
    'to_json',
]

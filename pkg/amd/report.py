"""
JSON report schemas. Probabilities are always {num, den} objects.
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from amd.code import AmdCode, tag_size
from amd.evaluator import SuccessProfile


class RationalOut(BaseModel):
    num: int
    den: int

    @classmethod
    def of(cls, value: Optional[Fraction]) -> Optional['RationalOut']:
        if value is None:
            return None
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)


class CamelModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)


class SourceEntry(CamelModel):
    source: int
    rho: RationalOut
    argmax_delta: Optional[List[int]] = Field(default=None, alias='argmaxDelta')


class CodeReport(CamelModel):
    code_id: str = Field(alias='codeId')
    family: str
    m: int
    n: int
    t: int
    tag_ratio: RationalOut = Field(alias='tagRatio')
    tag_bits: str = Field(alias='tagBits')
    weak_rho: Optional[RationalOut] = Field(default=None, alias='weakRho')
    strong_rho: Optional[RationalOut] = Field(default=None, alias='strongRho')
    stronger_rho: Optional[RationalOut] = Field(default=None, alias='strongerRho')
    argmax_delta: Optional[List[int]] = Field(default=None, alias='argmaxDelta')
    stronger_argmax_delta: Optional[List[int]] = Field(default=None, alias='strongerArgmaxDelta')
    per_source: List[SourceEntry] = Field(default_factory=list, alias='perSource')
    source_prior: str = Field(default='equiprobable', alias='sourcePrior')
    bounds: Optional[Dict[str, Any]] = None


def build_report(code: AmdCode, profile: SuccessProfile) -> CodeReport:
    size = tag_size(code)
    per_source = []
    if profile.strong_rho_per_source is not None:
        for s, rho in enumerate(profile.strong_rho_per_source):
            arg = profile.strong_argmax_per_source[s]
            per_source.append(SourceEntry(source=s, rho=RationalOut.of(rho),
                                          argmax_delta=list(arg) if arg else None))
    argmax = profile.weak_argmax
    if argmax is None and per_source:
        # no weak run: report the strongest per-source offset
        best = max(range(len(per_source)), key=lambda s: (profile.strong_rho_per_source[s], -s))
        argmax = profile.strong_argmax_per_source[best]
    return CodeReport(
        code_id=code.code_id,
        family=code.func.origin,
        m=code.m,
        n=code.n,
        t=code.t,
        tag_ratio=RationalOut.of(size.ratio),
        tag_bits=size.bits,
        weak_rho=RationalOut.of(profile.weak_rho),
        strong_rho=RationalOut.of(profile.strong_rho),
        stronger_rho=RationalOut.of(profile.stronger_rho),
        argmax_delta=list(argmax) if argmax else None,
        stronger_argmax_delta=list(profile.stronger_argmax) if profile.stronger_argmax else None,
        per_source=per_source,
    )


def to_json(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True, indent=2)


class FullReport(CamelModel):
    """Everything the toolkit computes for one code."""
    code: CodeReport
    nonlinearity: RationalOut
    partial_nonlinearity: RationalOut = Field(alias='partialNonlinearity')
    perfect_nonlinear: bool = Field(alias='perfectNonlinear')
    theorem3: Dict[str, Any]
    theorem4: Dict[str, Any]

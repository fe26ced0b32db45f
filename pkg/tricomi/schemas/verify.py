# tricomi/schemas/verify.py
import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from tricomi.schemas.common import BumpProfile, ToleranceMode


class BumpFunction(BaseModel):
    """Compactly supported C^2 test function on R^{n+1}; last coordinate is y."""
    model_config = ConfigDict(frozen=True)

    center: tuple[float, ...] = Field(..., min_length=2)
    radius: float = Field(2.0, gt=0)
    profile: BumpProfile = BumpProfile.POLYNOMIAL

    @property
    def n(self) -> int:
        return len(self.center) - 1

    @classmethod
    def at_origin(cls, n: int, radius: float = 2.0, profile: BumpProfile = BumpProfile.POLYNOMIAL) -> "BumpFunction":
        return cls(center=(0.0,) * (n + 1), radius=radius, profile=profile)


class VerificationReport(BaseModel):
    name: str
    target: float
    computed: float
    abs_err: float
    rel_err: float
    tol: float
    mode: ToleranceMode = ToleranceMode.EITHER
    passed: bool
    diagnostics: dict[str, Any] = {}

    @classmethod
    def from_values(cls, name: str, target: float, computed: float, tol: float,
                    mode: ToleranceMode = ToleranceMode.EITHER, **diagnostics: Any) -> "VerificationReport":
        abs_err = abs(computed - target)
        rel_err = abs_err / abs(target) if target != 0 else (0.0 if abs_err == 0 else math.inf)
        if not math.isfinite(computed):
            passed = False
        elif mode == ToleranceMode.ABS:
            passed = abs_err <= tol
        elif mode == ToleranceMode.REL:
            passed = rel_err <= tol
        else:
            passed = abs_err <= tol or rel_err <= tol
        return cls(name=name, target=target, computed=computed, abs_err=abs_err, rel_err=rel_err,
                   tol=tol, mode=mode, passed=passed, diagnostics=diagnostics)

    @classmethod
    def at_least(cls, name: str, computed: float, minimum: float, strict: bool = False,
                 **diagnostics: Any) -> "VerificationReport":
        """One-sided check: passes when computed >= minimum, or > minimum when strict."""
        shortfall = max(0.0, minimum - computed) if math.isfinite(computed) else math.inf
        above = computed > minimum if strict else computed >= minimum
        return cls(name=name, target=minimum, computed=computed, abs_err=shortfall,
                   rel_err=shortfall / abs(minimum) if minimum else shortfall, tol=0.0,
                   mode=ToleranceMode.ABS, passed=math.isfinite(computed) and above,
                   diagnostics=diagnostics)

    @classmethod
    def failure(cls, name: str, message: str, target: float = math.nan, tol: float = 0.0,
                **diagnostics: Any) -> "VerificationReport":
        return cls(name=name, target=target, computed=math.nan, abs_err=math.inf, rel_err=math.inf,
                   tol=tol, passed=False, diagnostics={"error": message, **diagnostics})

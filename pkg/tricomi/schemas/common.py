# tricomi/schemas/common.py
from enum import Enum


class Region(str, Enum):
    DPLUS = "DPlus"
    DMINUS = "DMinus"
    CONE = "Cone"


class FundamentalSolution(str, Enum):
    F_MINUS = "f_minus"
    F_PLUS = "f_plus"
    F_SHARP = "f_sharp"


class Quantity(str, Enum):
    F_MINUS = "f_minus"
    F_PLUS = "f_plus"
    F_SHARP = "f_sharp"
    DISCRIMINANT = "discriminant"
    REGION = "region"


class Construction(str, Enum):
    AIRY_TWO_SIDED = "AiryTwoSided" # two-sided Airy Green's function, jump at y = b
    ORIGIN_AI_BI = "OriginAiBi" # Ai above, Bi below
    MINUS_ONLY = "MinusOnly" # supported in y <= 0
    PLUS_KN = "PlusKN" # K above, N below


class RadialKind(str, Enum):
    K_NU = "Knu" # |xi|^nu K_nu(|xi|)
    JNU_POW_PLUS = "Jnu_times_pow_plus" # |xi|^nu J_nu(|xi|)
    JNU_POW_MINUS = "Jnu_times_pow_minus" # |xi|^-nu J_nu(|xi|)
    JMINUS_NU_POW_PLUS = "Jminus_nu_times_pow_plus" # |xi|^nu J_-nu(|xi|)
    N_NU = "Nnu" # |xi|^nu N_nu(|xi|)


class BumpProfile(str, Enum):
    POLYNOMIAL = "polynomial"
    GAUSSIAN_TRUNCATED = "gaussian_truncated"


class ToleranceMode(str, Enum):
    ABS = "abs"
    REL = "rel"
    EITHER = "either"

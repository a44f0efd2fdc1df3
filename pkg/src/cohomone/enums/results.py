from enum import Enum


class QuotientType(str, Enum):
    sphere = "sphere"
    projective = "projective"
    lens = "lens"
    not_recognized = "not_recognized"


class CheckVerdict(str, Enum):
    passed = "pass"
    failed = "fail"


class Verdict(str, Enum):
    match = "MATCH"
    discrepancy = "DISCREPANCY"
    no_printed_value = "NO_PRINTED_VALUE"


class Primitivity(str, Enum):
    non_primitive = "NON_PRIMITIVE"
    unknown = "UNKNOWN"

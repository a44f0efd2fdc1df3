from .settings import EnumConfig, VerifySettings
from .quotients import QuotientId, QuotientInvariants
from .reports import CheckReport, CheckResult, CoverageReport, VerificationReport, VerificationSummary

__all__ = [
    'CheckReport',
    'CheckResult',
    'CoverageReport',
    'EnumConfig',
    'QuotientId',
    'QuotientInvariants',
    'VerificationReport',
    'VerificationSummary',
    'VerifySettings',
]

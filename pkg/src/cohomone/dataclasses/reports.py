from dataclasses import dataclass, field
from typing import Optional

from cohomone.enums import CheckVerdict, Verdict


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one check of a diagram.

    check (str): Identifier of the check (lowercase kebab-case), e.g. 'witness-minus' or 'f2-parity'.

    verdict (CheckVerdict): Whether the check passed.

    detail (str): Human-readable explanation, e.g. the recognized quotient.
    """
    check: str
    verdict: CheckVerdict
    detail: str = ''

    @property
    def passed(self) -> bool:
        return self.verdict == CheckVerdict.passed


@dataclass(frozen=True)
class CheckReport:
    """A list of check results; used for both the validation and the necessary-condition filters."""
    checks: tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, check: str) -> CheckResult:
        return next(c for c in self.checks if c.check == check)


@dataclass(frozen=True)
class VerificationReport:
    """
    Verification of one catalog entry at one parameter value.

    entry_id (str): Identifier of the catalog entry.

    n (int): The parameter value the entry was instantiated at.

    diagram (str): Text form of the instantiated diagram.

    verdict (Verdict): MATCH, DISCREPANCY or NO_PRINTED_VALUE.

    computed_chi (int, optional): Euler characteristic computed by the engine, None if the computation failed.

    printed_chi (str, optional): The printed Euler characteristic expression, if any.

    printed_value (int, optional): The printed expression evaluated at `n`.

    chi_terms (tuple[int, int, int]): The three terms chi(G/K-), chi(G/K+), chi(G/H) after any covering correction.

    dim_m (int, optional): Dimension of the manifold.

    validation (CheckReport): Result of the diagram validation.

    filters (CheckReport): Result of the necessary-condition filters.

    error (str, optional): Message of an error raised while verifying, if any.
    """
    entry_id: str
    n: int
    diagram: str
    verdict: Verdict
    computed_chi: Optional[int] = None
    printed_chi: Optional[str] = None
    printed_value: Optional[int] = None
    chi_terms: tuple[int, ...] = ()
    dim_m: Optional[int] = None
    source: str = ''
    spin_level: bool = False
    validation: CheckReport = field(default_factory=CheckReport)
    filters: CheckReport = field(default_factory=CheckReport)
    error: Optional[str] = None

    @property
    def checks_passed(self) -> bool:
        return self.error is None and self.validation.passed and self.filters.passed


@dataclass(frozen=True)
class VerificationSummary:
    """All verification reports of one run, in canonical order."""
    reports: tuple[VerificationReport, ...] = ()

    def count(self, verdict: Verdict) -> int:
        return sum(1 for r in self.reports if r.verdict == verdict)

    @property
    def discrepancies(self) -> list[VerificationReport]:
        return [r for r in self.reports if r.verdict == Verdict.discrepancy]

    @property
    def failed_checks(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.checks_passed]

    def counts(self) -> dict[str, int]:
        return {v.value: self.count(v) for v in Verdict}


@dataclass(frozen=True)
class CoverageReport:
    """
    Coverage of the catalog by the enumerated candidates for one group.

    family (str): The group family, e.g. 'SU'.

    n (int): The family parameter.

    candidates (int): Number of enumerated candidate diagrams.

    found (tuple[str, ...]): Identifiers of the catalog entries that appear among the candidates.

    missing (tuple[str, ...]): Identifiers of the catalog entries that do not.

    exact (tuple[str, ...]): Identifiers among the found entries whose normal form is itself a candidate, not only a
        diagram with the same invariants.
    """
    family: str
    n: int
    candidates: int
    found: tuple[str, ...] = ()
    missing: tuple[str, ...] = ()
    exact: tuple[str, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.missing

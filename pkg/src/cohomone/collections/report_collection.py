from typing import Optional

from cohomone.dataclasses import VerificationReport
from cohomone.enums import Verdict
from .base_collection import Collection


class ReportCollection(Collection[VerificationReport]):
    def where_verdict(self, verdict: Verdict) -> 'ReportCollection':
        return self.where(verdict=Verdict(verdict))

    def where_entry(self, entry_id: str) -> 'ReportCollection':
        return self.where(entry_id=entry_id)

    def find(self, entry_id: str, n: int) -> Optional[VerificationReport]:
        return self.first(entry_id=entry_id, n=n)

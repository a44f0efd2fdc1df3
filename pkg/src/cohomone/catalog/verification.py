"""Recomputation of the Euler characteristics of the catalog."""
import logging
from multiprocessing import Pool
from typing import Optional

from cohomone.collections import ReportCollection
from cohomone.dataclasses import CheckReport, VerificationReport, VerificationSummary, VerifySettings
from cohomone.diagrams import chi_terms, dim_M, necessary_filters, validate_diagram
from cohomone.enums import GroupFamily, Verdict
from cohomone.exceptions import CohomoneException
from cohomone.models import CatalogRecord
from .chi_expr import evaluate_chi
from .entries import catalog_entries, entry_text, instantiate_entry


def _verdict(computed: Optional[int], printed: Optional[int], has_printed: bool) -> Verdict:
    if not has_printed:
        return Verdict.no_printed_value
    return Verdict.match if computed is not None and computed == printed else Verdict.discrepancy


def verify_entry(e: CatalogRecord, n: int, covering_correction: bool = True) -> VerificationReport:
    """
    Verify a catalog entry at n.

    The entry is instantiated, validated and run through the necessary conditions; its Euler characteristic
    chi(G/K-) + chi(G/K+) - chi(G/H) is recomputed and compared with the printed value. For spin level entries every
    nonzero term is doubled when the preimage of the isotropy group in the spin group is disconnected.

    :param CatalogRecord e: The entry.
    :param int n: The family parameter.
    :param bool covering_correction: Whether to apply the correction of spin level entries.
    :return: The report; failures are part of the report, nothing is raised.
    """
    printed_value, terms, computed, dimension = None, (), None, None
    validation = filters = CheckReport()
    errors = []

    try:
        text = entry_text(e, n)
    except CohomoneException as ex:
        text = ''
        errors.append(str(ex))

    if e.printed_chi is not None:
        try:
            printed_value = evaluate_chi(e.printed_chi, n)
        except CohomoneException as ex:
            errors.append(str(ex))

    if not errors:
        try:
            d = instantiate_entry(e, n)
            text = d.text
            validation = validate_diagram(d)
            filters = necessary_filters(d)
            terms = chi_terms(d, covering_correction)
            computed = terms[0] + terms[1] - terms[2]
            dimension = dim_M(d)
        except CohomoneException as ex:
            errors.append(str(ex))

    verdict = _verdict(computed, printed_value, e.printed_chi is not None)
    report = VerificationReport(
        entry_id=e.id,
        n=n,
        diagram=text,
        verdict=verdict,
        computed_chi=computed,
        printed_chi=e.printed_chi,
        printed_value=printed_value,
        chi_terms=tuple(terms),
        dim_m=dimension,
        source=e.source,
        spin_level=e.spin_level,
        validation=validation,
        filters=filters,
        error='; '.join(errors) or None,
    )

    if verdict == Verdict.discrepancy:
        logging.warning(f"Entry '{e.id}' at n={n}: computed {computed}, printed {e.printed_chi} = {printed_value}.")
    if not report.checks_passed:
        failed = [c.check for c in validation.failures() + filters.failures()]
        logging.warning(f"Entry '{e.id}' at n={n} fails {failed} {report.error or ''}".rstrip())
    logging.debug(f"Verified '{e.id}' at n={n}: {verdict.value}")

    return report


def verify_all(ranges: Optional[dict[GroupFamily, list[int]]] = None,
               settings: Optional[VerifySettings] = None,
               covering_correction: bool = True) -> VerificationSummary:
    """
    Verify every catalog entry at every sampled parameter value.

    :param dict ranges: Parameter values per family; entries of families not in the map are skipped and values outside
        the range of an entry are ignored. When omitted, every entry is sampled on the grid of `settings`.
    :param VerifySettings settings: Sampling grid used without `ranges` and the number of worker processes.
    :param bool covering_correction: Whether to apply the correction of spin level entries.
    :return: The reports in canonical order: catalog order, then increasing n.
    """
    settings = settings or VerifySettings()
    tasks = []

    for e in catalog_entries():
        if ranges is None:
            samples = settings.sample(e.n_min, e.n_max)
        else:
            samples = sorted(n for n in set(ranges.get(e.family, ())) if e.in_range(n))
        tasks.extend((e, n, covering_correction) for n in samples)

    if settings.workers > 1 and len(tasks) > 1:
        with Pool(settings.workers) as pool:
            reports = pool.starmap(verify_entry, tasks)
    else:
        reports = [verify_entry(*task) for task in tasks]

    summary = VerificationSummary(tuple(reports))
    logging.info(f'Verified {len(reports)} instantiations: {summary.counts()}')
    return summary


def reports_of(summary: VerificationSummary) -> ReportCollection:
    return ReportCollection(summary.reports)

"""Cross-check of the catalog against the enumerated candidates."""
import logging
from typing import Optional

from cohomone.catalog import catalog_entries, instantiate_entry
from cohomone.dataclasses import CoverageReport, EnumConfig
from cohomone.diagrams import format_diagram, normalize_diagram
from cohomone.enums import GroupFamily
from cohomone.groups import parse_group
from .candidates import diagram_key, enumerate_candidates, keys_match


def cross_check_catalog(family: GroupFamily, n: int, cfg: Optional[EnumConfig] = None) -> CoverageReport:
    """
    Check that every catalog entry of a family, instantiated at n, appears among the candidates enumerated for the
    member of the family with parameter n.

    An entry is found exactly when its normal form is a candidate. Since the enumeration may place a group at other
    coordinates than the catalog does, an entry is also found when a candidate has the same invariants under
    conjugation: per group the Lie algebra type, the number of components, the number of coordinates moved and the
    central torus.

    :param GroupFamily family: The family of G.
    :param int n: The family parameter.
    :param EnumConfig cfg: Enumeration bounds.
    :return: The identifiers of the entries found among the candidates, of those found exactly and of those that are
             missing.
    """
    G = parse_group(family.group_text(n))
    candidates = enumerate_candidates(G, cfg)
    texts = {format_diagram(d) for d in candidates}
    keys = {diagram_key(d) for d in candidates}

    found, exact, missing = [], [], []
    for e in catalog_entries(family).where_in_range(n):
        d = normalize_diagram(instantiate_entry(e, n))
        key = diagram_key(d)
        if format_diagram(d) in texts:
            exact.append(e.id)
            found.append(e.id)
        elif key in keys or any(keys_match(key, other) for other in keys):
            found.append(e.id)
        else:
            logging.warning(f"Catalog entry '{e.id}' at n = {n} is not among the candidates for {G.factors[0].symbol}.")
            missing.append(e.id)

    logging.debug(f'{len(exact)} of {len(found)} found entries match a candidate exactly')
    return CoverageReport(family.value, n, len(candidates), tuple(found), tuple(missing), tuple(exact))

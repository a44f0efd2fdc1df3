"""Validation of group diagrams and necessary conditions for positive Euler characteristic."""
import logging
from typing import Callable

from cohomone.borel_siebenthal import maximal_rank_subgroups
from cohomone.dataclasses import CheckReport, CheckResult
from cohomone.enums import CheckVerdict, KindSymbol, Primitivity
from cohomone.exceptions import CohomoneException, UnsupportedGroupException
from cohomone.groups import Factor, GroupExpr, Realization, ambient_group, ambient_of, factor_count, format_group, \
    rank, realize, realize_together
from cohomone.spheres import in_span
from .inclusion import check_inclusion
from .invariants import euler_char_M
from .model import Diagram

# Factors that occur in isotropy groups of transitive effective actions on spheres.
_ISOTROPY_KINDS = {KindSymbol.so, KindSymbol.su, KindSymbol.sp, KindSymbol.u, KindSymbol.su_composite, KindSymbol.g2}


def _result(check: str, passed: bool, detail: str = '') -> CheckResult:
    return CheckResult(check, CheckVerdict.passed if passed else CheckVerdict.failed, detail)


def _guarded(check: str, test: Callable[[], CheckResult]) -> CheckResult:
    try:
        return test()
    except CohomoneException as e:
        return _result(check, False, str(e))


def _embedding(d: Diagram) -> CheckResult:
    ambient = d.ambient
    abstract = []
    for name, g in (('K-', d.Kminus), ('K+', d.Kplus), ('H', d.H)):
        if g.ambient is None:
            abstract.append(name)
            continue
        if g.ambient != ambient:
            return _result('embedding', False, f'{name} refers to {g.ambient.text}, not {ambient.text}')
        try:
            realize(g)
        except UnsupportedGroupException:
            abstract.append(name)

    if abstract:
        return _result('embedding', True, f"{', '.join(abstract)} without embedding data, compared abstractly")
    return _result('embedding', True, f'all groups placed in {ambient.text}')


def _witness(check: str, d: Diagram, plus: bool) -> CheckResult:
    witness = d.wplus if plus else d.wminus
    detail = witness.error or witness.quotient.text
    return _result(check, witness.recognized(projective=d.spin_level), detail)


def validate_diagram(d: Diagram) -> CheckReport:
    """
    Check that `d` is a group diagram: the groups are placed consistently in the ambient of G, H lies in both K-
    and K+, and both K-/H and K+/H are recognized as spheres of positive dimension. For spin level diagrams real
    projective quotients are accepted, as they lift to spheres.

    :param Diagram d: The diagram.
    :return: One result per check; never raises.
    """
    checks = [
        _guarded('ambient', lambda: _result('ambient', True, ambient_of(d.G).text)),
        _guarded('embedding', lambda: _embedding(d)),
        _result('l-minus', d.wminus.l >= 1, f'l- = {d.wminus.l}'),
        _result('l-plus', d.wplus.l >= 1, f'l+ = {d.wplus.l}'),
        _result('rank', rank(d.H) <= min(rank(d.Kminus), rank(d.Kplus))
                and max(rank(d.Kminus), rank(d.Kplus)) <= rank(d.G),
                f'ranks {rank(d.H)}, {rank(d.Kminus)}, {rank(d.Kplus)}, {rank(d.G)}'),
    ]
    for check, K in (('inclusion-minus', d.Kminus), ('inclusion-plus', d.Kplus)):
        inclusion = check_inclusion(d.H, K)
        checks.append(_result(check, inclusion.contained, inclusion.detail))
    checks.append(_guarded('witness-minus', lambda: _witness('witness-minus', d, plus=False)))
    checks.append(_guarded('witness-plus', lambda: _witness('witness-plus', d, plus=True)))

    report = CheckReport(tuple(checks))
    if not report.passed:
        logging.debug(f'{d.text} fails {[c.check for c in report.failures()]}')
    return report


def kernel_factors(K: GroupExpr, H: GroupExpr) -> list[Factor]:
    """Factors of K contained identically in H; they act trivially on K/H."""
    return [f for f in K.factors if f in H.factors]


def _f1(d: Diagram, chi: int) -> CheckResult:
    full = max(rank(d.Kminus), rank(d.Kplus)) == rank(d.G)
    return _result('f1-max-rank', chi <= 0 or full, f'chi = {chi}')


def _f2(d: Diagram, chi: int) -> CheckResult:
    for name, K, l in (('K+', d.Kplus, d.wplus.l), ('K-', d.Kminus, d.wminus.l)):
        if chi > 0 and rank(K) == rank(d.G):
            corank = rank(d.G) - rank(d.H)
            if corank != 1 or l % 2 == 0:
                return _result('f2-parity', False, f'{name} of maximal rank with corank(H) = {corank} and l = {l}')
    return _result('f2-parity', True, f'chi = {chi}')


def _f3(d: Diagram) -> CheckResult:
    lm, lp = d.wminus.l, d.wplus.l
    if lp > 1 and lm >= 1 and not d.Kminus.is_connected:
        return _result('f3-connectivity', False, f'K- must be connected for l+ = {lp}')
    if lm > 1 and lp >= 1 and not d.Kplus.is_connected:
        return _result('f3-connectivity', False, f'K+ must be connected for l- = {lm}')
    if lm > 1 and lp > 1 and not d.H.is_connected:
        return _result('f3-connectivity', False, 'H must be connected when both spheres are simply connected')
    return _result('f3-connectivity', True)


def _f4(d: Diagram) -> CheckResult:
    count = factor_count(d.Kplus)
    return _result('f4-factor-count', count <= 4, f'K+ has {count} factors')


def _f5(d: Diagram) -> CheckResult:
    plus, minus = kernel_factors(d.Kplus, d.H), kernel_factors(d.Kminus, d.H)
    for f in plus:
        if f in minus:
            return _result('f5-kernel', False, f'{f.symbol} acts trivially on both spheres')
        if f.kind not in _ISOTROPY_KINDS and not (f.kind == KindSymbol.spin and f.n == 7) \
                and not (f.kind == KindSymbol.torus and f.n == 1):
            return _result('f5-kernel', False, f'{f.symbol} is no factor of an isotropy group of a sphere action')

    count = factor_count(d.Kplus)
    kernel = factor_count(GroupExpr(tuple(plus)))
    if count == 4 and (kernel > 2 or count - kernel > 2):
        return _result('f5-kernel', False, f'no split of the 4 factors of K+ with a kernel of {kernel} factors')
    return _result('f5-kernel', True, f'{kernel} kernel factors in K+')


def necessary_filters(d: Diagram) -> CheckReport:
    """
    Necessary conditions on a diagram with positive Euler characteristic of a primitive, almost effective action:
    a singular isotropy group of maximal rank, an odd sphere at the maximal rank side, connectedness of isotropy
    groups when the other sphere is simply connected, at most 4 factors in K+ and ineffective kernels of K+ that fit
    the isotropy groups of sphere actions.

    :param Diagram d: A valid diagram.
    :return: One result per filter; never raises.
    """
    try:
        chi = euler_char_M(d)
        checks = [_f1(d, chi), _f2(d, chi)]
    except CohomoneException as e:
        checks = [_result('f1-max-rank', False, str(e)), _result('f2-parity', False, str(e))]

    checks += [_f3(d), _f4(d), _f5(d)]
    return CheckReport(tuple(checks))


def _inside_blocks(K: Realization, L: Realization) -> bool:
    return all(any(a.coordinates <= b.coordinates for b in L.atoms) or a in L.atoms for a in K.atoms) \
        and in_span(K.directions, L.directions, L.ambient.torus_size)


def _touched(r: Realization) -> set[int]:
    """Defining coordinates moved by some element of the realized group."""
    touched = {c for fr in r.factors for c in fr.coordinates}
    for v in r.abelian:
        for i, x in enumerate(v, start=1):
            if x:
                touched |= {2 * i - 1, 2 * i} if r.ambient.is_orthogonal else {i}
    return touched


def detect_non_primitive(d: Diagram) -> Primitivity:
    """
    Look for a proper subgroup of G containing both K- and K+: a maximal rank subgroup in standard block structure
    whose blocks contain those of K- and K+, or the stabilizer of a coordinate that K- and K+ both fix.

    :return: NON_PRIMITIVE when such a subgroup is found, UNKNOWN otherwise.
    """
    try:
        ambient = d.ambient
        minus, plus = realize_together(d.Kminus, d.Kplus)
    except CohomoneException:
        return Primitivity.unknown

    if set(range(1, ambient.size + 1)) - _touched(minus) - _touched(plus):
        return Primitivity.non_primitive

    for L in maximal_rank_subgroups(ambient_group(ambient), max_factors=ambient.size, proper_only=True):
        blocks = realize(L)
        if _inside_blocks(minus, blocks) and _inside_blocks(plus, blocks):
            logging.debug(f'{d.text} is inside {format_group(L)}')
            return Primitivity.non_primitive

    return Primitivity.unknown

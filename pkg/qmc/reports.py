"""
.. See the NOTICE file distributed with this work for additional information
   regarding copyright ownership.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
"""

"""
Report documents shared by the management commands, the REST views and the
verification task. Every report embeds the resolved configuration and its
digest; every check carries both sides as exact rationals.
"""

import logging
from fractions import Fraction
from itertools import islice

import mpmath

from qmc.exceptions import ConfigurationError
from qmc.lib import witness
from qmc.lib.config import parse_point
from qmc.lib.discrepancy import point_values
from qmc.lib.discrepancy import star_discrepancy_exact
from qmc.lib.discrepancy import windowed_max_bruteforce
from qmc.lib.discrepancy import windowed_max_weighted_discrepancy
from qmc.lib.export import points_document
from qmc.lib.export import render_decimal
from qmc.lib.export import render_fraction
from qmc.lib.halton import generalized_orbit
from qmc.lib.halton import generate_block
from qmc.lib.limits import setting
from qmc.serializers.config import resolve_run_config
from qmc.serializers.witness import ChainSerializer
from qmc.serializers.witness import CheckSerializer
from qmc.serializers.witness import ConstantsSerializer
from qmc.serializers.witness import Lemma2Serializer
from qmc.serializers.witness import WitnessBoxesSerializer
from qmc.serializers.witness import WitnessPlanSerializer

logger = logging.getLogger(__name__)

VERIFY_MODES = ('lemma1', 'lemma2', 'membership', 'theorem')


def check(name, holds, relation, lhs=None, rhs=None, detail=''):
    return {
        'name': name,
        'holds': bool(holds),
        'relation': relation,
        'lhs': None if lhs is None else render_fraction(lhs),
        'rhs': None if rhs is None else render_fraction(rhs),
        'detail': detail,
    }


def run_section(x0=None, **params):
    """
    Parameters of the run beside the configuration. The orbit start is kept
    by its digits and their exact values, None meaning the origin.
    """
    run = dict(params)
    run['x_digits'] = None if x0 is None else [list(c.digits) for c in x0.coords]
    run['x'] = None if x0 is None else [render_fraction(v) for v in x0.values]
    return run


def _envelope(config, run, **sections):
    report = {'config': config.document, 'digest': config.digest, 'run': run}
    report.update(sections)
    return report


def _passed(checks):
    return all(c['holds'] for c in checks)


def points_report(config, start, count, x0=None, precision=None):
    rows = generate_block(config.system, start, count, x0, config.family, precision)
    run = run_section(x0, start=start, count=count, precision=precision)
    return points_document(rows, config.document, config.digest, precision, run)


def discrepancy_report(points, precision=None, cap=None, config=None, run=None):
    """
    N, exact D*_N, its decimal rendering, N D*_N and N D*_N / ln^s N.
    """
    points = list(points)
    value = star_discrepancy_exact(points, cap)
    n = len(points)
    s = len(point_values(points[0]))
    scaled = n * value

    if n > 1:
        with mpmath.workdps(setting('QMC_LOG_PRECISION')):
            normalized = mpmath.mpf(scaled.numerator) / scaled.denominator / mpmath.log(n) ** s
            normalized = mpmath.nstr(normalized, precision or setting('QMC_DECIMAL_PRECISION'))
    else:
        normalized = None

    report = {
        'n': n,
        'dimension': s,
        'star_discrepancy': render_fraction(value),
        'decimal': render_decimal(value, precision),
        'scaled': render_fraction(scaled),
        'normalized': normalized,
    }
    if config is not None:
        report = _envelope(config, run, **report)
    elif run is not None:
        report['run'] = run
    return report


def generated_points(config, start, count, x0=None):
    return list(islice(generalized_orbit(x0 or parse_point(config.system), config.family, start), count))


def _plan_and_boxes(config, mfrak=None, n=None, x0=None):
    if (mfrak is None) == (n is None):
        raise ConfigurationError("give exactly one of mfrak or N")
    system = config.system
    if n is not None:
        mfrak = witness.mfrak_from_n(n, system.dimension, system.q0)
        if mfrak < 1:
            raise ConfigurationError("N={} is too small: the horizon would be {}".format(n, mfrak))
    plan = witness.select_tau(system, config.family, mfrak)
    if plan.m == 0:
        raise ConfigurationError("horizon {} leaves no witness boxes".format(mfrak))
    boxes = witness.build_boxes(plan, config.family, x0)
    return plan, boxes


def _plan_checks(plan, boxes):
    checks = [
        check(c.name, c.holds, 'holds', detail=c.detail) for c in witness.verify_plan(plan)
    ]
    failures = witness.shift_congruence_check(plan, boxes)
    checks.append(check(
        'shifted preimage residues move by A_k', not failures, 'holds',
        detail='failing k: {}'.format([list(k) for k in failures]) if failures else '',
    ))
    shares = {Fraction(boxes.shifts[k], boxes.moduli[k]) for k in plan.multi_indices()}
    expected = sum(
        (Fraction(c * a, p) for c, a, p in zip(plan.multipliers, plan.difference, plan.bases)),
        Fraction(0),
    ) % 1
    checks.append(check(
        'A_k / P_k share one fractional part', shares == {expected}, '==',
        min(shares), expected,
    ))
    return checks


def witness_report(config, mfrak=None, n=None, x0=None):
    """
    Plan, boxes, closed forms and structural checks, without brute force.

    Returns
    -------
    (dict, bool)
        The report and whether every check holds
    """
    plan, boxes = _plan_and_boxes(config, mfrak, n, x0)
    system = config.system
    lemma2 = witness.lemma2_bound(plan)
    constants = None
    if system.dimension >= 2:
        constants = witness.theorem_constants(system.dimension, system.h0, system.q0, plan)
    closed = witness.alpha_closed_form(plan, boxes)

    checks = _plan_checks(plan, boxes)
    checks.append(check('closed form matches the collapsed lemma form', closed == lemma2.alpha_m, '==',
                        closed, lemma2.alpha_m))

    report = _envelope(
        config,
        run_section(x0, mfrak=mfrak, n=n),
        plan=WitnessPlanSerializer(plan).data,
        boxes=WitnessBoxesSerializer(boxes).data,
        alpha_m=render_fraction(closed),
        lemma2=Lemma2Serializer(lemma2).data,
        constants=ConstantsSerializer(constants).data if constants else None,
        checks=CheckSerializer(checks, many=True).data,
    )
    return report, _passed(checks)


def _verify_lemma1(config, plan, boxes, cap):
    closed = witness.alpha_closed_form(plan, boxes)
    brute = witness.alpha_bruteforce(plan, boxes, cap)
    checks = [check('alpha closed form equals brute force', closed == brute, '==', closed, brute)]
    for k in plan.multi_indices():
        per_box = witness.alpha_per_box_bruteforce(plan, boxes, k, cap)
        expected = witness.alpha_per_box_closed_form(boxes, k)
        checks.append(check('box {} average'.format(list(k)), per_box == expected, '==', per_box, expected))
    periods = witness.period_cancellation_check(plan, boxes, cap)
    checks.append(check('one hit per box period', periods.holds, 'holds',
                        detail='{} windows fail'.format(len(periods.failures)) if periods.failures else ''))
    return {'alpha_m': render_fraction(closed)}, checks


def _verify_lemma2(config, plan, boxes, cap):
    lemma2 = witness.lemma2_bound(plan)
    closed = witness.alpha_closed_form(plan, boxes)
    checks = [
        check('closed form matches the collapsed lemma form', closed == lemma2.alpha_m, '==',
              closed, lemma2.alpha_m),
        check('{alpha} differs from 1/2', lemma2.not_half, '!=', lemma2.fractional_part, Fraction(1, 2)),
        check('|1/2 - {alpha}| >= 1/(2 p0)', lemma2.distance_holds, '>=',
              lemma2.distance, lemma2.distance_bound),
    ]
    bound = check('|alpha_m| >= m^s/(4 p0)', lemma2.bound_holds, '>=', abs(lemma2.alpha_m), lemma2.bound,
                  detail='' if lemma2.hypothesis_met else 'hypothesis m >= 2 p0 not met')
    if lemma2.hypothesis_met:
        checks.append(bound)
    else:
        logger.warning("Lemma bound hypothesis m >= 2 p0 not met: m=%d, p0=%d", plan.m, plan.p0)
    return {'lemma2': Lemma2Serializer(lemma2).data, 'conditions': [bound]}, checks


def _verify_membership(config, plan, boxes, cap, n_max=None):
    sweep = witness.membership_sweep(plan, boxes, n_max, cap)
    checks = [check(
        'geometric and congruence membership agree', sweep.holds, 'holds',
        detail='{} indices x {} boxes'.format(sweep.checked, sweep.boxes),
    )]
    failures = witness.shift_congruence_check(plan, boxes)
    checks.append(check('shifted preimage residues move by A_k', not failures, 'holds'))
    return {
        'checked': sweep.checked,
        'boxes': sweep.boxes,
        'disagreements': list(sweep.disagreements[:20]),
    }, checks


def _verify_theorem(config, mfrak, n, x0, cap):
    chain = witness.theorem_chain(config.system, config.family, x0, n=n, mfrak=None if n else mfrak,
                                  cap=cap)
    fast = windowed_max_weighted_discrepancy(chain.plan, chain.boxes, cap=cap)
    brute = windowed_max_bruteforce(chain.plan, chain.boxes, cap=cap)
    checks = [
        check('windowed maximum from residues equals point counting', fast.value == brute.value, '==',
              fast.value, brute.value),
        check('|alpha_m| <= max_M |Delta(window)|', chain.average_le_window, '<=',
              abs(chain.alpha), chain.window_max),
        check('max_M |Delta(window)| <= 2 max_M |Delta(prefix)|', chain.window_le_prefix, '<=',
              chain.window_max, 2 * chain.prefix_max),
    ]
    conditions = [
        check('2 P_m <= N', chain.size_ok, '<=', 2 * chain.boxes.moduli[chain.plan.full_index], chain.n),
        check('log2 N >= 2 q0^(s-1) C_1', chain.hypothesis_met, '>='),
    ]
    return {
        'chain': ChainSerializer(chain).data,
        'constants': ConstantsSerializer(chain.constants).data,
        'conditions': conditions,
    }, checks


def verify_report(mode, config, mfrak=None, n=None, x0=None, n_max=None, cap=None):
    """
    Run one verification mode.

    Returns
    -------
    (dict, bool)
        The report and whether every asserted identity holds. Unmet
        hypotheses are reported under 'conditions' and never fail a run.
    """
    if mode not in VERIFY_MODES:
        raise ConfigurationError("unknown verification mode {!r}".format(mode))
    logger.info("Verifying %s", mode)

    if mode == 'theorem':
        sections, checks = _verify_theorem(config, mfrak, n, x0, cap)
    else:
        plan, boxes = _plan_and_boxes(config, mfrak, n, x0)
        if mode == 'lemma1':
            sections, checks = _verify_lemma1(config, plan, boxes, cap)
        elif mode == 'lemma2':
            sections, checks = _verify_lemma2(config, plan, boxes, cap)
        else:
            sections, checks = _verify_membership(config, plan, boxes, cap, n_max)
        sections['plan'] = WitnessPlanSerializer(plan).data
        sections['start'] = boxes.start

    if 'conditions' in sections:
        sections['conditions'] = CheckSerializer(sections['conditions'], many=True).data
    passed = _passed(checks)
    run = run_section(x0, mfrak=mfrak, n=n, n_max=n_max, cap=cap)
    report = _envelope(config, run, mode=mode, passed=passed, checks=CheckSerializer(checks, many=True).data,
                       **sections)
    logger.info("Verification %s %s", mode, 'passed' if passed else 'FAILED')
    return report, passed


def run_verification(mode, bases, perms=None, mfrak=None, n=None, n_max=None, cap=None,
                     x=None, x_digits=None):
    """
    verify_report from raw documents, as received by the verification task.
    """
    config = resolve_run_config(bases, perms)
    x0 = parse_point(config.system, x, x_digits)
    return verify_report(mode, config, mfrak, n, x0, n_max, cap)

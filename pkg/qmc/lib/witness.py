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
Lower-bound witness for generalized Halton sequences.

From a base system, a permutation family and a horizon mfrak the planner
picks, per dimension, a radix p_i and a residue a_i such that many digit
positions share both, then narrows those positions to a common residue
class of P~^{-1} modulo p0 / p_i. The retained positions tau_{i,1..m}
define a family of nested boxes B^(k) whose union is the anchored box
B_y. Each B^(k) is hit exactly once per period P_k of the orbit, at a
shift A_k that is an explicit multiple of P_k / p_i, so the weighted
local discrepancy of B_y over one full period has the closed form

    alpha_m = sum_k (1/2 - A_k / P_k - 1 / (2 P_k)).
"""

import logging
from collections import Counter
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from itertools import islice
from itertools import product as cartesian
from math import floor
from math import gcd
from math import prod
from typing import NamedTuple

import mpmath

from qmc.exceptions import ConfigurationError
from qmc.exceptions import HorizonOverflowError
from qmc.lib.crt import cofactor
from qmc.lib.crt import index_from_prefix
from qmc.lib.crt import modular_inverse
from qmc.lib.discrepancy import AnchoredBox
from qmc.lib.discrepancy import prefix_box_discrepancies
from qmc.lib.discrepancy import windowed_max_weighted_discrepancy
from qmc.lib.halton import generalized_orbit
from qmc.lib.halton import generalized_point
from qmc.lib.limits import enforce_cap
from qmc.lib.limits import setting
from qmc.lib.radix import ExactPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessPlan:
    """
    Every quantity selected by select_tau. Dimensions are 0-based, digit
    positions and box indices are 1-based.
    """
    system: object = field(repr=False)
    family: object = field(repr=False)
    mfrak: int
    alphabet_index: tuple
    difference: tuple
    positions: tuple
    bases: tuple
    p0: int
    complements: tuple
    residue_class: tuple
    selected: tuple
    m: int
    tau: tuple
    multipliers: tuple
    gcds: tuple
    reduced_bases: tuple
    reduced_difference: tuple
    numerators: tuple

    @property
    def s(self):
        return len(self.bases)

    @property
    def position_counts(self):
        return tuple(len(l) for l in self.positions)

    @property
    def class_counts(self):
        return tuple(len(f) for f in self.selected)

    @property
    def full_index(self):
        return (self.m,) * self.s

    def level_modulus(self, i, k):
        """
        P_{i,k} = P~_{i, tau_{i,k}}.
        """
        return self.system.product(i, self.tau[i][k - 1])

    def tau_vector(self, k):
        return tuple(self.tau[i][k_i - 1] for i, k_i in enumerate(k))

    def box_modulus(self, k):
        return prod(self.level_modulus(i, k_i) for i, k_i in enumerate(k))

    def box_cofactor(self, i, k):
        """
        M_{i,k}, the CRT cofactor of dimension i at depths tau_k.
        """
        return cofactor(self.system, i, self.tau_vector(k))

    def multi_indices(self):
        return cartesian(range(1, self.m + 1), repeat=self.s)


def select_tau(system, family, mfrak):
    """
    Build the witness plan for horizon mfrak.

    Ties are broken towards the smallest alphabet index, then the smallest
    residue a, then the smallest residue class b.
    """
    if not isinstance(mfrak, int) or mfrak < 1:
        raise ConfigurationError("horizon must be a positive integer, got {}".format(mfrak))
    if mfrak > system.depth:
        raise HorizonOverflowError(
            "horizon {} exceeds the working depth {}".format(mfrak, system.depth)
        )
    if family.system is not system and family.system != system:
        raise ConfigurationError("permutation family belongs to another base system")

    alphabet_index, difference, positions, bases = [], [], [], []
    for i, alphabet in enumerate(system.alphabets):
        best = None
        for g, radix in enumerate(alphabet):
            residues = Counter()
            members = {}
            for j in range(1, mfrak + 1):
                if system.radix(i, j) == radix:
                    a = family.difference_residue(i, j)
                    residues[a] += 1
                    members.setdefault(a, []).append(j)
            for a in range(1, radix):
                if best is None or residues[a] > len(best[2]):
                    best = (g, a, tuple(members.get(a, ())))
        g, a, chosen = best
        alphabet_index.append(g)
        difference.append(a)
        positions.append(chosen)
        bases.append(alphabet[g])

    p0 = prod(bases)
    complements, residue_class, selected = [], [], []
    for i, chosen in enumerate(positions):
        complement = p0 // bases[i]
        classes = {}
        for number, j in enumerate(chosen, start=1):
            b = modular_inverse(system.product(i, j), complement)
            classes.setdefault(b, []).append(number)
        best_b, best_members = 0, ()
        for b in range(complement):
            members = tuple(classes.get(b, ()))
            if len(members) > len(best_members):
                best_b, best_members = b, members
        complements.append(complement)
        residue_class.append(best_b)
        selected.append(best_members)

    m = min(len(f) for f in selected)
    if m == 0:
        logger.warning("Horizon %d leaves an empty witness: retained counts %s",
                       mfrak, [len(f) for f in selected])
    tau = tuple(
        tuple(positions[i][f - 1] for f in selected[i][:m]) for i in range(len(bases))
    )

    multipliers, gcds, reduced_bases, reduced_difference, numerators = [], [], [], [], []
    for i, p in enumerate(bases):
        c = prod(b for k, b in enumerate(residue_class) if k != i) % p
        common = gcd(difference[i], p)
        reduced = p // common
        a_hat = difference[i] // common
        multipliers.append(c)
        gcds.append(common)
        reduced_bases.append(reduced)
        reduced_difference.append(a_hat)
        numerators.append(c * a_hat % reduced)

    plan = WitnessPlan(
        system=system,
        family=family,
        mfrak=mfrak,
        alphabet_index=tuple(alphabet_index),
        difference=tuple(difference),
        positions=tuple(positions),
        bases=tuple(bases),
        p0=p0,
        complements=tuple(complements),
        residue_class=tuple(residue_class),
        selected=tuple(selected),
        m=m,
        tau=tau,
        multipliers=tuple(multipliers),
        gcds=tuple(gcds),
        reduced_bases=tuple(reduced_bases),
        reduced_difference=tuple(reduced_difference),
        numerators=tuple(numerators),
    )
    logger.info("Witness plan for horizon %d: bases %s, depth m=%d", mfrak, plan.bases, m)
    return plan


class Check(NamedTuple):
    name: str
    holds: bool
    detail: str


def verify_plan(plan):
    """
    Re-derive the invariants of a plan from the base system and family.

    Returns
    -------
    list of Check
    """
    system, family = plan.system, plan.family
    checks = []

    constant = all(
        system.radix(i, j) == plan.bases[i] and family.difference_residue(i, j) == plan.difference[i]
        for i in range(plan.s) for j in plan.tau[i]
    )
    checks.append(Check('radix and residue constant on tau', constant,
                        "p={} a={}".format(plan.bases, plan.difference)))

    classes = all(
        modular_inverse(system.product(i, j), plan.complements[i]) == plan.residue_class[i]
        for i in range(plan.s) for j in plan.tau[i]
    )
    checks.append(Check('inverse products share one residue class', classes,
                        "b={}".format(plan.residue_class)))

    coprime = all(
        gcd(d, p) == 1 and p > 1 for d, p in zip(plan.numerators, plan.reduced_bases)
    )
    checks.append(Check('reduced numerators coprime', coprime,
                        "d={} p_hat={}".format(plan.numerators, plan.reduced_bases)))

    q0 = system.q0
    position_bound = all(
        len(l) * h * q0 >= plan.mfrak for l, h in zip(plan.positions, system.alphabet_sizes)
    )
    checks.append(Check('position counts reach mfrak / (h_i q0)', position_bound,
                        "L={}".format(plan.position_counts)))

    depth_bound = plan.m * system.h0 * q0 ** plan.s >= plan.mfrak
    checks.append(Check('witness depth reaches mfrak / (h0 q0^s)', depth_bound,
                        "m={}".format(plan.m)))

    rebuilt = select_tau(system, family, plan.mfrak)
    checks.append(Check('selection is maximal and reproducible', rebuilt == plan,
                        "tau={}".format([list(t) for t in plan.tau])))
    return checks


@dataclass(frozen=True)
class TheoremConstants:
    s: int
    h0: int
    q0: int
    log2_q0: object
    c1: object
    c: object
    instance: object
    precision: int

    @property
    def instance_exceeds_c1(self):
        return self.instance is not None and self.instance > self.c1 ** self.s


def _log2(value, precision):
    if value > 0 and (value & (value - 1)) == 0:
        return mpmath.mpf(value.bit_length() - 1)
    with mpmath.workdps(precision):
        return mpmath.log(value, 2)


def theorem_constants(s, h0, q0, plan=None, precision=None):
    """
    C_1 = 2 s h0 q0^s log2 q0 and C = 2^{s+3} s^s h0^s q0^{s^2} log2^s q0,
    with the instance constant 8 p0 C_1^s when a plan is given. Logarithms
    of powers of two are exact.
    """
    if s < 2:
        raise ConfigurationError("the lower bound constants need s >= 2, got {}".format(s))
    digits = setting('QMC_LOG_PRECISION') if precision is None else precision
    with mpmath.workdps(digits):
        log2_q0 = _log2(q0, digits)
        c1 = 2 * s * h0 * q0 ** s * log2_q0
        c = 2 ** (s + 3) * s ** s * h0 ** s * q0 ** (s * s) * log2_q0 ** s
        instance = 8 * plan.p0 * c1 ** s if plan is not None else None
    return TheoremConstants(s=s, h0=h0, q0=q0, log2_q0=log2_q0, c1=c1, c=c,
                            instance=instance, precision=digits)


def mfrak_from_n(n, s, q0):
    """
    mfrak = floor(floor(log_{q0} N) / s) - 1, with the logarithm taken on
    integers.
    """
    if n < 1:
        raise ConfigurationError("N must be positive, got {}".format(n))
    t, power = 0, q0
    while power <= n:
        t += 1
        power *= q0
    return t // s - 1


@dataclass(frozen=True)
class WitnessBoxes:
    """
    The boundary point y, its digit preimages and the boxes B^(k) with
    their moduli P_k and shifts A_k, keyed by the 1-based multi-index k.
    """
    point: ExactPoint = field(repr=False)
    boundary: tuple
    boundary_digits: tuple
    partial_sums: tuple
    preimage: tuple
    preimage_zero: tuple
    boxes: dict
    moduli: dict
    shifts: dict
    preimage_residue: int
    offset: int
    start: int

    @property
    def volume(self):
        return prod(self.boundary, start=Fraction(1))

    @property
    def anchored(self):
        return AnchoredBox(upper=self.boundary)


def build_boxes(plan, family=None, x=None):
    """
    Build the witness boxes for a plan, starting the orbit at x (the origin
    by default).

    The start v_m = (u_m - W) mod P_m, where u_m is the CRT residue of the
    digit preimages of y and W the residue of x, both at depths tau_m.
    """
    system = plan.system
    if family is not None and family != plan.family:
        raise ConfigurationError("boxes must be built with the family the plan was selected for")
    family = plan.family
    if x is None:
        x = ExactPoint.origin(system)
    if x.system is not system and x.system != system:
        raise ConfigurationError("start point belongs to another base system")

    m, s = plan.m, plan.s
    top = tuple(plan.tau[i][-1] if m else 0 for i in range(s))

    boundary_digits, preimage, preimage_zero, partial_sums = [], [], [], []
    for i in range(s):
        marked = set(plan.tau[i])
        digits = tuple(1 if j in marked else 0 for j in range(1, top[i] + 1))
        boundary_digits.append(digits)
        preimage.append(tuple(family.sigma_inverse(i, j, d) for j, d in enumerate(digits, start=1)))
        preimage_zero.append(tuple(family.sigma_inverse(i, j, 0) for j in range(1, top[i] + 1)))
        sums = [Fraction(0)]
        for k in range(1, m + 1):
            sums.append(sums[-1] + Fraction(1, plan.level_modulus(i, k)))
        partial_sums.append(tuple(sums))

    boxes, moduli, shifts = {}, {}, {}
    for k in plan.multi_indices():
        boxes[k] = AnchoredBox(
            upper=tuple(partial_sums[i][k_i] for i, k_i in enumerate(k)),
            lower=tuple(partial_sums[i][k_i - 1] for i, k_i in enumerate(k)),
        )
        modulus = plan.box_modulus(k)
        moduli[k] = modulus
        shifts[k] = sum(
            plan.box_cofactor(i, k) * (modulus // plan.bases[i]) * plan.difference[i]
            for i in range(s)
        ) % modulus

    if m == 0:
        moduli[plan.full_index] = 1
    preimage_residue = index_from_prefix(ExactPoint.from_digits(system, preimage), top).residue
    offset = index_from_prefix(x, top).residue
    start = (preimage_residue - offset) % moduli[plan.full_index]
    logger.debug("Witness start v_m=%d from u_m=%d and W=%d", start, preimage_residue, offset)

    return WitnessBoxes(
        point=x,
        boundary=tuple(sums[m] for sums in partial_sums),
        boundary_digits=tuple(boundary_digits),
        partial_sums=tuple(partial_sums),
        preimage=tuple(preimage),
        preimage_zero=tuple(preimage_zero),
        boxes=boxes,
        moduli=moduli,
        shifts=shifts,
        preimage_residue=preimage_residue,
        offset=offset,
        start=start,
    )


class Membership(NamedTuple):
    geometric: bool
    arithmetic: bool


def arithmetic_membership(n, k, plan, boxes):
    """
    H(n) lies in B^(k) iff n = v_m + A_k modulo P_k.
    """
    return (n - boxes.start - boxes.shifts[k]) % boxes.moduli[k] == 0


def box_membership(n, k, plan, boxes):
    point = generalized_point(n, boxes.point, plan.family)
    return Membership(
        geometric=boxes.boxes[k].contains(point.values),
        arithmetic=arithmetic_membership(n, k, plan, boxes),
    )


@dataclass(frozen=True)
class MembershipSweep:
    checked: int
    boxes: int
    disagreements: tuple

    @property
    def holds(self):
        return not self.disagreements


def membership_sweep(plan, boxes, n_max=None, cap=None):
    """
    Compare geometric and arithmetic membership for n = 0..n_max-1 and
    every box. n_max defaults to two periods of P_m.
    """
    n_max = 2 * boxes.moduli[plan.full_index] if n_max is None else n_max
    keys = list(plan.multi_indices())
    enforce_cap(n_max, cap, "membership sweep over {} indices".format(n_max))

    disagreements = []
    orbit = generalized_orbit(boxes.point, plan.family)
    for n in range(n_max):
        values = next(orbit).values
        for k in keys:
            geometric = boxes.boxes[k].contains(values)
            if geometric != arithmetic_membership(n, k, plan, boxes):
                disagreements.append({'n': n, 'k': list(k), 'geometric': geometric})
    if disagreements:
        logger.warning("Membership sweep found %d disagreements", len(disagreements))
    return MembershipSweep(checked=n_max, boxes=len(keys), disagreements=tuple(disagreements))


def shift_congruence_check(plan, boxes):
    """
    For every k, replacing the digit at each tau_{i,k_i} of the preimage by
    sigma^{-1}(0) moves its residue by A_k modulo P_k, and every cofactor
    M_{i,k} reduces to c_i modulo p_i. Returns the failing k.
    """
    system = plan.system
    failures = []
    for k in plan.multi_indices():
        depths = plan.tau_vector(k)
        modulus = boxes.moduli[k]
        base = ExactPoint.from_digits(system, [boxes.preimage[i][:d] for i, d in enumerate(depths)])
        moved_digits = []
        for i, d in enumerate(depths):
            digits = list(boxes.preimage[i][:d])
            digits[d - 1] = boxes.preimage_zero[i][d - 1]
            moved_digits.append(tuple(digits))
        moved = ExactPoint.from_digits(system, moved_digits)
        lhs = index_from_prefix(moved, depths).residue
        rhs = (index_from_prefix(base, depths).residue + boxes.shifts[k]) % modulus
        cofactors_ok = all(
            plan.box_cofactor(i, k) % plan.bases[i] == plan.multipliers[i] for i in range(plan.s)
        )
        if lhs != rhs or not cofactors_ok:
            failures.append(k)
    if failures:
        logger.warning("Shift congruence fails for %d boxes", len(failures))
    return failures


def alpha_closed_form(plan, boxes):
    """
    alpha_m = sum_k (1/2 - A_k / P_k - 1 / (2 P_k)).
    """
    if plan.m == 0:
        return Fraction(0)
    half = Fraction(1, 2)
    return sum(
        (half - Fraction(boxes.shifts[k], boxes.moduli[k]) - Fraction(1, 2 * boxes.moduli[k])
         for k in plan.multi_indices()),
        Fraction(0),
    )


def _window_weighted_sum(plan, boxes, box, period, cap, what):
    enforce_cap(period, cap, what)
    orbit = generalized_orbit(boxes.point, plan.family, boxes.start)
    hits = running = 0
    for _ in range(period):
        if box.contains(next(orbit).values):
            hits += 1
        running += hits
    return Fraction(running, period) - box.volume * Fraction(period + 1, 2)


def alpha_bruteforce(plan, boxes, cap=None):
    """
    (1 / P_m) sum_{M=1}^{P_m} Delta(B_y, window of length M), counted on
    generated points.
    """
    if plan.m == 0:
        return Fraction(0)
    period = boxes.moduli[plan.full_index]
    return _window_weighted_sum(plan, boxes, boxes.anchored, period, cap,
                                "brute-force alpha over {} points".format(period))


def alpha_per_box_bruteforce(plan, boxes, k, cap=None):
    """
    The contribution of B^(k) alone, (1 / P_k) sum_{M=1}^{P_k} Delta(B^(k), M).
    """
    period = boxes.moduli[k]
    return _window_weighted_sum(plan, boxes, boxes.boxes[k], period, cap,
                                "brute-force box term over {} points".format(period))


def alpha_per_box_closed_form(boxes, k):
    modulus = boxes.moduli[k]
    return Fraction(1, 2) - Fraction(boxes.shifts[k], modulus) - Fraction(1, 2 * modulus)


@dataclass(frozen=True)
class PeriodCheck:
    checked: int
    failures: tuple

    @property
    def holds(self):
        return not self.failures


def period_cancellation_check(plan, boxes, cap=None):
    """
    Every window of P_k consecutive orbit points from the witness start
    hits B^(k) exactly once, over one full period P_m.
    """
    period = boxes.moduli[plan.full_index]
    keys = list(plan.multi_indices())
    enforce_cap(period, cap, "period cancellation over {} points".format(period))

    hits = {k: [0] * (period // boxes.moduli[k]) for k in keys}
    orbit = generalized_orbit(boxes.point, plan.family, boxes.start)
    for t in range(period):
        values = next(orbit).values
        for k in keys:
            if boxes.boxes[k].contains(values):
                hits[k][t // boxes.moduli[k]] += 1

    failures = tuple(
        {'k': list(k), 'window': w, 'hits': count}
        for k in keys for w, count in enumerate(hits[k]) if count != 1
    )
    return PeriodCheck(checked=period, failures=failures)


@dataclass(frozen=True)
class Lemma2Report:
    alpha: Fraction
    fractional_part: Fraction
    distance: Fraction
    distance_bound: Fraction
    volume: Fraction
    alpha_m: Fraction
    bound: Fraction
    hypothesis_met: bool

    @property
    def not_half(self):
        return self.fractional_part != Fraction(1, 2)

    @property
    def distance_holds(self):
        return self.distance >= self.distance_bound

    @property
    def bound_holds(self):
        return abs(self.alpha_m) >= self.bound

    @property
    def satisfied(self):
        return self.not_half and self.distance_holds and (self.bound_holds or not self.hypothesis_met)


def lemma2_bound(plan):
    """
    With alpha = sum_i d_i / p_hat_i, the closed form collapses to
    alpha_m = m^s (1/2 - {alpha}) - y_1 ... y_s / 2, and {alpha} stays at
    least 1 / (2 p0) away from 1/2, so |alpha_m| >= m^s / (4 p0) once
    m >= 2 p0.
    """
    alpha = sum((Fraction(d, p) for d, p in zip(plan.numerators, plan.reduced_bases)), Fraction(0))
    fractional = alpha - floor(alpha)
    volume = prod(
        (sum((Fraction(1, plan.level_modulus(i, k)) for k in range(1, plan.m + 1)), Fraction(0))
         for i in range(plan.s)),
        start=Fraction(1),
    )
    return Lemma2Report(
        alpha=alpha,
        fractional_part=fractional,
        distance=abs(Fraction(1, 2) - fractional),
        distance_bound=Fraction(1, 2 * plan.p0),
        volume=volume,
        alpha_m=plan.m ** plan.s * (Fraction(1, 2) - fractional) - volume / 2,
        bound=Fraction(plan.m ** plan.s, 4 * plan.p0),
        hypothesis_met=plan.m >= 2 * plan.p0,
    )


@dataclass(frozen=True)
class ChainReport:
    """
    The numeric chain |alpha_m| <= max_M |Delta(window M)| <= 2 max_M
    |Delta(prefix M)| together with the size and hypothesis conditions.
    """
    n: int
    plan: WitnessPlan = field(repr=False)
    boxes: WitnessBoxes = field(repr=False)
    alpha: Fraction
    lemma2: Lemma2Report
    constants: TheoremConstants
    window_max: Fraction
    window_argmax: int
    prefix_max: Fraction
    prefix_argmax: int
    prefix_length: int
    size_ok: bool
    hypothesis_met: bool
    log2_n: object
    final_bound: object

    @property
    def average_le_window(self):
        return abs(self.alpha) <= self.window_max

    @property
    def window_le_prefix(self):
        return self.window_max <= 2 * self.prefix_max

    @property
    def holds(self):
        return self.average_le_window and self.window_le_prefix


def theorem_chain(system, family, x=None, n=None, mfrak=None, cap=None, precision=None):
    """
    Evaluate every link of the lower-bound chain for one instance.

    Exactly one of n (sequence length N) or mfrak is given. Without N the
    chain is evaluated at N = 2 P_m. The prefix maximum runs over lengths
    up to max(N, v_m + P_m) so that the window is always covered.
    """
    if (n is None) == (mfrak is None):
        raise ConfigurationError("give exactly one of N or mfrak")
    s, q0, h0 = system.dimension, system.q0, system.h0
    if n is not None:
        mfrak = mfrak_from_n(n, s, q0)
        if mfrak < 1:
            raise ConfigurationError("N={} is too small: the horizon would be {}".format(n, mfrak))
    if x is None:
        x = ExactPoint.origin(system)

    plan = select_tau(system, family, mfrak)
    if plan.m == 0:
        raise ConfigurationError("horizon {} leaves no witness boxes".format(mfrak))
    boxes = build_boxes(plan, family, x)
    period = boxes.moduli[plan.full_index]
    length = 2 * period if n is None else n
    prefix_length = max(length, boxes.start + period)
    enforce_cap(prefix_length, cap, "prefix discrepancy over {} points".format(prefix_length))

    alpha = alpha_closed_form(plan, boxes)
    window = windowed_max_weighted_discrepancy(plan, boxes, period, cap)
    deltas = prefix_box_discrepancies(islice(generalized_orbit(x, family), prefix_length), boxes.anchored)
    prefix_argmax = max(range(len(deltas)), key=lambda i: abs(deltas[i]))

    constants = theorem_constants(s, h0, q0, plan, precision)
    with mpmath.workdps(constants.precision):
        log2_n = _log2(length, constants.precision)
        hypothesis_met = log2_n >= 2 * q0 ** (s - 1) * constants.c1
        final_bound = log2_n ** s / constants.c

    report = ChainReport(
        n=length,
        plan=plan,
        boxes=boxes,
        alpha=alpha,
        lemma2=lemma2_bound(plan),
        constants=constants,
        window_max=window.value,
        window_argmax=window.argmax,
        prefix_max=abs(deltas[prefix_argmax]),
        prefix_argmax=prefix_argmax,
        prefix_length=prefix_length,
        size_ok=2 * period <= length,
        hypothesis_met=bool(hypothesis_met),
        log2_n=log2_n,
        final_bound=final_bound,
    )
    if not report.holds:
        logger.warning("Lower-bound chain fails for horizon %d", mfrak)
    return report

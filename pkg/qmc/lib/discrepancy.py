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
Exact discrepancy of finite point sets.

The star discrepancy sup over anchored boxes [0, y) of |count/N - vol| is
attained on the grid of critical corners: every coordinate of y is a point
coordinate or 1. Below a corner the volume side is measured with open
counts (points strictly inside) and the count side with closed counts
(points on or inside), which covers the one-sided limits at the corner.
All arithmetic is on integers scaled to a common denominator per axis.
"""

import logging
from bisect import bisect_left
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from math import prod
from operator import itemgetter
from typing import NamedTuple

from qmc.exceptions import CapExceededError
from qmc.exceptions import ConfigurationError
from qmc.lib.halton import generalized_orbit
from qmc.lib.limits import enforce_cap

logger = logging.getLogger(__name__)

# the critical corner sweep is exponential in the dimension
MAX_EXACT_DIMENSION = 3


@dataclass(frozen=True)
class AnchoredBox:
    """
    Half-open box [lower, upper). The lower corner defaults to the origin.
    """
    upper: tuple
    lower: tuple = None

    def __post_init__(self):
        upper = tuple(Fraction(u) for u in self.upper)
        lower = tuple(Fraction(0) for _ in upper) if self.lower is None else tuple(
            Fraction(v) for v in self.lower)
        if len(lower) != len(upper):
            raise ConfigurationError("box corners have different dimensions")
        for lo, hi in zip(lower, upper):
            if not 0 <= lo < hi <= 1:
                raise ConfigurationError("box side [{}, {}) is not inside [0, 1]".format(lo, hi))
        object.__setattr__(self, 'upper', upper)
        object.__setattr__(self, 'lower', lower)

    @property
    def dimension(self):
        return len(self.upper)

    @property
    def volume(self):
        return prod((hi - lo for lo, hi in zip(self.lower, self.upper)), start=Fraction(1))

    @property
    def is_anchored(self):
        return not any(self.lower)

    def contains(self, values):
        return all(lo <= v < hi for v, lo, hi in zip(values, self.lower, self.upper))


def point_values(point):
    """
    Coordinates of an ExactPoint or of a plain sequence of rationals.
    """
    values = getattr(point, 'values', None)
    if values is None:
        values = tuple(Fraction(v) for v in point)
    return values


def local_discrepancy(points, box):
    """
    Delta(B, P) = #(P in B) - N * vol(B).
    """
    count = 0
    total = 0
    for point in points:
        total += 1
        if box.contains(point_values(point)):
            count += 1
    return count - total * box.volume


def _check_points(coords):
    if not coords:
        raise ConfigurationError("star discrepancy of an empty point set is undefined")
    s = len(coords[0])
    for number, values in enumerate(coords):
        if len(values) != s:
            raise ConfigurationError("point {} has {} coordinates, expected {}".format(number, len(values), s))
        if any(not 0 <= v < 1 for v in values):
            raise ConfigurationError("point {} lies outside [0, 1)^{}".format(number, s))
    return s


def star_discrepancy_exact(points, cap=None):
    """
    Exact D*_N of a finite point set as a fraction.

    Parameters
    ----------
    points : sequence of ExactPoint or sequence of rationals
    cap : int, optional
        Largest accepted N^s * s, defaults to QMC_STAR_DISCREPANCY_CAP

    Returns
    -------
    Fraction
    """
    coords = [point_values(p) for p in points]
    s = _check_points(coords)
    n = len(coords)
    if s > MAX_EXACT_DIMENSION:
        raise CapExceededError(
            "exact star discrepancy is limited to {} dimensions, got {}".format(MAX_EXACT_DIMENSION, s)
        )
    enforce_cap(n ** s * s, cap, "exact star discrepancy of {} points".format(n), 'QMC_STAR_DISCREPANCY_CAP')

    denominators = [lcm(*(values[i].denominator for values in coords)) for i in range(s)]
    scaled = [
        tuple(v.numerator * (d // v.denominator) for v, d in zip(values, denominators))
        for values in coords
    ]
    total = prod(denominators)
    grids = [sorted({p[i] for p in scaled} | {denominators[i]}) for i in range(s)]

    excess, deficit = _sweep(scaled, scaled, 0, n, grids, total)
    logger.debug("Star discrepancy sweep: excess %d, deficit %d over %d", excess, deficit, n * total)
    return Fraction(max(excess, deficit), n * total)


def _sweep(open_points, closed_points, axis, weight, grids, total):
    """
    Largest count excess and volume deficit over the corners below this
    axis, both scaled by N * total. weight is N times the product of the
    scaled corner coordinates fixed so far.
    """
    grid = grids[axis]
    if axis == len(grids) - 1:
        open_values = sorted(p[axis] for p in open_points)
        closed_values = sorted(p[axis] for p in closed_points)
        deficit = max(weight * g - bisect_left(open_values, g) * total for g in grid)
        excess = max(bisect_right(closed_values, g) * total - weight * g for g in grid)
        return excess, deficit

    key = itemgetter(axis)
    open_sorted = sorted(open_points, key=key)
    open_keys = [key(p) for p in open_sorted]
    closed_sorted = sorted(closed_points, key=key)
    closed_keys = [key(p) for p in closed_sorted]

    excess = deficit = None
    for g in grid:
        sub_excess, sub_deficit = _sweep(
            open_sorted[:bisect_left(open_keys, g)],
            closed_sorted[:bisect_right(closed_keys, g)],
            axis + 1, weight * g, grids, total,
        )
        excess = sub_excess if excess is None else max(excess, sub_excess)
        deficit = sub_deficit if deficit is None else max(deficit, sub_deficit)
    return excess, deficit


def rho_fast(k, m, plan, boxes):
    """
    Arithmetic discrepancy of box B^(k) over the window of length m that
    starts at the witness offset: #{0 <= t < m : t = A_k mod P_k} - m / P_k.
    """
    if len(k) != plan.s or not all(1 <= k_i <= plan.m for k_i in k):
        raise ConfigurationError("{} is not a multi-index of a plan with m={}, s={}".format(k, plan.m, plan.s))
    modulus = boxes.moduli[k]
    shift = boxes.shifts[k]
    return (m - shift + modulus - 1) // modulus - Fraction(m, modulus)


class WindowedMax(NamedTuple):
    value: Fraction
    argmax: int
    delta: Fraction


def windowed_max_weighted_discrepancy(plan, boxes, m_max=None, cap=None):
    """
    max over 1 <= M <= m_max of |sum_k rho_k(M)|, the weighted local
    discrepancy of B_y over windows starting at the witness offset. The
    value is a lower bound for max_M M * D*_M of that window.
    """
    m_max = boxes.moduli[plan.full_index] if m_max is None else m_max
    if m_max < 1:
        raise ConfigurationError("window length must be positive, got {}".format(m_max))
    keys = list(plan.multi_indices())
    enforce_cap(m_max * len(keys), cap, "windowed discrepancy over {} windows".format(m_max))

    best = WindowedMax(Fraction(-1), 0, Fraction(0))
    for m in range(1, m_max + 1):
        delta = sum((rho_fast(k, m, plan, boxes) for k in keys), Fraction(0))
        if abs(delta) > best.value:
            best = WindowedMax(abs(delta), m, delta)
    return best


def windowed_max_bruteforce(plan, boxes, m_max=None, cap=None):
    """
    Same maximum as windowed_max_weighted_discrepancy, counted on generated
    points of the window instead of residue classes.
    """
    m_max = boxes.moduli[plan.full_index] if m_max is None else m_max
    enforce_cap(m_max, cap, "brute-force windowed discrepancy over {} points".format(m_max))
    box = boxes.anchored
    volume = box.volume
    orbit = generalized_orbit(boxes.point, plan.family, boxes.start)
    best = WindowedMax(Fraction(-1), 0, Fraction(0))
    count = 0
    for m in range(1, m_max + 1):
        if box.contains(next(orbit).values):
            count += 1
        delta = count - m * volume
        if abs(delta) > best.value:
            best = WindowedMax(abs(delta), m, delta)
    return best


def prefix_box_discrepancies(points, box):
    """
    Running Delta(B, first M points) for M = 0..N.
    """
    volume = box.volume
    deltas = [Fraction(0)]
    count = 0
    for m, point in enumerate(points, start=1):
        if box.contains(point_values(point)):
            count += 1
        deltas.append(count - m * volume)
    return deltas

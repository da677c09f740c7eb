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

import json
import random
from fractions import Fraction
from itertools import islice
from itertools import product
from math import log
from math import prod
from pathlib import Path

import pytest
from django.test import SimpleTestCase

from qmc.exceptions import CapExceededError
from qmc.exceptions import ConfigurationError
from qmc.lib.discrepancy import AnchoredBox
from qmc.lib.discrepancy import local_discrepancy
from qmc.lib.discrepancy import prefix_box_discrepancies
from qmc.lib.discrepancy import rho_fast
from qmc.lib.discrepancy import star_discrepancy_exact
from qmc.lib.discrepancy import windowed_max_bruteforce
from qmc.lib.discrepancy import windowed_max_weighted_discrepancy
from qmc.lib.export import render_fraction
from qmc.lib.halton import generalized_orbit
from qmc.lib.halton import halton_point
from qmc.tests.helpers import halton23
from qmc.tests.helpers import worked_witness

GROWTH_SNAPSHOT = Path(__file__).resolve().parent / 'snapshots' / 'halton_growth.json'


def corner_oracle(points):
    """
    Star discrepancy by checking every corner built from point coordinates
    and 1, with open boxes for the volume excess and closed boxes for the
    count excess.
    """
    n, s = len(points), len(points[0])
    grids = [sorted({p[i] for p in points} | {Fraction(1)}) for i in range(s)]
    best = Fraction(0)
    for corner in product(*grids):
        volume = prod(corner, start=Fraction(1))
        below = sum(all(v < c for v, c in zip(p, corner)) for p in points)
        upto = sum(all(v <= c for v, c in zip(p, corner)) for p in points)
        best = max(best, volume - Fraction(below, n), Fraction(upto, n) - volume)
    return best


def one_dimensional(values):
    ordered = sorted(values)
    n = len(ordered)
    return max(
        max(Fraction(i, n) - x, x - Fraction(i - 1, n))
        for i, x in enumerate(ordered, start=1)
    )


class AnchoredBoxTest(SimpleTestCase):

    def test_volume_and_containment(self):
        box = AnchoredBox(upper=(Fraction(1, 2), Fraction(1, 3)))
        self.assertTrue(box.is_anchored)
        self.assertEqual(box.volume, Fraction(1, 6))
        self.assertTrue(box.contains((Fraction(0), Fraction(1, 4))))
        self.assertFalse(box.contains((Fraction(1, 2), Fraction(0))))

    def test_lower_corner(self):
        box = AnchoredBox(upper=(Fraction(1, 2),), lower=(Fraction(1, 4),))
        self.assertFalse(box.is_anchored)
        self.assertEqual(box.volume, Fraction(1, 4))
        self.assertFalse(box.contains((Fraction(1, 8),)))

    def test_invalid_sides(self):
        with self.assertRaises(ConfigurationError):
            AnchoredBox(upper=(Fraction(3, 2),))
        with self.assertRaises(ConfigurationError):
            AnchoredBox(upper=(Fraction(1, 4),), lower=(Fraction(1, 2),))
        with self.assertRaises(ConfigurationError):
            AnchoredBox(upper=(Fraction(1, 2), Fraction(1, 2)), lower=(Fraction(0),))

    def test_local_discrepancy(self):
        points = [halton_point(halton23(), n) for n in range(8)]
        box = AnchoredBox(upper=(Fraction(1, 2), Fraction(1)))
        self.assertEqual(local_discrepancy(points, box), 0)
        box = AnchoredBox(upper=(Fraction(1, 2), Fraction(1, 3)))
        # H(0), H(6) have x < 1/2 and y < 1/3
        self.assertEqual(local_discrepancy(points, box), 2 - Fraction(8, 6))


class StarDiscrepancyTest(SimpleTestCase):

    def test_small_examples(self):
        self.assertEqual(star_discrepancy_exact([(Fraction(1, 2),)]), Fraction(1, 2))
        self.assertEqual(star_discrepancy_exact([(Fraction(1, 2),), (Fraction(1, 4),)]), Fraction(1, 2))
        self.assertEqual(star_discrepancy_exact([(Fraction(1, 2), Fraction(1, 2))]), Fraction(3, 4))
        self.assertEqual(star_discrepancy_exact([(Fraction(0), Fraction(0))] * 3), 1)

    def test_one_dimension_closed_form(self):
        rng = random.Random(11)
        for n in range(1, 257):
            denominator = rng.choice((n, 2 * n + 1, 97, 1024))
            values = [Fraction(rng.randrange(denominator), denominator) for _ in range(n)]
            self.assertEqual(star_discrepancy_exact([(v,) for v in values]), one_dimensional(values), n)

    def test_against_corner_oracle(self):
        rng = random.Random(5)
        for number in range(100):
            s = 1 + number % 2
            denominator = rng.choice((8, 12, 30, 64))
            points = [
                tuple(Fraction(rng.randrange(denominator), denominator) for _ in range(s))
                for _ in range(rng.randint(1, 32))
            ]
            self.assertEqual(star_discrepancy_exact(points), corner_oracle(points), points)

    def test_three_dimensions_against_corner_oracle(self):
        rng = random.Random(6)
        for _ in range(15):
            points = [
                tuple(Fraction(rng.randrange(12), 12) for _ in range(3))
                for _ in range(rng.randrange(1, 9))
            ]
            self.assertEqual(star_discrepancy_exact(points), corner_oracle(points))

    def test_halton_prefix(self):
        points = [halton_point(halton23(), n) for n in range(20)]
        self.assertEqual(star_discrepancy_exact(points), corner_oracle([p.values for p in points]))

    def test_refusals(self):
        with self.assertRaises(ConfigurationError):
            star_discrepancy_exact([])
        with self.assertRaises(ConfigurationError):
            star_discrepancy_exact([(Fraction(1),)])
        with self.assertRaises(ConfigurationError):
            star_discrepancy_exact([(Fraction(1, 2),), (Fraction(1, 2), Fraction(0))])
        with self.assertRaises(CapExceededError):
            star_discrepancy_exact([(Fraction(0), Fraction(0))] * 10, cap=100)
        with self.assertRaises(CapExceededError):
            star_discrepancy_exact([(Fraction(0),) * 4])


@pytest.mark.slow
class HaltonGrowthTest(SimpleTestCase):
    """
    N D*_N / log^2 N along the Halton (2, 3) sequence for N = 2^4 ... 2^12
    """

    def test_band_and_snapshot(self):
        system = halton23()
        points = [halton_point(system, n) for n in range(2 ** 12)]
        values = {n: star_discrepancy_exact(points[:n]) for n in (2 ** e for e in range(4, 13))}
        ratios = {n: float(n * d) / log(n) ** 2 for n, d in values.items()}
        self.assertTrue(all(r > 0 for r in ratios.values()))
        self.assertLessEqual(max(ratios.values()) / min(ratios.values()), 4)

        snapshot = {
            'star_discrepancy': {str(n): render_fraction(d) for n, d in values.items()},
            'ratio': {str(n): round(r, 6) for n, r in ratios.items()},
        }
        if not GROWTH_SNAPSHOT.exists():
            # first run records the values, later runs compare against them
            GROWTH_SNAPSHOT.parent.mkdir(parents=True, exist_ok=True)
            GROWTH_SNAPSHOT.write_text(json.dumps(snapshot, indent=2) + '\n')
        recorded = json.loads(GROWTH_SNAPSHOT.read_text())
        self.assertEqual(recorded['star_discrepancy'], snapshot['star_discrepancy'])


class WindowedDiscrepancyTest(SimpleTestCase):
    """
    Residue counting against counting generated points
    """

    def setUp(self):
        self.plan, self.boxes = worked_witness()

    def test_rho_fast(self):
        plan, boxes = self.plan, self.boxes
        for k in ((1, 1), (2, 1), (1, 3)):
            box = boxes.boxes[k]
            orbit = generalized_orbit(boxes.point, plan.family, boxes.start)
            hits = 0
            for m in range(1, 2 * boxes.moduli[k] + 1):
                if box.contains(next(orbit).values):
                    hits += 1
                self.assertEqual(rho_fast(k, m, plan, boxes), hits - m * box.volume)

    def test_rho_fast_sums_to_window_discrepancy(self):
        plan, boxes = self.plan, self.boxes
        keys = list(plan.multi_indices())
        box = boxes.anchored
        orbit = generalized_orbit(boxes.point, plan.family, boxes.start)
        hits = 0
        for m in range(1, boxes.moduli[plan.full_index] + 1):
            if box.contains(next(orbit).values):
                hits += 1
            self.assertEqual(sum(rho_fast(k, m, plan, boxes) for k in keys), hits - m * box.volume)

    def test_rho_fast_rejects_foreign_indices(self):
        for k in ((0, 1), (4, 1), (1, 1, 1)):
            with self.assertRaises(ConfigurationError):
                rho_fast(k, 5, self.plan, self.boxes)

    def test_fast_matches_bruteforce(self):
        fast = windowed_max_weighted_discrepancy(self.plan, self.boxes)
        brute = windowed_max_bruteforce(self.plan, self.boxes)
        self.assertEqual(fast, brute)
        self.assertGreaterEqual(fast.value, Fraction(3365, 1152))

    def test_window_length(self):
        with self.assertRaises(ConfigurationError):
            windowed_max_weighted_discrepancy(self.plan, self.boxes, m_max=0)
        with self.assertRaises(CapExceededError):
            windowed_max_weighted_discrepancy(self.plan, self.boxes, cap=1000)

    def test_prefix_deltas(self):
        points = list(islice(generalized_orbit(self.boxes.point, self.plan.family), 100))
        deltas = prefix_box_discrepancies(points, self.boxes.anchored)
        self.assertEqual(len(deltas), 101)
        self.assertEqual(deltas[0], 0)
        self.assertEqual(deltas[100], local_discrepancy(points, self.boxes.anchored))

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

from fractions import Fraction

from django.test import SimpleTestCase

from qmc.exceptions import ConfigurationError
from qmc.exceptions import HorizonOverflowError
from qmc.lib.halton import PermutationFamily
from qmc.lib.halton import generalized_point
from qmc.lib.halton import generate_block
from qmc.lib.halton import halton_point
from qmc.lib.halton import scramble
from qmc.lib.odometer import odometer_power
from qmc.lib.radix import BaseSystem
from qmc.lib.radix import ExactPoint
from qmc.lib.radix import cantor_digits
from qmc.tests.helpers import halton23
from qmc.tests.helpers import mixed_system

REVERSE = {2: [1, 0], 3: [2, 1, 0], 5: [4, 3, 2, 1, 0]}


class PermutationFamilyTest(SimpleTestCase):
    """
    Building and validating digit permutation families
    """

    def setUp(self):
        self.system = halton23(4)

    def test_identity(self):
        family = PermutationFamily.identity(self.system)
        self.assertTrue(family.is_identity)
        self.assertEqual(family.difference_residue(0, 1), 1)
        self.assertEqual(family.difference_residue(1, 3), 2)
        self.assertEqual(family.as_document(), {'kind': 'identity'})

    def test_named_tables(self):
        family = PermutationFamily.from_named(self.system, {'3': [2, 1, 0]})
        self.assertFalse(family.is_identity)
        self.assertEqual(family.sigma(1, 2, 0), 2)
        self.assertEqual(family.sigma(0, 2, 1), 1)
        self.assertEqual(family.difference_residue(1, 1), 1)

    def test_explicit_tables_cycle(self):
        family = PermutationFamily.from_positions(self.system, [[[1, 0], [0, 1]], [[0, 2, 1]]])
        self.assertEqual(family.tables[0], ((1, 0), (0, 1), (1, 0), (0, 1)))
        self.assertEqual(family.tables[1][3], (0, 2, 1))
        self.assertEqual(family.sigma_inverse(1, 4, 1), 2)

    def test_inverse_family(self):
        family = PermutationFamily.from_positions(self.system, [[[1, 0]], [[1, 2, 0]]])
        inverse = family.inverse()
        self.assertEqual(inverse.tables[1][0], (2, 0, 1))
        self.assertEqual(inverse.inverse(), family)

    def test_rejects_non_permutations(self):
        with self.assertRaises(ConfigurationError):
            PermutationFamily.from_positions(self.system, [[[0, 0]], [[0, 1, 2]]])
        with self.assertRaises(ConfigurationError):
            PermutationFamily.from_positions(self.system, [[[0, 1, 2]], [[0, 1, 2]]])
        with self.assertRaises(ConfigurationError):
            PermutationFamily.from_positions(self.system, [[[0, 1]]])


class GeneralizedPointTest(SimpleTestCase):
    """
    Scrambled odometer orbits
    """

    def test_identity_origin_is_halton(self):
        system = halton23(8)
        family = PermutationFamily.identity(system)
        point = generalized_point(5, ExactPoint.origin(system), family)
        self.assertEqual(point.values, (Fraction(5, 8), Fraction(7, 9)))
        self.assertEqual(point, halton_point(system, 5))

    def test_index_zero_is_the_start(self):
        system = halton23(6)
        x0 = ExactPoint.from_values(system, ["3/8", "5/27"])
        self.assertEqual(generalized_point(0, x0, PermutationFamily.identity(system)), x0)

    def test_faure_permutation_in_one_dimension(self):
        system = BaseSystem.constant((5,), 3)
        family = PermutationFamily.from_named(system, {5: [0, 3, 2, 1, 4]})
        origin = ExactPoint.origin(system)
        values = [generalized_point(n, origin, family).values[0] for n in range(6)]
        self.assertEqual(values, [0, Fraction(3, 5), Fraction(2, 5), Fraction(1, 5), Fraction(4, 5), Fraction(3, 25)])

    @staticmethod
    def _prefix_point(system, dim, n):
        digits = [(0, 0, 0)] * system.dimension
        digits[dim] = cantor_digits(system, n, dim, 3).digits
        return ExactPoint.from_digits(system, digits)

    def test_scramble_is_bijective_on_prefixes(self):
        system = mixed_system(4)
        family = PermutationFamily.from_named(system, REVERSE)
        for dim in range(2):
            size = system.product(dim, 3)
            prefixes = [self._prefix_point(system, dim, n) for n in range(size)]
            plain = {p.coords[dim].value for p in prefixes}
            scrambled = {scramble(p, family).coords[dim].value for p in prefixes}
            self.assertEqual(len(scrambled), size)
            self.assertEqual(scrambled, plain)

    def test_inverse_family_undoes_scramble(self):
        system = halton23(6)
        family = PermutationFamily.from_positions(system, [[[1, 0], [0, 1]], [[1, 2, 0], [2, 1, 0]]])
        x0 = ExactPoint.from_digits(system, [(1, 0, 0, 1, 0, 0), (2, 1, 0, 0, 0, 0)])
        for n in (0, 3, 17):
            point = generalized_point(n, x0, family)
            self.assertEqual(scramble(point, family.inverse()), odometer_power(x0, n))
            self.assertEqual(scramble(point, family, inverse=True), odometer_power(x0, n))

    def test_scramble_rejects_other_system(self):
        family = PermutationFamily.identity(halton23(4))
        with self.assertRaises(ConfigurationError):
            scramble(ExactPoint.origin(halton23(5)), family)


class GenerateBlockTest(SimpleTestCase):

    def setUp(self):
        self.system = halton23(12)

    def test_first_halton_points(self):
        rows = generate_block(self.system, 0, 4)
        self.assertEqual([row.n for row in rows], [0, 1, 2, 3])
        self.assertEqual(
            [row.exact for row in rows],
            [
                (0, 0),
                (Fraction(1, 2), Fraction(1, 3)),
                (Fraction(1, 4), Fraction(2, 3)),
                (Fraction(3, 4), Fraction(1, 9)),
            ],
        )
        self.assertEqual(rows[1].decimal, ('0.5', '0.333333333333333'))
        self.assertEqual(rows[2].decimal, ('0.25', '0.666666666666667'))
        self.assertEqual(rows[3].decimal, ('0.75', '0.111111111111111'))
        self.assertEqual(rows[0].decimal, ('0', '0'))

    def test_precision(self):
        rows = generate_block(self.system, 2, 1, precision=3)
        self.assertEqual(rows[0].decimal, ('0.25', '0.667'))

    def test_empty_block(self):
        self.assertEqual(generate_block(self.system, 10, 0), [])

    def test_block_beyond_capacity(self):
        with self.assertRaises(HorizonOverflowError):
            generate_block(halton23(2), 3, 2)
        self.assertEqual(len(generate_block(halton23(2), 0, 4)), 4)

    def test_blocks_are_shifts(self):
        whole = generate_block(self.system, 0, 30)
        tail = generate_block(self.system, 12, 18)
        self.assertEqual([r.exact for r in tail], [r.exact for r in whole[12:]])
        self.assertEqual([r.n for r in tail], list(range(12, 30)))

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

import random
from fractions import Fraction

from django.test import SimpleTestCase

from qmc.exceptions import ConfigurationError
from qmc.exceptions import HorizonOverflowError
from qmc.lib.crt import cofactor
from qmc.lib.crt import extended_gcd
from qmc.lib.crt import index_from_prefix
from qmc.lib.crt import modular_inverse
from qmc.lib.crt import prefix_consistency
from qmc.lib.crt import prefix_modulus
from qmc.lib.crt import shift_identity_check
from qmc.lib.halton import halton_point
from qmc.lib.radix import BaseSystem
from qmc.lib.radix import ExactPoint
from qmc.tests.helpers import halton23
from qmc.tests.helpers import mixed_system


class ModularArithmeticTest(SimpleTestCase):

    def test_extended_gcd(self):
        g, u, v = extended_gcd(240, 46)
        self.assertEqual(g, 2)
        self.assertEqual(240 * u + 46 * v, 2)

    def test_inverse(self):
        self.assertEqual(modular_inverse(3, 4), 3)
        self.assertEqual(modular_inverse(4, 3), 1)
        self.assertEqual(modular_inverse(7, 1), 0)

    def test_inverse_requires_coprime(self):
        with self.assertRaises(ConfigurationError):
            modular_inverse(3, 6)
        with self.assertRaises(ConfigurationError):
            modular_inverse(3, 0)

    def test_cofactors(self):
        system = halton23()
        self.assertEqual(prefix_modulus(system, (2, 1)), 12)
        self.assertEqual(cofactor(system, 0, (2, 1)), 3)
        self.assertEqual(cofactor(system, 1, (2, 1)), 1)


class PrefixIndexTest(SimpleTestCase):
    """
    The residue recovered from the prefixes of a point
    """

    def test_small_example(self):
        system = halton23()
        x = ExactPoint.from_values(system, [Fraction(1, 2), Fraction(1, 3)])
        residue = index_from_prefix(x, (1, 1))
        self.assertEqual(residue.modulus, 6)
        self.assertEqual(residue.residue, 1)

    def test_halton_points_roundtrip(self):
        cases = (
            (halton23(), (4, 5)),
            (mixed_system(), (4, 3)),
            (BaseSystem.constant((2, 3, 5), 12), (3, 2, 2)),
        )
        for system, r in cases:
            modulus = prefix_modulus(system, r)
            self.assertLessEqual(modulus, 10 ** 4)
            for n in range(modulus):
                residue = index_from_prefix(halton_point(system, n), r)
                self.assertEqual((residue.modulus, residue.residue), (modulus, n))

    def test_halton_points_reduce_modulo_prefix(self):
        rng = random.Random(20)
        for system in (halton23(), mixed_system()):
            for _ in range(200):
                n = rng.randrange(4096)
                r = tuple(rng.randrange(0, 6) for _ in range(system.dimension))
                residue = index_from_prefix(halton_point(system, n), r)
                self.assertEqual(residue.residue, n % prefix_modulus(system, r))

    def test_zero_depth_is_trivial(self):
        system = halton23()
        residue = index_from_prefix(halton_point(system, 17), 0)
        self.assertEqual((residue.modulus, residue.residue), (1, 0))

    def test_prefix_consistency(self):
        rng = random.Random(7)
        systems = (halton23(), mixed_system())
        for _ in range(10 ** 3):
            system = rng.choice(systems)
            digits = [
                [rng.randrange(system.radix(i, j)) for j in range(1, system.depth + 1)]
                for i in range(system.dimension)
            ]
            x = ExactPoint.from_digits(system, digits)
            r2 = tuple(rng.randrange(0, system.depth + 1) for _ in range(system.dimension))
            r = tuple(rng.randrange(0, d + 1) for d in r2)
            self.assertTrue(prefix_consistency(x, r, r2))

    def test_consistency_needs_ordered_depths(self):
        x = halton_point(halton23(), 5)
        with self.assertRaises(ConfigurationError):
            prefix_consistency(x, (3, 1), (2, 2))

    def test_depth_beyond_stored_digits(self):
        x = ExactPoint.origin(halton23(), depth=3)
        with self.assertRaises(HorizonOverflowError):
            index_from_prefix(x, 4)

    def test_wrong_number_of_depths(self):
        with self.assertRaises(ConfigurationError):
            index_from_prefix(halton_point(halton23(), 3), (1, 2, 3))


class ShiftIdentityTest(SimpleTestCase):
    """
    Orbit prefixes follow the Halton sequence shifted by the start residue
    """

    def test_origin(self):
        check = shift_identity_check(ExactPoint.origin(halton23()), 3, 500)
        self.assertTrue(check.holds)
        self.assertEqual(check.checked, 501)

    def test_random_starts(self):
        rng = random.Random(3)
        for system in (halton23(), mixed_system()):
            for _ in range(5):
                digits = [
                    [rng.randrange(system.radix(i, j)) for j in range(1, system.depth + 1)]
                    for i in range(system.dimension)
                ]
                x = ExactPoint.from_digits(system, digits)
                r = tuple(rng.randrange(1, 5) for _ in range(system.dimension))
                self.assertTrue(shift_identity_check(x, r, 10 ** 3).holds)

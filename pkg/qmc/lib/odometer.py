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
The odometer map T adds one to the least significant digit and carries
right. T^n(x) has the digits of index(x) + n, so jumps are done with
integer arithmetic instead of n single steps.
"""

import logging
from itertools import islice

from qmc.exceptions import ConfigurationError
from qmc.exceptions import HorizonOverflowError
from qmc.lib.radix import DigitVector
from qmc.lib.radix import ExactPoint
from qmc.lib.radix import cantor_digits

logger = logging.getLogger(__name__)


def _step_vector(vector):
    radices = vector.system.radices[vector.dim]
    digits = list(vector.digits)
    for j, digit in enumerate(digits):
        if digit < radices[j] - 1:
            digits[j] = digit + 1
            return DigitVector(vector.system, vector.dim, tuple(digits))
        digits[j] = 0
    raise HorizonOverflowError(
        "odometer carry leaves depth {} in dimension {}".format(vector.depth, vector.dim)
    )


def odometer_step(x):
    """
    Apply T once to a digit vector, or to every coordinate of a point.
    """
    if isinstance(x, ExactPoint):
        return ExactPoint(x.system, tuple(_step_vector(c) for c in x.coords))
    return _step_vector(x)


def _power_vector(vector, n):
    index = vector.index + n
    if index >= vector.modulus:
        raise HorizonOverflowError(
            "odometer jump of {} leaves depth {} in dimension {}".format(n, vector.depth, vector.dim)
        )
    return cantor_digits(vector.system, index, vector.dim, vector.depth)


def odometer_power(x, n):
    """
    T^n(x) for n >= 0.
    """
    if n < 0:
        raise ConfigurationError("odometer powers are non-negative, got {}".format(n))
    if isinstance(x, ExactPoint):
        return ExactPoint(x.system, tuple(_power_vector(c, n) for c in x.coords))
    return _power_vector(x, n)


def odometer_orbit(x, n):
    """
    The first n states x, T x, ..., T^{n-1} x.
    """
    if isinstance(x, DigitVector):
        orbit = [x] if n > 0 else []
        while len(orbit) < n:
            orbit.append(_step_vector(orbit[-1]))
        return orbit
    return list(islice(OdometerStepper(x), n))


class OdometerStepper:
    """
    Iterator over the orbit of a point, carrying in place.

    The first call to next() yields the starting state; each later call
    steps once. A stepper is owned by a single caller and is left unusable
    after a HorizonOverflowError. With wrap=True a carry out of the stored
    digits is dropped, which walks the orbit of the prefixes alone.
    """

    def __init__(self, start, wrap=False):
        if not isinstance(start, ExactPoint):
            raise ConfigurationError("steppers walk whole points, got {!r}".format(start))
        self.system = start.system
        self.wrap = wrap
        self._digits = [list(c.digits) for c in start.coords]
        self._radices = [self.system.radices[i][:len(c.digits)] for i, c in enumerate(start.coords)]
        self._started = False
        self.position = 0

    def current(self):
        return ExactPoint.from_digits(self.system, [tuple(d) for d in self._digits])

    def step(self):
        for dim, (digits, radices) in enumerate(zip(self._digits, self._radices)):
            for j, digit in enumerate(digits):
                if digit < radices[j] - 1:
                    digits[j] = digit + 1
                    break
                digits[j] = 0
            else:
                if not self.wrap:
                    raise HorizonOverflowError(
                        "odometer carry leaves depth {} in dimension {} after {} steps".format(
                            len(digits), dim, self.position)
                    )
        self.position += 1

    def advance(self, n):
        """
        Jump n steps at once. The next call to next() yields the new state.
        """
        state = self.current()
        if self.wrap:
            point = ExactPoint(self.system, tuple(
                cantor_digits(self.system, (c.index + n) % c.modulus, c.dim, c.depth)
                for c in state.coords
            ))
        else:
            point = odometer_power(state, n)
        self._digits = [list(c.digits) for c in point.coords]
        self.position += n
        self._started = False
        return point

    def __iter__(self):
        return self

    def __next__(self):
        if self._started:
            self.step()
        self._started = True
        return self.current()

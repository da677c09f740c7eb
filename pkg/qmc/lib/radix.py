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
Mixed-radix digit expansions.

A base system fixes, for every dimension i and digit position j >= 1, the
radix p_{i,j}. Radices are read from a finite prefix that repeats with a
period from its tail, so every system is periodic eventually. All values
are kept as exact fractions.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from math import gcd
from math import prod

from qmc.exceptions import ConfigurationError
from qmc.exceptions import HorizonOverflowError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaseSystem:
    """
    Radix schedule for an s-dimensional sequence truncated to depth J.

    Parameters
    ----------
    alphabets : sequence of sequence of int
        Admissible radices per dimension, the order fixes the alphabet index
    prefixes : sequence of sequence of int
        Radices of the leading positions per dimension
    periods : sequence of int
        Length of the repeating tail of each prefix
    depth : int
        Working digit depth J
    """
    alphabets: tuple
    prefixes: tuple
    periods: tuple
    depth: int
    radices: tuple = field(init=False, repr=False, compare=False)
    products: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'alphabets', tuple(tuple(a) for a in self.alphabets))
        object.__setattr__(self, 'prefixes', tuple(tuple(p) for p in self.prefixes))
        object.__setattr__(self, 'periods', tuple(self.periods))
        self._validate()

        radices = tuple(
            tuple(self.radix(i, j) for j in range(1, self.depth + 1))
            for i in range(self.dimension)
        )
        products = []
        for dim_radices in radices:
            running = [1]
            for radix in dim_radices:
                running.append(running[-1] * radix)
            products.append(tuple(running))
        object.__setattr__(self, 'radices', radices)
        object.__setattr__(self, 'products', tuple(products))

    @classmethod
    def constant(cls, bases, depth):
        """
        Classical Halton system: dimension i uses the single radix bases[i].
        """
        return cls(
            alphabets=tuple((b,) for b in bases),
            prefixes=tuple((b,) for b in bases),
            periods=tuple(1 for _ in bases),
            depth=depth,
        )

    def _validate(self):
        s = len(self.alphabets)
        if s < 1:
            raise ConfigurationError("a base system needs at least one dimension")
        if len(self.prefixes) != s or len(self.periods) != s:
            raise ConfigurationError(
                "alphabets, prefixes and periods must describe the same {} dimensions".format(s)
            )
        if not isinstance(self.depth, int) or self.depth < 1:
            raise ConfigurationError("working depth must be a positive integer, got {}".format(self.depth))

        for i, (alphabet, prefix, period) in enumerate(zip(self.alphabets, self.prefixes, self.periods)):
            if not alphabet:
                raise ConfigurationError("dimension {} has an empty alphabet".format(i))
            if any(not isinstance(q, int) or q < 2 for q in alphabet):
                raise ConfigurationError("dimension {} has a radix below 2: {}".format(i, alphabet))
            if len(set(alphabet)) != len(alphabet):
                raise ConfigurationError("dimension {} repeats a radix: {}".format(i, alphabet))
            if not prefix:
                raise ConfigurationError("dimension {} has an empty radix prefix".format(i))
            stray = [q for q in prefix if q not in alphabet]
            if stray:
                raise ConfigurationError(
                    "dimension {} prefix uses radices {} outside its alphabet".format(i, stray)
                )
            if not isinstance(period, int) or not 1 <= period <= len(prefix):
                raise ConfigurationError(
                    "dimension {} period {} must lie in 1..{}".format(i, period, len(prefix))
                )

        for i in range(s):
            for k in range(i + 1, s):
                for q in self.alphabets[i]:
                    for r in self.alphabets[k]:
                        if gcd(q, r) != 1:
                            raise ConfigurationError(
                                "radix {} of dimension {} and radix {} of dimension {} "
                                "are not coprime".format(q, i, r, k)
                            )

    @property
    def dimension(self):
        return len(self.alphabets)

    @property
    def alphabet_sizes(self):
        return tuple(len(a) for a in self.alphabets)

    @property
    def h0(self):
        return max(self.alphabet_sizes)

    @property
    def q0(self):
        return max(max(a) for a in self.alphabets)

    def radix(self, i, j):
        """
        Radix p_{i,j} of dimension i (0-based) at digit position j (1-based).
        Positions past the prefix wrap around its periodic tail.
        """
        if j < 1:
            raise ConfigurationError("digit positions start at 1, got {}".format(j))
        prefix = self.prefixes[i]
        if j <= len(prefix):
            return prefix[j - 1]
        period = self.periods[i]
        return prefix[len(prefix) - period + (j - len(prefix) - 1) % period]

    def product(self, i, r):
        """
        Product of the first r radices of dimension i, P~_{i,r}.
        """
        if r <= self.depth:
            return self.products[i][r]
        return self.products[i][self.depth] * prod(
            self.radix(i, j) for j in range(self.depth + 1, r + 1)
        )

    def required_depth(self, i, n):
        """
        Smallest r with P~_{i,r} > n.
        """
        r, size = 0, 1
        while size <= n:
            r += 1
            size *= self.radix(i, r)
        return r

    def capacity(self, depth=None):
        """
        Number of indices n with every digit expansion inside the depth.
        """
        r = self.depth if depth is None else depth
        return min(self.product(i, r) for i in range(self.dimension))

    def as_document(self):
        return {
            'dimensions': self.dimension,
            'depth': self.depth,
            'dimension': [
                {'alphabet': list(a), 'prefix': list(p), 'period': t}
                for a, p, t in zip(self.alphabets, self.prefixes, self.periods)
            ],
        }


@dataclass(frozen=True)
class DigitVector:
    """
    Digits e_1..e_r of one coordinate, least significant position first.
    """
    system: BaseSystem = field(repr=False)
    dim: int
    digits: tuple

    def __post_init__(self):
        object.__setattr__(self, 'digits', tuple(self.digits))
        if not 0 <= self.dim < self.system.dimension:
            raise ConfigurationError(
                "dimension {} outside 0..{}".format(self.dim, self.system.dimension - 1)
            )
        if len(self.digits) > self.system.depth:
            raise HorizonOverflowError(
                "{} digits exceed the working depth {}".format(len(self.digits), self.system.depth)
            )
        radices = self.system.radices[self.dim]
        for j, digit in enumerate(self.digits):
            if not 0 <= digit < radices[j]:
                raise ConfigurationError(
                    "digit {} at position {} of dimension {} is outside 0..{}".format(
                        digit, j + 1, self.dim, radices[j] - 1)
                )

    @property
    def depth(self):
        return len(self.digits)

    @property
    def modulus(self):
        return self.system.products[self.dim][self.depth]

    @property
    def index(self):
        """
        Integer sum of e_j * P~_{j-1}, the inverse of cantor_digits.
        """
        radices = self.system.radices[self.dim]
        index = 0
        for j in range(self.depth - 1, -1, -1):
            index = index * radices[j] + self.digits[j]
        return index

    @property
    def value(self):
        """
        Exact sum of e_j / P~_j.
        """
        radices = self.system.radices[self.dim]
        numerator = 0
        for j, digit in enumerate(self.digits):
            numerator = numerator * radices[j] + digit
        return Fraction(numerator, self.modulus)

    def truncate(self, r):
        if r > self.depth:
            raise HorizonOverflowError(
                "cannot truncate {} stored digits to depth {}".format(self.depth, r)
            )
        return DigitVector(self.system, self.dim, self.digits[:r])


@dataclass(frozen=True)
class ExactPoint:
    """
    One digit vector per dimension of a base system.
    """
    system: BaseSystem = field(repr=False)
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(self.coords))
        if len(self.coords) != self.system.dimension:
            raise ConfigurationError(
                "point has {} coordinates, the base system has {} dimensions".format(
                    len(self.coords), self.system.dimension)
            )
        for i, coord in enumerate(self.coords):
            if coord.system is not self.system and coord.system != self.system:
                raise ConfigurationError("coordinate {} belongs to another base system".format(i))
            if coord.dim != i:
                raise ConfigurationError("coordinate {} carries dimension {}".format(i, coord.dim))

    @classmethod
    def from_digits(cls, system, digit_lists):
        return cls(system, tuple(DigitVector(system, i, d) for i, d in enumerate(digit_lists)))

    @classmethod
    def origin(cls, system, depth=None):
        r = system.depth if depth is None else depth
        return cls.from_digits(system, [(0,) * r for _ in range(system.dimension)])

    @classmethod
    def from_values(cls, system, values, depth=None):
        """
        Expand rationals coordinate by coordinate, truncated at the depth.
        """
        if len(values) != system.dimension:
            raise ConfigurationError(
                "expected {} coordinates, got {}".format(system.dimension, len(values))
            )
        return cls(system, tuple(cantor_expand(system, v, i, depth) for i, v in enumerate(values)))

    @property
    def values(self):
        return tuple(c.value for c in self.coords)

    @property
    def depths(self):
        return tuple(c.depth for c in self.coords)

    def truncate(self, r):
        depths = r if isinstance(r, (tuple, list)) else (r,) * len(self.coords)
        return ExactPoint(self.system, tuple(c.truncate(d) for c, d in zip(self.coords, depths)))


def cantor_digits(system, n, dim, depth=None):
    """
    Digits of the non-negative integer n in dimension dim, by greedy residue
    extraction over the radices of that dimension.

    Parameters
    ----------
    system : BaseSystem
    n : int
    dim : int
    depth : int, optional
        Number of digits, defaults to the working depth J

    Returns
    -------
    DigitVector
    """
    r = system.depth if depth is None else depth
    if n < 0:
        raise ConfigurationError("indices are non-negative, got {}".format(n))
    if r > system.depth:
        raise HorizonOverflowError(
            "requested depth {} exceeds the working depth {}".format(r, system.depth)
        )
    if n >= system.products[dim][r]:
        raise HorizonOverflowError(
            "index {} needs depth {} in dimension {}, working depth is {}".format(
                n, system.required_depth(dim, n), dim, r)
        )
    digits = []
    for radix in system.radices[dim][:r]:
        n, digit = divmod(n, radix)
        digits.append(digit)
    return DigitVector(system, dim, tuple(digits))


def digits_to_index(vector):
    return vector.index


def radical_inverse(system, n, dim, depth=None):
    """
    phi(n) = sum e_j(n) / P~_j in dimension dim.
    """
    return cantor_digits(system, n, dim, depth).value


def cantor_expand(system, x, dim, depth=None):
    """
    Digit expansion of a rational x in [0, 1) by repeated multiply and
    floor, truncated at the depth. The dropped residual lies in
    [0, 1/P~_r).
    """
    r = system.depth if depth is None else depth
    if r > system.depth:
        raise HorizonOverflowError(
            "requested depth {} exceeds the working depth {}".format(r, system.depth)
        )
    try:
        value = Fraction(x)
    except (TypeError, ValueError) as err:
        raise ConfigurationError("cannot read {!r} as a rational number".format(x)) from err
    if not 0 <= value < 1:
        raise ConfigurationError("coordinate {} lies outside [0, 1)".format(value))

    digits = []
    for radix in system.radices[dim][:r]:
        value *= radix
        digit = value.numerator // value.denominator
        digits.append(digit)
        value -= digit
    return DigitVector(system, dim, tuple(digits))


def truncate(x, r):
    """
    Keep the first r digits of a digit vector, or of every coordinate of a
    point.
    """
    return x.truncate(r)

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
Classical and generalized Halton points.

The generalized sequence applies a digit permutation sigma_{i,j} to every
digit of the odometer orbit started at x0:

    H_{x0, Sigma}(n) = Sigma(T^n(x0))

and the classical sequence is the case x0 = 0 with identity permutations.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from typing import NamedTuple

from qmc.exceptions import ConfigurationError
from qmc.exceptions import HorizonOverflowError
from qmc.lib.export import render_decimal
from qmc.lib.odometer import OdometerStepper
from qmc.lib.odometer import odometer_power
from qmc.lib.radix import DigitVector
from qmc.lib.radix import ExactPoint
from qmc.lib.radix import cantor_digits

logger = logging.getLogger(__name__)


def _invert(table):
    inverse = [0] * len(table)
    for digit, image in enumerate(table):
        inverse[image] = digit
    return tuple(inverse)


@dataclass(frozen=True)
class PermutationFamily:
    """
    Digit permutations sigma_{i,j} of {0..p_{i,j}-1} for every dimension i
    and position j <= J. tables[i][j - 1] maps a digit to its image.
    """
    system: object = field(repr=False)
    tables: tuple
    inverses: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        tables = tuple(tuple(tuple(t) for t in dim_tables) for dim_tables in self.tables)
        object.__setattr__(self, 'tables', tables)
        if len(tables) != self.system.dimension:
            raise ConfigurationError(
                "permutation family covers {} dimensions, the base system has {}".format(
                    len(tables), self.system.dimension)
            )
        for i, dim_tables in enumerate(tables):
            if len(dim_tables) != self.system.depth:
                raise ConfigurationError(
                    "dimension {} has {} permutations, the working depth is {}".format(
                        i, len(dim_tables), self.system.depth)
                )
            for j, table in enumerate(dim_tables):
                radix = self.system.radices[i][j]
                if sorted(table) != list(range(radix)):
                    raise ConfigurationError(
                        "permutation at dimension {} position {} is not a permutation "
                        "of 0..{}: {}".format(i, j + 1, radix - 1, list(table))
                    )
        object.__setattr__(self, 'inverses', tuple(
            tuple(_invert(t) for t in dim_tables) for dim_tables in tables
        ))

    @classmethod
    def identity(cls, system):
        return cls(system, tuple(
            tuple(tuple(range(radix)) for radix in dim_radices)
            for dim_radices in system.radices
        ))

    @classmethod
    def from_named(cls, system, named):
        """
        One table per radix, shared by every position using that radix.
        Radices without a table keep the identity.
        """
        named = {int(radix): tuple(table) for radix, table in named.items()}
        return cls(system, tuple(
            tuple(named.get(radix, tuple(range(radix))) for radix in dim_radices)
            for dim_radices in system.radices
        ))

    @classmethod
    def from_positions(cls, system, positions):
        """
        Explicit tables per dimension and position. A dimension listing fewer
        tables than the depth cycles through them.
        """
        if len(positions) != system.dimension:
            raise ConfigurationError(
                "expected tables for {} dimensions, got {}".format(system.dimension, len(positions))
            )
        tables = []
        for i, dim_positions in enumerate(positions):
            if not dim_positions:
                raise ConfigurationError("dimension {} lists no permutations".format(i))
            tables.append(tuple(
                tuple(dim_positions[j % len(dim_positions)]) for j in range(system.depth)
            ))
        return cls(system, tuple(tables))

    @property
    def is_identity(self):
        return all(
            table == tuple(range(len(table)))
            for dim_tables in self.tables for table in dim_tables
        )

    def sigma(self, i, j, digit):
        return self.tables[i][j - 1][digit]

    def sigma_inverse(self, i, j, digit):
        return self.inverses[i][j - 1][digit]

    def difference_residue(self, i, j):
        """
        a_{i,j} = sigma^{-1}(0) - sigma^{-1}(1) reduced into 1..p_{i,j}-1.
        """
        inverse = self.inverses[i][j - 1]
        return (inverse[0] - inverse[1]) % len(inverse)

    def inverse(self):
        return PermutationFamily(self.system, self.inverses)

    def as_document(self):
        if self.is_identity:
            return {'kind': 'identity'}
        return {
            'kind': 'explicit',
            'dimension': [
                {'positions': [list(t) for t in dim_tables]} for dim_tables in self.tables
            ],
        }


class PointRow(NamedTuple):
    n: int
    point: ExactPoint
    exact: tuple
    decimal: tuple


def scramble(x, family, inverse=False):
    """
    Apply sigma_{i,j} (or its inverse) to every stored digit of x.
    """
    if x.system is not family.system and x.system != family.system:
        raise ConfigurationError("point and permutation family use different base systems")
    if family.is_identity:
        return x
    tables = family.inverses if inverse else family.tables
    return ExactPoint(x.system, tuple(
        DigitVector(x.system, i, tuple(tables[i][j][d] for j, d in enumerate(c.digits)))
        for i, c in enumerate(x.coords)
    ))


def halton_point(system, n, depth=None):
    """
    Classical point H(n) = (phi_1(n), ..., phi_s(n)) as digit vectors.
    """
    return ExactPoint(system, tuple(
        cantor_digits(system, n, i, depth) for i in range(system.dimension)
    ))


def generalized_point(n, x0, family):
    """
    H_{x0, Sigma}(n) = Sigma(T^n(x0)).
    """
    return scramble(odometer_power(x0, n), family)


def generalized_orbit(x0, family, start=0):
    """
    Lazily yield H_{x0, Sigma}(start), H_{x0, Sigma}(start + 1), ...
    """
    stepper = OdometerStepper(x0)
    if start:
        stepper.advance(start)
    for state in stepper:
        yield scramble(state, family)


def generate_block(system, start, count, x0=None, family=None, precision=None):
    """
    Rows for indices start..start+count-1 with exact and decimal coordinates.

    Parameters
    ----------
    system : BaseSystem
    start : int
    count : int
    x0 : ExactPoint, optional
        Orbit start, defaults to the origin
    family : PermutationFamily, optional
        Defaults to the identity family

    Returns
    -------
    list of PointRow
    """
    if start < 0 or count < 0:
        raise ConfigurationError("start and count must be non-negative")
    if x0 is None:
        if start + count > system.capacity():
            raise HorizonOverflowError(
                "indices up to {} do not fit the working depth {} (capacity {})".format(
                    start + count - 1, system.depth, system.capacity())
            )
        x0 = ExactPoint.origin(system)
    if family is None:
        family = PermutationFamily.identity(system)

    rows = []
    orbit = generalized_orbit(x0, family, start)
    for offset in range(count):
        point = next(orbit)
        exact = point.values
        rows.append(PointRow(
            n=start + offset,
            point=point,
            exact=exact,
            decimal=tuple(render_decimal(v, precision) for v in exact),
        ))
    logger.debug("Generated %d points from index %d", count, start)
    return rows

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
Chinese remainder index of a point prefix.

For depths r = (r_1, ..., r_s) the digit prefixes of x determine a unique
residue x_r modulo P_r = prod_i P~_{i,r_i} such that the Halton point
H(x_r) shares those prefixes. The residue is assembled with explicit
cofactors M_i = (P_r / P~_{i,r_i})^{-1} mod P~_{i,r_i}.
"""

import logging
from dataclasses import dataclass
from math import prod

from qmc.exceptions import ConfigurationError
from qmc.exceptions import HorizonOverflowError
from qmc.lib.odometer import OdometerStepper
from qmc.lib.radix import cantor_digits

logger = logging.getLogger(__name__)


def extended_gcd(a, b):
    """
    Return (g, u, v) with a*u + b*v = g = gcd(a, b).
    """
    u0, v0, u1, v1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return a, u0, v0


def modular_inverse(a, m):
    """
    Inverse of a modulo m in 0..m-1. The inverse modulo 1 is 0.
    """
    if m < 1:
        raise ConfigurationError("modulus must be positive, got {}".format(m))
    if m == 1:
        return 0
    g, u, _ = extended_gcd(a % m, m)
    if g != 1:
        raise ConfigurationError("{} has no inverse modulo {}".format(a, m))
    return u % m


def _depths(system, r):
    if isinstance(r, int):
        return (r,) * system.dimension
    depths = tuple(r)
    if len(depths) != system.dimension:
        raise ConfigurationError(
            "expected {} depths, got {}".format(system.dimension, len(depths))
        )
    return depths


def prefix_modulus(system, r):
    return prod(system.product(i, d) for i, d in enumerate(_depths(system, r)))


def cofactor(system, i, r):
    """
    M_i = (P_r / P~_{i,r_i})^{-1} mod P~_{i,r_i}.
    """
    depths = _depths(system, r)
    own = system.product(i, depths[i])
    return modular_inverse(prefix_modulus(system, depths) // own, own)


@dataclass(frozen=True)
class PrefixResidue:
    depths: tuple
    modulus: int
    residue: int
    cofactors: tuple


def index_from_prefix(x, r):
    """
    The residue x_r in 0..P_r-1 whose Halton point shares the depth-r
    prefixes of x.

    Parameters
    ----------
    x : ExactPoint
    r : int or tuple of int
        One depth for all dimensions or one per dimension

    Returns
    -------
    PrefixResidue
    """
    system = x.system
    depths = _depths(system, r)
    for i, (coord, depth) in enumerate(zip(x.coords, depths)):
        if depth < 0:
            raise ConfigurationError("depths are non-negative, got {}".format(depth))
        if depth > coord.depth:
            raise HorizonOverflowError(
                "dimension {} stores {} digits, prefix depth {} requested".format(i, coord.depth, depth)
            )

    modulus = prefix_modulus(system, depths)
    cofactors = tuple(cofactor(system, i, depths) for i in range(system.dimension))
    residue = 0
    for i, (coord, depth) in enumerate(zip(x.coords, depths)):
        own = system.product(i, depth)
        residue += cofactors[i] * (modulus // own) * coord.truncate(depth).index
    return PrefixResidue(depths=depths, modulus=modulus, residue=residue % modulus, cofactors=cofactors)


def prefix_consistency(x, r, r2):
    """
    x_{r2} reduces to x_r modulo P_r whenever r <= r2 componentwise.
    """
    low = index_from_prefix(x, r)
    high = index_from_prefix(x, r2)
    if any(a > b for a, b in zip(low.depths, high.depths)):
        raise ConfigurationError("prefix depths {} do not lie below {}".format(low.depths, high.depths))
    return high.residue % low.modulus == low.residue


@dataclass(frozen=True)
class ShiftCheck:
    holds: bool
    checked: int
    counterexample: dict = None


def shift_identity_check(x, r, n_max, w_depths=None):
    """
    Check that T^n(x) and H(n + W) agree on their depth-r prefixes for
    n = 0..n_max, where W is the residue of x at depths w_depths (r by
    default).
    """
    system = x.system
    depths = _depths(system, r)
    offset = index_from_prefix(x, depths if w_depths is None else w_depths).residue

    stepper = OdometerStepper(x.truncate(depths), wrap=True)
    for n in range(n_max + 1):
        orbit_prefix = next(stepper)
        for i, depth in enumerate(depths):
            shifted = (n + offset) % system.product(i, depth)
            halton_digits = cantor_digits(system, shifted, i, depth).digits
            if orbit_prefix.coords[i].digits != halton_digits:
                logger.warning("Shift identity fails at n=%d in dimension %d", n, i)
                return ShiftCheck(holds=False, checked=n + 1, counterexample={
                    'n': n,
                    'dimension': i,
                    'orbit_digits': list(orbit_prefix.coords[i].digits),
                    'halton_digits': list(halton_digits),
                })
    return ShiftCheck(holds=True, checked=n_max + 1)

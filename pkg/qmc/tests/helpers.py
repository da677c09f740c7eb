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

from qmc.lib.halton import PermutationFamily
from qmc.lib.radix import BaseSystem
from qmc.lib.witness import build_boxes
from qmc.lib.witness import select_tau


def halton23(depth=12):
    return BaseSystem.constant((2, 3), depth)


def mixed_system(depth=12):
    """
    Dimension 0 alternates radices 2 and 3, dimension 1 uses 5.
    """
    return BaseSystem(alphabets=((2, 3), (5,)), prefixes=((2, 3), (5,)), periods=(2, 1), depth=depth)


def worked_witness(mfrak=6, family=None, x=None, depth=12):
    """
    Plan and boxes of the Halton (2, 3) witness used across the tests:
    m = 3, P_m = 1728 and v_m = 1066 for the identity family at the origin.
    """
    system = halton23(depth)
    family = PermutationFamily.identity(system) if family is None else family
    plan = select_tau(system, family, mfrak)
    return plan, build_boxes(plan, family, x)

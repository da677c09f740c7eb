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

import mpmath
from rest_framework import serializers

from qmc.exceptions import ConfigurationError
from qmc.lib.export import parse_fraction
from qmc.lib.export import render_fraction


class FractionField(serializers.Field):
    """
    Exact rational written as "p/q" (or an integer).
    """

    def to_representation(self, value):
        return render_fraction(value)

    def to_internal_value(self, data):
        try:
            return parse_fraction(data)
        except ConfigurationError as err:
            raise serializers.ValidationError(str(err.detail)) from err


class MpfField(serializers.Field):
    """
    High precision decimal rendered to a fixed number of significant digits.
    """

    def __init__(self, digits=20, **kwargs):
        self.digits = digits
        kwargs.setdefault('read_only', True)
        super().__init__(**kwargs)

    def to_representation(self, value):
        if isinstance(value, Fraction):
            value = mpmath.mpf(value.numerator) / value.denominator
        return mpmath.nstr(value, self.digits)

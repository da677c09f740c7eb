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

from rest_framework import serializers

from qmc.serializers.fields import FractionField
from qmc.serializers.fields import MpfField


class CheckSerializer(serializers.Serializer):
    """
    One verified identity or inequality with both sides as exact rationals.
    """
    name = serializers.CharField()
    holds = serializers.BooleanField()
    relation = serializers.CharField()
    lhs = serializers.CharField(allow_null=True)
    rhs = serializers.CharField(allow_null=True)
    detail = serializers.CharField(allow_blank=True, required=False)


class WitnessPlanSerializer(serializers.Serializer):
    """
    Every field of a witness plan. Dimensions are listed in order, digit
    positions are 1-based.
    """
    mfrak = serializers.IntegerField()
    alphabet_index = serializers.ListField(child=serializers.IntegerField())
    difference = serializers.ListField(child=serializers.IntegerField())
    positions = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    position_counts = serializers.ListField(child=serializers.IntegerField())
    bases = serializers.ListField(child=serializers.IntegerField())
    p0 = serializers.IntegerField()
    complements = serializers.ListField(child=serializers.IntegerField())
    residue_class = serializers.ListField(child=serializers.IntegerField())
    class_counts = serializers.ListField(child=serializers.IntegerField())
    selected = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    m = serializers.IntegerField()
    tau = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    level_moduli = serializers.SerializerMethodField()
    multipliers = serializers.ListField(child=serializers.IntegerField())
    gcds = serializers.ListField(child=serializers.IntegerField())
    reduced_bases = serializers.ListField(child=serializers.IntegerField())
    reduced_difference = serializers.ListField(child=serializers.IntegerField())
    numerators = serializers.ListField(child=serializers.IntegerField())

    def get_level_moduli(self, plan):
        return [
            [plan.level_modulus(i, k) for k in range(1, plan.m + 1)]
            for i in range(plan.s)
        ]


class WitnessBoxesSerializer(serializers.Serializer):
    boundary = serializers.ListField(child=FractionField())
    boundary_digits = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    partial_sums = serializers.ListField(child=serializers.ListField(child=FractionField()))
    preimage = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    preimage_zero = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    volume = FractionField()
    preimage_residue = serializers.IntegerField()
    offset = serializers.IntegerField()
    start = serializers.IntegerField()
    point = serializers.SerializerMethodField()
    boxes = serializers.SerializerMethodField()

    def get_point(self, boxes):
        return {
            'digits': [list(c.digits) for c in boxes.point.coords],
            'values': [str(v) for v in boxes.point.values],
        }

    def get_boxes(self, boxes):
        return [
            {
                'k': list(k),
                'lower': [str(v) for v in box.lower],
                'upper': [str(v) for v in box.upper],
                'modulus': boxes.moduli[k],
                'shift': boxes.shifts[k],
            }
            for k, box in boxes.boxes.items()
        ]


class Lemma2Serializer(serializers.Serializer):
    alpha = FractionField()
    fractional_part = FractionField()
    distance = FractionField()
    distance_bound = FractionField()
    volume = FractionField()
    alpha_m = FractionField()
    bound = FractionField()
    hypothesis_met = serializers.BooleanField()
    not_half = serializers.BooleanField()
    distance_holds = serializers.BooleanField()
    bound_holds = serializers.BooleanField()
    satisfied = serializers.BooleanField()


class ConstantsSerializer(serializers.Serializer):
    s = serializers.IntegerField()
    h0 = serializers.IntegerField()
    q0 = serializers.IntegerField()
    precision = serializers.IntegerField()
    log2_q0 = MpfField()
    c1 = MpfField()
    c = MpfField()
    instance = MpfField(allow_null=True)
    instance_exceeds_c1 = serializers.BooleanField()


class ChainSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    alpha = FractionField()
    window_max = FractionField()
    window_argmax = serializers.IntegerField()
    prefix_max = FractionField()
    prefix_argmax = serializers.IntegerField()
    prefix_length = serializers.IntegerField()
    size_ok = serializers.BooleanField()
    hypothesis_met = serializers.BooleanField()
    log2_n = MpfField()
    final_bound = MpfField()
    average_le_window = serializers.BooleanField()
    window_le_prefix = serializers.BooleanField()
    holds = serializers.BooleanField()

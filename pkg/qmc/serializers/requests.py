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

from qmc.exceptions import QmcException
from qmc.lib.config import load_preset
from qmc.reports import VERIFY_MODES
from qmc.serializers.config import resolve_run_config
from qmc.serializers.fields import FractionField


class DocumentField(serializers.JSONField):
    """
    A TOML-shaped document given inline as a JSON object, or the name of a
    shipped preset. Paths are not accepted over the API.
    """

    def __init__(self, kind, **kwargs):
        self.kind = kind
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        data = super().to_internal_value(data)
        if isinstance(data, str):
            try:
                return load_preset(data, self.kind)
            except QmcException as err:
                raise serializers.ValidationError(str(err.detail)) from err
        if not isinstance(data, dict):
            raise serializers.ValidationError("expected an object or a preset name")
        return data


class RunRequestSerializer(serializers.Serializer):
    """
    Base system, permutation family and orbit start shared by every
    computation endpoint.
    """
    bases = DocumentField('bases')
    perms = DocumentField('perms', required=False)
    x = serializers.ListField(child=serializers.CharField(), required=False)
    x_digits = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)),
        required=False,
    )

    def validate(self, attrs):
        try:
            attrs['config'] = resolve_run_config(attrs['bases'], attrs.get('perms'))
        except QmcException as err:
            raise serializers.ValidationError({'config': str(err.detail)}) from err
        return attrs


class PointsRequestSerializer(RunRequestSerializer):
    start = serializers.IntegerField(min_value=0, default=0)
    count = serializers.IntegerField(min_value=0)
    precision = serializers.IntegerField(min_value=1, max_value=100, required=False)


class DiscrepancyRequestSerializer(serializers.Serializer):
    """
    Either an explicit point list or a generated block.
    """
    points = serializers.ListField(
        child=serializers.ListField(child=FractionField(), min_length=1),
        required=False,
    )
    bases = DocumentField('bases', required=False)
    perms = DocumentField('perms', required=False)
    start = serializers.IntegerField(min_value=0, default=0)
    count = serializers.IntegerField(min_value=1, required=False)
    precision = serializers.IntegerField(min_value=1, max_value=100, required=False)

    def validate(self, attrs):
        if 'points' in attrs:
            return attrs
        if 'bases' not in attrs or 'count' not in attrs:
            raise serializers.ValidationError("give either points or bases with a count")
        try:
            attrs['config'] = resolve_run_config(attrs['bases'], attrs.get('perms'))
        except QmcException as err:
            raise serializers.ValidationError({'config': str(err.detail)}) from err
        return attrs


class WitnessRequestSerializer(RunRequestSerializer):
    mfrak = serializers.IntegerField(min_value=1, required=False)
    n = serializers.IntegerField(min_value=1, required=False)
    cap = serializers.IntegerField(min_value=1, required=False)

    def validate(self, attrs):
        if ('mfrak' in attrs) == ('n' in attrs):
            raise serializers.ValidationError("give exactly one of mfrak or n")
        return super().validate(attrs)


class VerifyRequestSerializer(WitnessRequestSerializer):
    mode = serializers.ChoiceField(choices=VERIFY_MODES)
    n_max = serializers.IntegerField(min_value=1, required=False)

    def task_kwargs(self):
        """
        JSON-ready keyword arguments for the verify_run task.
        """
        data = self.validated_data
        kwargs = {
            'mode': data['mode'],
            'bases': data['bases'],
            'perms': data.get('perms'),
        }
        for key in ('mfrak', 'n', 'n_max', 'cap', 'x', 'x_digits'):
            if key in data:
                kwargs[key] = data[key]
        return kwargs

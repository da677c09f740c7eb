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

from qmc.exceptions import ConfigurationError
from qmc.exceptions import QmcException
from qmc.lib.config import IDENTITY_PERMS
from qmc.lib.config import RunConfig
from qmc.lib.halton import PermutationFamily
from qmc.lib.radix import BaseSystem


class DimensionSerializer(serializers.Serializer):
    """
    Radix schedule of one dimension. The prefix defaults to the alphabet and
    the period to the whole prefix.
    """
    alphabet = serializers.ListField(child=serializers.IntegerField(min_value=2), min_length=1)
    prefix = serializers.ListField(child=serializers.IntegerField(min_value=2), min_length=1, required=False)
    period = serializers.IntegerField(min_value=1, required=False)

    def validate(self, attrs):
        attrs.setdefault('prefix', list(attrs['alphabet']))
        attrs.setdefault('period', len(attrs['prefix']))
        return attrs


class BaseSystemSerializer(serializers.Serializer):
    """
    Base system document, see docs/FORMATS.md
    """
    dimensions = serializers.IntegerField(min_value=1)
    depth = serializers.IntegerField(min_value=1)
    dimension = DimensionSerializer(many=True)

    def validate(self, attrs):
        if len(attrs['dimension']) != attrs['dimensions']:
            raise serializers.ValidationError(
                "declares {} dimensions but lists {}".format(attrs['dimensions'], len(attrs['dimension']))
            )
        try:
            attrs['system'] = self._build(attrs)
        except QmcException as err:
            raise serializers.ValidationError(str(err.detail)) from err
        return attrs

    @staticmethod
    def _build(attrs):
        return BaseSystem(
            alphabets=[d['alphabet'] for d in attrs['dimension']],
            prefixes=[d['prefix'] for d in attrs['dimension']],
            periods=[d['period'] for d in attrs['dimension']],
            depth=attrs['depth'],
        )

    def create(self, validated_data):
        return validated_data['system']


class PositionTablesSerializer(serializers.Serializer):
    positions = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)),
        min_length=1,
    )


class PermutationFamilySerializer(serializers.Serializer):
    """
    Permutation family document. Needs the base system in the serializer
    context under 'system'.
    """
    KINDS = ('identity', 'named', 'explicit')

    kind = serializers.ChoiceField(choices=KINDS, default='identity')
    tables = serializers.DictField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0)),
        required=False,
    )
    dimension = PositionTablesSerializer(many=True, required=False)

    def validate(self, attrs):
        system = self.context['system']
        kind = attrs['kind']
        try:
            if kind == 'identity':
                family = PermutationFamily.identity(system)
            elif kind == 'named':
                if 'tables' not in attrs:
                    raise serializers.ValidationError("named permutations need a [tables] section")
                family = PermutationFamily.from_named(system, attrs['tables'])
            else:
                if 'dimension' not in attrs:
                    raise serializers.ValidationError("explicit permutations need [[dimension]] entries")
                family = PermutationFamily.from_positions(
                    system, [d['positions'] for d in attrs['dimension']])
        except (QmcException, ValueError) as err:
            detail = err.detail if isinstance(err, QmcException) else err
            raise serializers.ValidationError(str(detail)) from err
        attrs['family'] = family
        return attrs

    def create(self, validated_data):
        return validated_data['family']


def _flatten(errors):
    if isinstance(errors, dict):
        return '; '.join('{}: {}'.format(key, _flatten(value)) for key, value in errors.items())
    if isinstance(errors, list):
        return '; '.join(_flatten(e) for e in errors if e)
    return str(errors)


def resolve_run_config(bases_document, perms_document=None):
    """
    Validate a base system document and a permutation document into a
    RunConfig, raising ConfigurationError with every validation message.
    """
    bases = BaseSystemSerializer(data=bases_document)
    if not bases.is_valid():
        raise ConfigurationError("invalid base system: {}".format(_flatten(bases.errors)))
    system = bases.save()

    perms_document = IDENTITY_PERMS if perms_document is None else perms_document
    perms = PermutationFamilySerializer(data=perms_document, context={'system': system})
    if not perms.is_valid():
        raise ConfigurationError("invalid permutation family: {}".format(_flatten(perms.errors)))
    family = perms.save()

    return RunConfig(system=system, family=family,
                     bases_document=bases_document, perms_document=perms_document)

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
Run configuration documents.

Base systems and permutation families are read from TOML documents, either
a preset shipped under qmc/fixtures or a file path. Validation into library
objects happens in qmc.serializers.config.
"""

import logging

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path

from django.conf import settings

from qmc.exceptions import ConfigurationError
from qmc.lib.export import document_digest
from qmc.lib.export import parse_fraction
from qmc.lib.radix import ExactPoint

logger = logging.getLogger(__name__)

PRESET_DIR = Path(__file__).resolve().parent.parent / 'fixtures'

IDENTITY_PERMS = {'kind': 'identity'}


def preset_dir():
    """
    Preset directory from QMC_PRESET_DIR, the shipped fixtures otherwise.
    """
    if settings.configured:
        return Path(getattr(settings, 'QMC_PRESET_DIR', PRESET_DIR))
    return PRESET_DIR


def preset_names(kind):
    return sorted(p.stem for p in (preset_dir() / kind).glob('*.toml'))


def _read_toml(path, kind):
    try:
        with path.open('rb') as handle:
            document = tomllib.load(handle)
    except tomllib.TOMLDecodeError as err:
        raise ConfigurationError("cannot parse {}: {}".format(path, err)) from err
    logger.debug("Loaded %s document from %s", kind, path)
    return document


def load_preset(name, kind):
    """
    Read a shipped preset by name. Only names listed by preset_names are
    accepted, never a path.
    """
    names = preset_names(kind)
    if name not in names:
        raise ConfigurationError(
            "{!r} is not a {} preset ({})".format(name, kind, ', '.join(names))
        )
    return _read_toml(preset_dir() / kind / '{}.toml'.format(name), kind)


def load_document(value, kind):
    """
    Read a TOML document given as a preset name or a path.

    Parameters
    ----------
    value : str
        Preset name (e.g. 'halton23') or path to a .toml file
    kind : str
        'bases' or 'perms', the preset sub-directory

    Returns
    -------
    dict
    """
    path = Path(value)
    if path.is_file():
        return _read_toml(path, kind)
    if value not in preset_names(kind):
        raise ConfigurationError(
            "{!r} is neither a file nor a {} preset ({})".format(
                value, kind, ', '.join(preset_names(kind)))
        )
    return load_preset(value, kind)


def parse_point(system, values=None, digits=None):
    """
    Build an orbit start from rationals or digit lists, the origin when
    neither is given.

    values is a comma separated string or a list of rationals; digits a
    string like '1,0,1;2,0' (dimensions separated by ';') or a list of
    lists. Digit lists shorter than the working depth are padded with 0.
    """
    if values is not None and digits is not None:
        raise ConfigurationError("give the start point as values or as digits, not both")
    if values is not None:
        if isinstance(values, str):
            values = [v for v in values.split(',') if v.strip()]
        return ExactPoint.from_values(system, [parse_fraction(v) for v in values])
    if digits is not None:
        if isinstance(digits, str):
            try:
                digits = [
                    [int(d) for d in chunk.split(',') if d.strip()]
                    for chunk in digits.split(';')
                ]
            except ValueError as err:
                raise ConfigurationError("cannot read start digits {!r}".format(digits)) from err
        digits = [list(d) for d in digits]
        if len(digits) != system.dimension:
            raise ConfigurationError(
                "expected digits for {} dimensions, got {}".format(system.dimension, len(digits))
            )
        if any(len(d) > system.depth for d in digits):
            raise ConfigurationError("start digits exceed the working depth {}".format(system.depth))
        return ExactPoint.from_digits(system, [d + [0] * (system.depth - len(d)) for d in digits])
    return ExactPoint.origin(system)


@dataclass(frozen=True)
class RunConfig:
    """
    Validated base system and permutation family with the documents they
    were built from.
    """
    system: object = field(repr=False)
    family: object = field(repr=False)
    bases_document: dict = field(compare=False)
    perms_document: dict = field(compare=False)

    @property
    def document(self):
        return {
            'bases': self.system.as_document(),
            'perms': self.family.as_document(),
        }

    @property
    def digest(self):
        return document_digest(self.document)

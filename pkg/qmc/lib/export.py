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
Rendering and file formats: decimal strings, configuration digests and the
points CSV / JSON layouts described in docs/FORMATS.md.
"""

import csv
import hashlib
import json
import logging
from decimal import Decimal
from decimal import ROUND_HALF_EVEN
from decimal import localcontext
from fractions import Fraction

from qmc.exceptions import ConfigurationError
from qmc.lib.limits import setting

logger = logging.getLogger(__name__)

DIGEST_PREFIX = '# bases-digest: '


def render_decimal(value, precision=None):
    """
    Round an exact fraction to the given number of significant digits,
    half to even, in plain positional notation.
    """
    digits = setting('QMC_DECIMAL_PRECISION') if precision is None else precision
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        rounded = Decimal(value.numerator) / Decimal(value.denominator)
    return format(rounded, 'f')


def render_fraction(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def parse_fraction(text):
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as err:
        raise ConfigurationError("cannot read {!r} as a rational number".format(text)) from err


def document_digest(document):
    """
    sha256 of the canonical JSON form of a resolved configuration document.
    """
    canonical = json.dumps(document, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def write_points_csv(rows, stream, digest, dimension, columns='exact', precision=None):
    """
    Write generated rows as CSV: a digest comment line, a header and one
    line per index.

    Parameters
    ----------
    rows : iterable of PointRow
    stream : text file object
    digest : str
        Digest of the resolved configuration
    dimension : int
    columns : str
        'exact' for p/q fractions, 'decimal' for rounded decimals
    """
    if columns not in ('exact', 'decimal'):
        raise ConfigurationError("unknown column format {!r}".format(columns))
    stream.write("{}{}\n".format(DIGEST_PREFIX, digest))
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(['n'] + ['x_{}'.format(i + 1) for i in range(dimension)])
    for row in rows:
        if columns == 'exact':
            cells = [render_fraction(v) for v in row.exact]
        else:
            cells = [render_decimal(v, precision) for v in row.exact]
        writer.writerow([row.n] + cells)


def points_document(rows, config, digest, precision=None, run=None):
    return {
        'config': config,
        'digest': digest,
        'run': run,
        'points': [
            {
                'n': row.n,
                'exact': [render_fraction(v) for v in row.exact],
                'decimal': [render_decimal(v, precision) for v in row.exact],
            }
            for row in rows
        ],
    }


def read_points_csv(stream):
    """
    Read a points CSV back into tuples of fractions. Comment lines are
    skipped and a leading 'n' column is dropped.
    """
    lines = [line for line in stream if line.strip() and not line.startswith('#')]
    reader = csv.reader(lines)
    points = []
    has_index = False
    for number, record in enumerate(reader):
        if number == 0 and record and record[0].strip() == 'n':
            has_index = True
            continue
        if number == 0 and record and not _is_number(record[0]):
            continue
        cells = record[1:] if has_index else record
        if not cells:
            raise ConfigurationError("points row {} has no coordinates".format(number + 1))
        points.append(tuple(parse_fraction(c) for c in cells))

    if points and len({len(p) for p in points}) != 1:
        raise ConfigurationError("points rows have differing dimensions")
    logger.debug("Read %d points", len(points))
    return points


def _is_number(text):
    try:
        Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        return False
    return True

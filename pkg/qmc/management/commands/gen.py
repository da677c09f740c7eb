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

import io
import logging

from qmc.exceptions import ConfigurationError
from qmc.lib.export import write_points_csv
from qmc.lib.halton import generate_block
from qmc.management.base import QmcCommand
from qmc.reports import points_report

logger = logging.getLogger(__name__)


class Command(QmcCommand):
    help = 'Generate a block of generalized Halton points as CSV or JSON'

    def add_arguments(self, parser):
        self.add_config_arguments(parser)
        parser.add_argument('--start', type=int, default=0, help='first index n0')
        parser.add_argument('--count', type=int, required=True, help='number of points')
        parser.add_argument('--format', choices=('csv', 'json'), default='csv')
        parser.add_argument('--columns', choices=('exact', 'decimal'), default='exact',
                            help='CSV coordinates as p/q fractions or rounded decimals')
        parser.add_argument('--precision', type=int, help='significant digits of decimals')
        self.add_output_arguments(parser)

    def run(self, **options):
        config, x0 = self.load_config(options)
        if options['count'] < 0 or options['start'] < 0:
            raise ConfigurationError("start and count must be non-negative")

        if options['format'] == 'json':
            self.emit_json(
                points_report(config, options['start'], options['count'], x0, options['precision']),
                options['output'],
            )
        else:
            rows = generate_block(config.system, options['start'], options['count'], x0,
                                  config.family, options['precision'])
            buffer = io.StringIO()
            write_points_csv(rows, buffer, config.digest, config.system.dimension,
                             options['columns'], options['precision'])
            self.emit(buffer.getvalue(), options['output'])
        logger.info("Generated %d points", options['count'])

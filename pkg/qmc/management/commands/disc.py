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

from qmc.exceptions import ConfigurationError
from qmc.lib.export import read_points_csv
from qmc.management.base import QmcCommand
from qmc.reports import discrepancy_report
from qmc.reports import generated_points
from qmc.reports import run_section


class Command(QmcCommand):
    help = 'Exact star discrepancy of a point file or of a generated block'

    def add_arguments(self, parser):
        parser.add_argument('--points', help='points CSV as written by gen')
        self.add_config_arguments(parser, required=False)
        parser.add_argument('--start', type=int, default=0)
        parser.add_argument('--count', type=int, help='number of generated points')
        parser.add_argument('--cap', type=int, help='largest accepted N^s * s')
        parser.add_argument('--precision', type=int, help='significant digits of decimals')
        self.add_output_arguments(parser)

    def run(self, **options):
        if options['points']:
            try:
                with open(options['points'], encoding='utf-8') as handle:
                    points = read_points_csv(handle)
            except OSError as err:
                raise ConfigurationError("cannot read {}: {}".format(options['points'], err)) from err
            config = None
            run = {'points': options['points'], 'precision': options['precision'], 'cap': options['cap']}
        elif options['bases'] and options['count'] is not None:
            config, x0 = self.load_config(options)
            points = generated_points(config, options['start'], options['count'], x0)
            run = run_section(x0, start=options['start'], count=options['count'],
                              precision=options['precision'], cap=options['cap'])
        else:
            raise ConfigurationError("give --points, or --bases with --count")

        report = discrepancy_report(points, options['precision'], options['cap'], config, run)
        self.emit_json(report, options['output'])

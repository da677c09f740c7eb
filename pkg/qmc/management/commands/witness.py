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
from qmc.exceptions import IdentityFailure
from qmc.management.base import QmcCommand
from qmc.reports import witness_report


class Command(QmcCommand):
    help = 'Build the lower-bound witness (plan, boxes, closed forms) as a JSON report'

    def add_arguments(self, parser):
        self.add_config_arguments(parser)
        horizon = parser.add_mutually_exclusive_group(required=True)
        horizon.add_argument('--mfrak', type=int, help='position horizon')
        horizon.add_argument('--n', type=int, help='sequence length N, the horizon is derived from it')
        self.add_output_arguments(parser)

    def run(self, **options):
        config, x0 = self.load_config(options)
        if options['mfrak'] is not None and options['mfrak'] < 1:
            raise ConfigurationError("--mfrak must be positive")
        report, passed = witness_report(config, options['mfrak'], options['n'], x0)
        self.emit_json(report, options['output'])
        if not passed:
            raise IdentityFailure("witness checks failed, see the report")

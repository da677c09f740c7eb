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

from qmc.exceptions import IdentityFailure
from qmc.management.base import QmcCommand
from qmc.reports import VERIFY_MODES
from qmc.reports import verify_report


class Command(QmcCommand):
    help = 'Verify the witness identities: lemma1, lemma2, membership or theorem'

    def add_arguments(self, parser):
        parser.add_argument('mode', choices=VERIFY_MODES)
        self.add_config_arguments(parser)
        horizon = parser.add_mutually_exclusive_group(required=True)
        horizon.add_argument('--mfrak', type=int, help='position horizon')
        horizon.add_argument('--n', type=int, help='sequence length N')
        parser.add_argument('--n-max', dest='n_max', type=int,
                            help='indices swept by the membership mode (default 2 P_m)')
        parser.add_argument('--cap', type=int, help='largest brute-force enumeration')
        self.add_output_arguments(parser)

    def run(self, **options):
        config, x0 = self.load_config(options)
        report, passed = verify_report(
            options['mode'], config,
            mfrak=options['mfrak'], n=options['n'], x0=x0,
            n_max=options['n_max'], cap=options['cap'],
        )
        self.emit_json(report, options['output'])
        if not passed:
            raise IdentityFailure("{} verification failed, see the report".format(options['mode']))

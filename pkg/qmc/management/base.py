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
import json
from pathlib import Path

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from qmc.exceptions import QmcException
from qmc.lib.config import load_document
from qmc.lib.config import parse_point
from qmc.serializers.config import resolve_run_config


class QmcCommand(BaseCommand):
    """
    Common plumbing of the qmc commands: configuration flags, output
    handling and the mapping of library errors to exit codes
    (1 identity failure, 2 configuration, 3 cap refusal).
    """

    requires_system_checks = []

    def add_config_arguments(self, parser, required=True):
        parser.add_argument('--bases', required=required,
                            help='base system preset name or TOML file')
        parser.add_argument('--perms', help='permutation family preset name or TOML file (identity by default)')
        parser.add_argument('--x', dest='x', help='orbit start as comma separated rationals, e.g. "1/2,1/3"')
        parser.add_argument('--x-digits', dest='x_digits',
                            help='orbit start as digit lists, e.g. "1,0,1;2,0"')

    def add_output_arguments(self, parser):
        parser.add_argument('--output', help='write to this file instead of standard output')

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except QmcException as err:
            raise CommandError(str(err.detail), returncode=err.exit_code) from err

    def run(self, **options):
        raise NotImplementedError('subclasses of QmcCommand must provide a run() method')

    def load_config(self, options):
        bases = load_document(options['bases'], 'bases')
        perms = load_document(options['perms'], 'perms') if options.get('perms') else None
        config = resolve_run_config(bases, perms)
        x0 = parse_point(config.system, options.get('x'), options.get('x_digits'))
        return config, x0

    def emit(self, text, output=None):
        """
        Write a complete document in one go, to a file or to stdout.
        """
        if output:
            Path(output).write_text(text, encoding='utf-8')
        else:
            self.stdout.write(text, ending='')

    def emit_json(self, document, output=None):
        buffer = io.StringIO()
        json.dump(document, buffer, indent=2)
        buffer.write('\n')
        self.emit(buffer.getvalue(), output)

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
import tempfile
from fractions import Fraction
from pathlib import Path

import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from qmc.lib.config import PRESET_DIR
from qmc.lib.discrepancy import star_discrepancy_exact
from qmc.lib.export import read_points_csv
from qmc.lib.export import render_fraction
from qmc.lib.halton import halton_point
from qmc.tests.helpers import halton23

GOLDEN = PRESET_DIR / 'golden' / 'gen_halton23_4.csv'


def run(*args, **options):
    out = io.StringIO()
    call_command(*args, stdout=out, stderr=io.StringIO(), **options)
    return out.getvalue()


class GenCommandTest(SimpleTestCase):
    """
    Point generation through the gen command
    """

    def test_golden_csv(self):
        self.assertEqual(run('gen', bases='halton23', count=4), GOLDEN.read_text())

    def test_rerun_is_byte_identical(self):
        options = {'bases': 'mixed23', 'perms': 'reverse', 'start': 17, 'count': 25}
        self.assertEqual(run('gen', **options), run('gen', **options))

    def test_empty_block(self):
        output = run('gen', bases='halton23', count=0)
        self.assertEqual(output.splitlines()[1:], ['n,x_1,x_2'])

    def test_json(self):
        document = json.loads(run('gen', bases='halton23', count=3, start=1, format='json'))
        self.assertEqual(document['config']['perms'], {'kind': 'identity'})
        self.assertEqual([p['n'] for p in document['points']], [1, 2, 3])
        self.assertEqual(document['points'][0]['exact'], ['1/2', '1/3'])
        self.assertEqual(document['points'][0]['decimal'], ['0.5', '0.333333333333333'])

    def test_shifted_start(self):
        output = run('gen', bases='halton23', count=1, x='1/2,1/3')
        self.assertEqual(output.splitlines()[-1], '0,1/2,1/3')
        output = run('gen', bases='halton23', count=2, x_digits='1;1')
        self.assertEqual(output.splitlines()[-1], '1,1/4,2/3')
        output = run('gen', bases='halton23', count=1, x='1/3,1/2')
        self.assertEqual(output.splitlines()[-1].split(',')[0], '0')

    def test_json_records_run(self):
        document = json.loads(run('gen', bases='halton23', count=3, format='json', x='1/3,1/2'))
        recorded = document['run']
        self.assertEqual((recorded['start'], recorded['count'], recorded['precision']), (0, 3, None))
        # expansions truncated at the preset depth 32
        self.assertEqual(recorded['x_digits'], [[0, 1] * 16, [1] * 32])
        self.assertEqual(recorded['x'], [
            render_fraction(Fraction(1, 3) - Fraction(1, 3 * 2 ** 32)),
            render_fraction(Fraction(1, 2) - Fraction(1, 2 * 3 ** 32)),
        ])
        digits = ';'.join(','.join(str(d) for d in coord) for coord in recorded['x_digits'])
        again = json.loads(run('gen', bases='halton23', count=3, format='json', x_digits=digits))
        self.assertEqual(again['points'], document['points'])
        self.assertEqual(again['run'], recorded)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'points.csv'
            self.assertEqual(run('gen', bases='halton23', count=4, output=str(path)), '')
            self.assertEqual(path.read_text(), GOLDEN.read_text())

    def test_configuration_errors(self):
        for options in ({'bases': 'nope', 'count': 2},
                        {'bases': 'halton23', 'count': -1},
                        {'bases': 'halton23', 'count': 2, 'x': '3/2,0'},
                        {'bases': 'vdc3', 'count': 2, 'perms': 'missing'}):
            with self.assertRaises(CommandError) as ctx:
                run('gen', **options)
            self.assertEqual(ctx.exception.returncode, 2, options)


class DiscCommandTest(SimpleTestCase):

    def test_points_file(self):
        report = json.loads(run('disc', points=str(GOLDEN)))
        with GOLDEN.open() as handle:
            expected = star_discrepancy_exact(read_points_csv(handle))
        self.assertEqual(report['n'], 4)
        self.assertEqual(report['dimension'], 2)
        self.assertEqual(report['star_discrepancy'], render_fraction(expected))
        self.assertNotIn('digest', report)

    def test_generated_block(self):
        report = json.loads(run('disc', bases='halton23', count=4))
        from_file = json.loads(run('disc', points=str(GOLDEN)))
        self.assertEqual(report['star_discrepancy'], from_file['star_discrepancy'])
        self.assertEqual(report['digest'], GOLDEN.read_text().splitlines()[0].split(': ')[1])
        self.assertEqual(report['run']['count'], 4)
        self.assertEqual(report['run']['x'], ['0', '0'])

    def test_halton_twelve_points(self):
        report = json.loads(run('disc', bases='halton23', count=12))
        points = [halton_point(halton23(), n) for n in range(12)]
        self.assertEqual(report['star_discrepancy'], render_fraction(star_discrepancy_exact(points)))

    def test_one_dimension(self):
        report = json.loads(run('disc', bases='vdc3', count=3))
        # 0, 1/3, 2/3
        self.assertEqual(report['star_discrepancy'], '1/3')
        self.assertEqual(report['scaled'], '1')

    def test_cap_refusal(self):
        with self.assertRaises(CommandError) as ctx:
            run('disc', bases='halton23', count=10, cap=10)
        self.assertEqual(ctx.exception.returncode, 3)

    def test_missing_source(self):
        with self.assertRaises(CommandError) as ctx:
            run('disc')
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            run('disc', points='/nonexistent/points.csv')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_empty_block(self):
        with self.assertRaises(CommandError) as ctx:
            run('disc', bases='halton23', count=0)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('empty point set', str(ctx.exception))


class WitnessCommandTest(SimpleTestCase):

    def test_worked_witness(self):
        report = json.loads(run('witness', bases='halton23', mfrak=6))
        self.assertEqual(report['plan']['tau'], [[2, 4, 6], [1, 2, 3]])
        self.assertEqual(report['plan']['level_moduli'], [[4, 16, 64], [3, 9, 27]])
        self.assertEqual(report['boxes']['start'], 1066)
        self.assertEqual(report['boxes']['boundary'], ['21/64', '13/27'])
        self.assertEqual(len(report['boxes']['boxes']), 9)
        self.assertEqual(report['alpha_m'], '3365/1152')
        self.assertEqual(report['lemma2']['alpha'], '7/6')
        self.assertFalse(report['lemma2']['hypothesis_met'])
        self.assertTrue(all(c['holds'] for c in report['checks']))
        self.assertEqual(report['run'], {'mfrak': 6, 'n': None, 'x_digits': [[0] * 32] * 2, 'x': ['0', '0']})
        self.assertEqual(report['boxes']['point']['values'], ['0', '0'])

    def test_horizon_from_n(self):
        report = json.loads(run('witness', bases='halton23', n=3456))
        self.assertEqual(report['plan']['mfrak'], 2)
        self.assertEqual(report['plan']['m'], 1)

    def test_horizon_errors(self):
        for options in ({'mfrak': 0}, {'mfrak': 40}, {'n': 5}):
            with self.assertRaises(CommandError) as ctx:
                run('witness', bases='halton23', **options)
            self.assertEqual(ctx.exception.returncode, 2, options)

    def test_failed_checks_exit_with_one(self):
        with mock.patch('qmc.management.commands.witness.witness_report', return_value=({}, False)):
            with self.assertRaises(CommandError) as ctx:
                run('witness', bases='halton23', mfrak=6)
        self.assertEqual(ctx.exception.returncode, 1)


class VerifyCommandTest(SimpleTestCase):
    """
    Every verification mode on the Halton (2, 3) witness
    """

    def verify(self, mode, **options):
        options.setdefault('bases', 'halton23')
        return json.loads(run('verify', mode, **options))

    def test_lemma1(self):
        report = self.verify('lemma1', mfrak=6)
        self.assertTrue(report['passed'])
        self.assertEqual(report['alpha_m'], '3365/1152')
        self.assertEqual(report['start'], 1066)
        # closed form, nine boxes and the period check
        self.assertEqual(len(report['checks']), 11)
        self.assertEqual(report['checks'][0]['lhs'], '3365/1152')

    def test_lemma1_other_family(self):
        report = self.verify('lemma1', mfrak=4, bases='mixed23', perms='reverse')
        self.assertTrue(report['passed'])

    def test_lemma2(self):
        report = self.verify('lemma2', mfrak=6)
        self.assertTrue(report['passed'])
        self.assertEqual(report['lemma2']['alpha_m'], '3365/1152')
        self.assertEqual(len(report['conditions']), 1)
        self.assertEqual(report['conditions'][0]['detail'], 'hypothesis m >= 2 p0 not met')

    def test_lemma2_with_hypothesis(self):
        report = self.verify('lemma2', mfrak=26)
        self.assertTrue(report['passed'])
        self.assertEqual(report['plan']['m'], 13)
        self.assertEqual(report['checks'][-1]['name'], '|alpha_m| >= m^s/(4 p0)')

    def test_membership(self):
        report = self.verify('membership', mfrak=6, n_max=500)
        self.assertTrue(report['passed'])
        self.assertEqual(report['checked'], 500)
        self.assertEqual(report['boxes'], 9)
        self.assertEqual(report['disagreements'], [])

    def test_membership_two_periods(self):
        report = self.verify('membership', mfrak=6, n_max=3456)
        self.assertTrue(report['passed'])
        self.assertEqual(report['checked'], 3456)

    def test_membership_shifted_start(self):
        report = self.verify('membership', mfrak=4, x='1/2,1/3')
        self.assertTrue(report['passed'])
        self.assertEqual(report['run']['x'], ['1/2', '1/3'])
        self.assertEqual(report['run']['x_digits'][0][:2], [1, 0])
        self.assertEqual((report['run']['mfrak'], report['run']['n_max'], report['run']['cap']), (4, None, None))

    def test_theorem(self):
        report = self.verify('theorem', n=3456)
        self.assertTrue(report['passed'])
        self.assertEqual(report['chain']['n'], 3456)
        conditions = {c['name']: c['holds'] for c in report['conditions']}
        self.assertTrue(conditions['2 P_m <= N'])
        self.assertFalse(conditions['log2 N >= 2 q0^(s-1) C_1'])

    def test_cap_refusal(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify', 'lemma1', bases='halton23', mfrak=6, cap=100)
        self.assertEqual(ctx.exception.returncode, 3)

    def test_failed_identity_exits_with_one(self):
        with mock.patch('qmc.management.commands.verify.verify_report', return_value=({'passed': False}, False)):
            with self.assertRaises(CommandError) as ctx:
                run('verify', 'membership', bases='halton23', mfrak=6)
        self.assertEqual(ctx.exception.returncode, 1)

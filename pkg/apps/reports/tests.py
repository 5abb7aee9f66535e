import csv
import io
import json
import os
import tempfile
from fractions import Fraction
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from apps.exact.exceptions import InvariantViolation
from apps.exact.ratios import RatioPipeline
from apps.exact.records import RatioRecord

from .checks import run_check, run_identity_checks
from .exporters import OutputError, render_csv, write_output
from .serializers import FloatStringField, RationalField, RunConfigSerializer


def run(name, *args, **options):
    out = io.StringIO()
    call_command(name, *args, stdout=out, stderr=io.StringIO(), **options)
    return out.getvalue()


class SerializerTests(SimpleTestCase):

    def test_rational_field(self):
        field = RationalField()
        self.assertEqual(field.to_representation(Fraction(8, 3)), '8/3')
        self.assertEqual(field.to_representation(Fraction(4)), '4')
        self.assertEqual(field.to_internal_value('-64/15'), Fraction(-64, 15))

    def test_float_field_keeps_digits(self):
        rendered = FloatStringField().to_representation(Fraction(1, 3))
        self.assertTrue(rendered.startswith('0.33333333333333333'))
        tiny = FloatStringField().to_representation(Fraction(1, 10 ** 400))
        self.assertIn('e-400', tiny)

    def test_run_config(self):
        serializer = RunConfigSerializer(data={'subcommand': 'mc', 'd': 3, 'threads': 8, 'seed': 1})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertNotIn('threads', serializer.data)
        self.assertFalse(RunConfigSerializer(data={'subcommand': 'table', 'd_max': 1001}).is_valid())
        self.assertFalse(RunConfigSerializer(data={'subcommand': 'mc', 'd': 0}).is_valid())
        self.assertTrue(RunConfigSerializer(data={'subcommand': 'table', 'd_max': 0}).is_valid())
        self.assertFalse(RunConfigSerializer(data={'subcommand': 'asymptotics', 'd_from': 50, 'd_to': 40}).is_valid())


class ExporterTests(SimpleTestCase):

    def test_csv_uses_lf(self):
        content = render_csv([{'a': '1/2', 'b': None}, {'a': '3', 'b': True}], headers=['a', 'b'])
        self.assertEqual(content, 'a,b\n1/2,\n3,true\n')

    def test_write_error_names_path(self):
        path = os.path.join(tempfile.gettempdir(), 'missing-dir-for-report', 'out.csv')
        with self.assertRaises(OutputError) as ctx:
            write_output('x', path, None)
        self.assertIn(path, str(ctx.exception))


class TableCommandTests(SimpleTestCase):

    def test_csv(self):
        rows = list(csv.DictReader(io.StringIO(run('table', d_max=3))))
        self.assertEqual([row['ratio'] for row in rows], ['0', '0', '2', '14'])
        self.assertEqual((rows[2]['v0'], rows[2]['v1'], rows[2]['v_total']), ('4/3', '8/3', '4'))
        self.assertEqual(rows[3]['v_rest'], '0')

    def test_csv_and_json_agree(self):
        csv_rows = list(csv.DictReader(io.StringIO(run('table', d_max=6))))
        document = json.loads(run('table', d_max=6, format='json'))
        self.assertEqual(set(document), {'config', 'results', 'checks'})
        self.assertEqual(document['config']['d_max'], 6)
        for csv_row, json_row in zip(csv_rows, document['results'], strict=True):
            self.assertEqual(csv_row, {key: str(value) for key, value in json_row.items()})
        self.assertEqual(document['results'][0]['ratio'], '0')

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'table.csv')
            self.assertEqual(run('table', d_max=2, out=path), '')
            with open(path, 'rb') as handle:
                content = handle.read()
        self.assertNotIn(b'\r\n', content)
        self.assertTrue(content.startswith(b'd,ratio,'))

    def test_io_error(self):
        path = os.path.join(tempfile.gettempdir(), 'missing-dir-for-report', 'table.csv')
        with self.assertRaises(CommandError) as ctx:
            run('table', d_max=2, out=path)
        self.assertEqual(ctx.exception.returncode, 3)
        self.assertIn(path, str(ctx.exception))

    def test_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run('table', d_max=1001)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_inconsistent_record_fails_check(self):
        broken = RatioRecord(
            d=2, ratio=2, v_total=Fraction(4), v0=Fraction(4, 3), v1=Fraction(3),
            p0=Fraction(1, 3), p1=Fraction(3, 4),
        )
        out = io.StringIO()
        with mock.patch('apps.reports.management.commands.table.ratio_records', return_value=[broken]):
            with self.assertRaises(CommandError) as ctx:
                call_command('table', d_max=2, format='json', stdout=out, stderr=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 1)
        check = json.loads(out.getvalue())['checks'][0]
        self.assertEqual(check['name'], 'records')
        self.assertFalse(check['passed'])
        self.assertIn('v1 != ratio * v0', check['detail'])

    def test_records_check_passes(self):
        check = json.loads(run('table', d_max=4, format='json'))['checks'][0]
        self.assertTrue(check['passed'])
        self.assertIn('0 <= d <= 4', check['detail'])


class RatioCommandTests(SimpleTestCase):

    def test_degree_five(self):
        output = run('ratio', d=5)
        for name in ('closed_form', 'sum_form', 'recurrence', 'series', 'integral'):
            self.assertIn(f"{name}: 418\n", output)
        self.assertNotIn('fail', output)

    def test_degree_one(self):
        output = run('ratio', d=1, all=True)
        self.assertIn('sum_form: n/a', output)
        self.assertIn('closed_form: 0', output)
        self.assertIn('rho: 0', output)

    def test_disagreement(self):
        broken = (
            RatioPipeline('closed_form', lambda d: 2),
            RatioPipeline('wrong', lambda d: 3),
        )
        with mock.patch('apps.reports.management.commands.ratio.PRIMARY_PIPELINES', broken):
            with self.assertRaises(CommandError) as ctx:
                run('ratio', d=2)
        self.assertEqual(ctx.exception.returncode, 1)


class MonteCarloCommandTests(SimpleTestCase):

    def test_byte_identical_across_threads(self):
        single = run('mc', d=3, samples=3000, seed=7, chunk_size=400, threads=1)
        parallel = run('mc', d=3, samples=3000, seed=7, chunk_size=400, threads=8)
        self.assertEqual(single, parallel)
        document = json.loads(single)
        self.assertNotIn('threads', document['config'])
        self.assertEqual(document['results']['total_samples'], 3000)
        self.assertEqual([check['s'] for check in document['checks']], [0, 1])
        self.assertEqual(document['checks'][1]['exact'], '224/45')

    def test_degree_four_complement_reference(self):
        rows = list(csv.DictReader(io.StringIO(run('mc', d=4, samples=2000, seed=3, chunk_size=500, format='csv'))))
        self.assertEqual([row['s'] for row in rows], ['0', '1', '2'])
        self.assertEqual(rows[2]['exact'], '2048/525')

    def test_csv_and_json_agree(self):
        options = {'d': 6, 'samples': 4000, 'seed': 11, 'chunk_size': 1000}
        rows = list(csv.DictReader(io.StringIO(run('mc', format='csv', **options))))
        document = json.loads(run('mc', format='json', **options))
        results = document['results']
        self.assertEqual([row['s'] for row in rows], ['0', '1', '2', '3'])

        def cell(value):
            if value is None:
                return ''
            if isinstance(value, bool):
                return 'true' if value else 'false'
            return str(value)

        for s, row in enumerate(rows):
            self.assertEqual(row['hits'], cell(results['hits'][s]))
            self.assertEqual(row['estimate'], results['estimates'][s])
            self.assertEqual(row['standard_error'], results['standard_errors'][s])
            self.assertEqual(row['ratio_estimate'], cell(results['ratio_estimates'][s]))
            for key in ('d', 'total_samples', 'degenerate', 'misses', 'box_volume', 'seed', 'chunk_size', 'rng_algorithm'):
                self.assertEqual(row[key], cell(results[key]), key)

        checks = {check['s']: check for check in document['checks']}
        self.assertEqual(set(checks), {0, 1})
        for s, row in enumerate(rows):
            for key in ('exact', 'exact_float', 'deviation', 'within_3_stderr'):
                self.assertEqual(row[key], cell(checks[s][key]) if s in checks else '', (s, key))

    def test_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run('mc', d=2, samples=0)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_degree_zero_is_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run('mc', d=0, samples=10)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('d', str(ctx.exception))


class IdentitiesCommandTests(SimpleTestCase):

    def test_small_ranges(self):
        output = run('identities', max_a=12, max_m=8, max_pfaff=10, max_526=6)
        self.assertEqual(output.count('PASS'), 5)

    def test_failing_family(self):
        result = run_check('broken', mock.Mock(side_effect=InvariantViolation('broken: lhs != rhs')))
        self.assertFalse(result.passed)
        self.assertIn('lhs != rhs', result.detail)

    def test_families(self):
        results = run_identity_checks(max_a=5, max_m=5, max_pfaff=5, max_526=3)
        self.assertTrue(all(result.passed for result in results))


class AsymptoticsCommandTests(SimpleTestCase):

    def test_table(self):
        document = json.loads(run('asymptotics', d_from=20, d_to=60, format='json'))
        self.assertEqual([row['d'] for row in document['results']], list(range(20, 61)))
        self.assertTrue(all(check['passed'] for check in document['checks']))
        self.assertNotIn('threads', document['config'])

    def test_range_error(self):
        with self.assertRaises(CommandError) as ctx:
            run('asymptotics', d_from=50, d_to=40)
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            run('asymptotics', precision_bits=32)
        self.assertEqual(ctx.exception.returncode, 2)


class SeriesCommandTests(SimpleTestCase):

    def test_terms(self):
        lines = run('series', terms=6).splitlines()
        self.assertEqual(len(lines), 7)
        self.assertEqual(lines[3], '2\t2\t13\tok')
        self.assertEqual(lines[6], '5\t418\t1683\tok')

    def test_zero_terms(self):
        self.assertEqual(run('series', terms=0), '')


class VerifyCommandTests(SimpleTestCase):

    def test_regions(self):
        output = run('verify', group=['regions'])
        self.assertIn('PASS d2_geometric_oracle', output)
        self.assertNotIn('FAIL', output)

    def test_full_suite(self):
        output = run('verify')
        self.assertNotIn('FAIL', output)
        self.assertIn('PASS integer_ratios', output)
        self.assertIn('PASS formula_chain', output)

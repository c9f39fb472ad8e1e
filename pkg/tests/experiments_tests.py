"""
Tests for functionality in the experiments module

"""
import json
import os
import shutil
import tempfile
import unittest

import mock

from polyprod import experiments
from polyprod import generators
from polyprod import graph
from polyprod import utils


class ExperimentReportTests(unittest.TestCase):

    def setUp(self):
        self.report = experiments.ExperimentReport('example', {'max_m': 2}, [
            {'instance': 'b', 'certificate': '2', 'ok': True},
            {'instance': 'a', 'certificate': '1', 'ok': False},
            {'instance': 'c', 'certificate': '', 'ok': False,
             'skipped': True}], 1.5)

    def test_records_sorted_by_certificate(self):
        self.assertEqual([r['instance'] for r in self.report.records],
                         ['c', 'a', 'b'])

    def test_violations_exclude_skipped(self):
        self.assertEqual(self.report.violations, ['a'])
        self.assertEqual(self.report.skipped, ['c'])
        self.assertEqual(self.report.verdict, experiments.FAIL)

    def test_elapsed_omitted_by_default(self):
        self.assertNotIn('elapsed', self.report.as_dict())
        self.assertEqual(self.report.as_dict(timing=True)['elapsed'], 1.5)

    def test_to_json(self):
        document = json.loads(self.report.to_json())
        self.assertEqual(document['verdict'], 'FAIL')
        self.assertEqual(document['parameters'], {'max_m': 2})

    def test_skipped_only_passes(self):
        report = experiments.ExperimentReport('example', {}, [
            {'instance': 'c', 'certificate': '', 'ok': False,
             'skipped': True}])
        self.assertEqual(report.verdict, experiments.PASS)
        self.assertTrue(report.budget_exceeded)
        self.assertTrue(report.as_dict()['budget_exceeded'])

    def test_budget_not_exceeded(self):
        report = experiments.ExperimentReport('example', {}, [
            {'instance': 'b', 'certificate': '2', 'ok': True}])
        self.assertFalse(report.budget_exceeded)
        self.assertFalse(report.as_dict()['budget_exceeded'])


class RunInstanceTests(unittest.TestCase):

    def test_budget_is_skipped(self):
        """an instance over budget should be recorded as skipped"""
        check = mock.Mock(side_effect=utils.SearchBudgetExceeded(1, 'test'))
        instance = experiments.Instance('x', check, (1, 2))
        with mock.patch.object(utils._Settings, 'search_cap', 32):
            record = experiments._run_instance(instance, 32)
        check.assert_called_once_with(1, 2)
        self.assertTrue(record['skipped'])
        self.assertFalse(record['ok'])

    def test_record(self):
        check = mock.Mock(return_value=(generators.cube(), {'a': True},
                                        {'n': 8}))
        instance = experiments.Instance('cube', check, ())
        with mock.patch.object(utils._Settings, 'search_cap', 32):
            record = experiments._run_instance(instance, 32)
        self.assertTrue(record['ok'])
        self.assertEqual(record['detail'], {'n': 8})
        self.assertTrue(record['certificate'].startswith('8:'))


class CheckTests(unittest.TestCase):

    def test_stacked_rule_with_root(self):
        _graph, checks, detail = experiments.check_stacked_rule(6, 2)
        self.assertTrue(checks['parity_rule'])
        self.assertTrue(detail['has_root'])

    def test_stacked_rule_without_root(self):
        _graph, checks, detail = experiments.check_stacked_rule(8, 3)
        self.assertTrue(checks['parity_rule'])
        self.assertFalse(detail['has_root'])

    def test_cc_rule(self):
        _graph, checks, detail = experiments.check_cc_rule(4, 3, 2)
        self.assertTrue(all(checks.values()))
        self.assertEqual(len(detail['forms']), 2)

    def test_cancellation(self):
        factor = generators.stacked_cube_factor(1, 2)[0]
        _graph, checks, _detail = experiments.check_cancellation(factor)
        self.assertTrue(all(checks.values()))
        self.assertNotIn('one_planar_root', checks)

    def test_cancellation_among_planar_roots(self):
        """C6 x P3 has a non-planar root beside C3 x P3, which stays the
        only planar one"""
        factor = generators.odd_prism_factor(1, 3)
        _graph, checks, detail = experiments.check_cancellation(factor)
        self.assertTrue(all(checks.values()))
        self.assertTrue(checks['one_planar_root'])
        self.assertGreaterEqual(detail['roots'], 2)
        self.assertEqual(detail['planar_roots'], 1)

    def test_cancellation_non_polyhedral_cover(self):
        """a factor whose cover is not a polyhedron should be a violation"""
        _graph, checks, detail = experiments.check_cancellation(
            graph.cycle(5))
        self.assertEqual(checks, {'cover_polyhedral': False})
        self.assertEqual(detail['reason'], 'cover_not_polyhedral')

    def test_bounds_non_polyhedral_cover(self):
        _graph, checks, detail = experiments.check_bounds(graph.cycle(5))
        self.assertFalse(all(checks.values()))
        self.assertEqual(detail['reason'], 'cover_not_polyhedral')

    def test_bounds(self):
        _graph, checks, detail = experiments.check_bounds(
            generators.quad_factor(4, 2)[0])
        self.assertTrue(all(checks.values()))
        self.assertGreaterEqual(detail['degree_3'], 8)

    def test_quad(self):
        _graph, checks, detail = experiments.check_quad(6, 3)
        self.assertTrue(all(checks.values()))
        self.assertEqual(detail['s'], [3, 5, 7, 8, 10, 12])

    def test_t3333(self):
        script = generators.T3333Script(('T1',), 'F1')
        _graph, checks, _detail = experiments.check_t3333(script)
        self.assertTrue(all(checks.values()))

    def test_generator_factors(self):
        names = [name for name, _graph in experiments.generator_factors(
            {'max_N': 1, 'max_M': 1, 'max_m': 2, 'max_moves': 0})]
        self.assertEqual(len(names), 5)
        for expected in ('stacked_cube_factor(1,1)', 'quad_factor(2,1)',
                         't3333(-,F1)', 'cubic_build(cube)'):
            self.assertIn(expected, names)

    def test_generator_factors_keep_every_quad_factor(self):
        names = [name for name, _graph in experiments.generator_factors(
            {'max_N': 0, 'max_M': 0, 'max_m': 5, 'max_moves': 0})]
        self.assertEqual(
            [name for name in names if name.startswith('quad_factor')],
            ['quad_factor(%s,%s)' % (m, i) for m in range(2, 6)
             for i in range(1, m)])


class FourTrianglePatternTests(unittest.TestCase):

    def test_hub_sharing_edges(self):
        self.assertTrue(experiments.four_triangle_pattern(
            [(0, 1, 2), (1, 2, 3), (0, 1, 5), (0, 2, 6)]))

    def test_pairwise_vertices_only(self):
        """triangles meeting pairwise in single vertices have no hub"""
        self.assertFalse(experiments.four_triangle_pattern(
            [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)]))

    def test_tetrahedron(self):
        self.assertFalse(experiments.four_triangle_pattern(
            [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]))

    def test_three_triangles(self):
        self.assertFalse(experiments.four_triangle_pattern(
            [(0, 1, 2), (1, 2, 3), (0, 1, 5)]))


class RunExperimentTests(unittest.TestCase):

    def test_unknown_raises(self):
        self.assertRaises(experiments.UnknownExperiment,
                          experiments.run_experiment, 'nope')

    def test_unknown_message(self):
        self.assertIn('nope', str(experiments.UnknownExperiment('nope')))

    def test_registered(self):
        self.assertEqual(list(experiments.EXPERIMENTS), [
            'cancellation', 'stacked_rule', 'cc_rule',
            'triple_expressibility', 'bounds_check', 't3333_census',
            'quad_census', 'cubic_census', 'dou_roundtrip',
            'ingest_classify'])

    def test_triple_expressibility(self):
        report = experiments.run_experiment('triple_expressibility',
                                            {'max_m': 2})
        self.assertEqual(report.verdict, experiments.PASS)
        self.assertEqual(len(report.records), 1)
        self.assertEqual(report.parameters['max_m'], 2)

    def test_stacked_rule(self):
        report = experiments.run_experiment(
            'stacked_rule', {'max_n_cycle': 8, 'max_m_path': 3})
        self.assertEqual(report.verdict, experiments.PASS)
        self.assertEqual(len(report.records), 6)

    def test_dou_roundtrip(self):
        report = experiments.run_experiment('dou_roundtrip', {'max_ell': 4})
        self.assertEqual(report.verdict, experiments.PASS)

    def test_cubic_census(self):
        report = experiments.run_experiment('cubic_census')
        self.assertEqual(report.verdict, experiments.PASS)
        checks = report.records[0]['checks']
        for clause in experiments.CUBIC_MUTATIONS:
            self.assertTrue(checks['rejects_%s' % clause], clause)

    def test_default_cap_is_search_cap(self):
        """instances over the process search cap should be skipped"""
        with mock.patch.object(utils._Settings, 'search_cap', 10):
            report = experiments.run_experiment('triple_expressibility',
                                                {'max_m': 2})
        self.assertEqual(report.skipped, ['C4 x P4'])
        self.assertEqual(report.verdict, experiments.PASS)
        self.assertTrue(report.budget_exceeded)
        self.assertNotIn('max_n', report.parameters)

    def test_restores_search_cap(self):
        with mock.patch.object(utils._Settings, 'search_cap', 21):
            experiments.run_experiment('triple_expressibility',
                                       {'max_m': 2})
            self.assertEqual(utils.search_cap(), 21)

    def test_deterministic(self):
        first = experiments.run_experiment('quad_census', {'max_m': 3})
        second = experiments.run_experiment('quad_census', {'max_m': 3})
        self.assertEqual(first.to_json(), second.to_json())

    @mock.patch('polyprod.experiments.futures.ProcessPoolExecutor')
    def test_workers_use_a_pool(self, executor):
        pool = executor.return_value.__enter__.return_value
        pool.map.side_effect = lambda function, *iterables: list(
            map(function, *iterables))
        report = experiments.run_experiment('triple_expressibility',
                                            {'max_m': 2}, workers=2)
        executor.assert_called_once_with(max_workers=2)
        self.assertEqual(report.verdict, experiments.PASS)


class IngestTests(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.path = os.path.join(self.directory, 'input.g6')
        with open(self.path, 'w') as handle:
            handle.write('C~\nCl\n\n')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_input_stream(self):
        report = experiments.run_experiment('ingest_classify',
                                            {'input': self.path})
        self.assertEqual(report.verdict, experiments.PASS)
        self.assertEqual(sorted(r['instance'] for r in report.records),
                         ['line 1', 'line 2'])
        conditions = sorted(r['detail']['condition'] for r in report.records)
        self.assertEqual(conditions, ['C3', 'none'])

    def test_max_n_filters(self):
        report = experiments.run_experiment('ingest_classify',
                                            {'input': self.path, 'max_n': 3})
        self.assertEqual(report.records, [])

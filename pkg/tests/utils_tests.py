"""
Tests for functionality in the utils module

"""
import unittest

import mock

import polyprod
from polyprod import utils


class SearchCapTests(unittest.TestCase):

    def test_default_cap(self):
        """search_cap defaults to the environment-derived value"""
        with mock.patch.object(utils._Settings, 'search_cap',
                               utils.DEFAULT_SEARCH_CAP):
            self.assertEqual(utils.search_cap(), utils.DEFAULT_SEARCH_CAP)

    def test_set_search_cap(self):
        """set_search_cap should change the process-wide cap"""
        with mock.patch.object(utils._Settings, 'search_cap', 32):
            utils.set_search_cap(12)
            self.assertEqual(utils.search_cap(), 12)

    def test_set_search_cap_accepts_strings(self):
        with mock.patch.object(utils._Settings, 'search_cap', 32):
            utils.set_search_cap('40')
            self.assertEqual(utils.search_cap(), 40)

    def test_set_search_cap_rejects_zero(self):
        """set_search_cap should raise ValueError for a cap below one"""
        self.assertRaises(ValueError, utils.set_search_cap, 0)

    def test_package_exports_search_cap(self):
        self.assertIs(polyprod.search_cap, utils.search_cap)


class ResolveCapTests(unittest.TestCase):

    def test_explicit_cap_wins(self):
        with mock.patch.object(utils._Settings, 'search_cap', 32):
            self.assertEqual(utils.resolve_cap(5), 5)

    def test_none_uses_process_cap(self):
        with mock.patch.object(utils._Settings, 'search_cap', 17):
            self.assertEqual(utils.resolve_cap(None), 17)


class EnsureWithinCapTests(unittest.TestCase):

    def test_within_cap(self):
        """ensure_within_cap should not raise at the cap"""
        utils.ensure_within_cap(10, 10, 'test search')

    def test_over_cap_raises(self):
        """ensure_within_cap should raise SearchBudgetExceeded over the cap"""
        with self.assertRaises(utils.SearchBudgetExceeded) as context:
            utils.ensure_within_cap(11, 10, 'test search')
        self.assertEqual(context.exception.limit, 10)
        self.assertEqual(str(context.exception),
                         'Search budget 10 exceeded by test search on 11 '
                         'vertices')

    def test_over_process_cap_raises(self):
        with mock.patch.object(utils._Settings, 'search_cap', 4):
            self.assertRaises(utils.SearchBudgetExceeded,
                              utils.ensure_within_cap, 5, None, 'x')


class ExceptionTests(unittest.TestCase):

    def test_budget_is_polyprod_exception(self):
        self.assertTrue(issubclass(utils.SearchBudgetExceeded,
                                   utils.PolyprodException))

    def test_version(self):
        self.assertEqual(polyprod.version, polyprod.__version__)

"""Fixed results for testing the run_tests module.

Running this module with run_tests.run_tests gives:
    Successes:  1
    Failures:   1
    Errors:     1
    Skipped:    1
    Total:      4
"""
import unittest


class SampleResults(unittest.TestCase):

    def test_success(self):
        self.assertTrue(True)

    def test_failure(self):
        self.assertTrue(False)

    def test_error(self):
        raise ValueError('This is a sample error.')

    @unittest.skip('sample skip')
    def test_skipped(self):
        self.assertTrue(False)

import io
import unittest
from contextlib import redirect_stderr

from tspmin.utils import build_boolean_dict, bulk_process, debug_print, format_flag

class TestUtils(unittest.TestCase):

    def test_boolean_dict(self):
        booleandict = build_boolean_dict()
        self.assertTrue(booleandict['T'])
        self.assertFalse(booleandict['false'])
        self.assertTrue(booleandict[1])

    def test_format_flag(self):
        self.assertEqual(format_flag(True), 'T')
        self.assertEqual(format_flag(0), 'F')

    def test_debug_print(self):
        buffer = io.StringIO()
        with redirect_stderr(buffer):
            debug_print(False, "hidden")
            debug_print(True, "shown")
        self.assertEqual(buffer.getvalue(), "shown\n")

    @staticmethod
    def dummy_command(x):
        return x * 2

    def test_bulk_process(self):
        arguments = [1, 2, 3, 4, 5]
        results = bulk_process(self.dummy_command, arguments, progress=False)
        self.assertEqual(results, [2, 4, 6, 8, 10])

    def test_bulk_process_serial(self):
        results = bulk_process(self.dummy_command, [3, 1], multicores=1, progress=False)
        self.assertEqual(results, [6, 2])

    def test_bulk_process_needs_arguments(self):
        with self.assertRaises(ValueError):
            bulk_process(self.dummy_command, [])

if __name__ == '__main__':
    unittest.main()

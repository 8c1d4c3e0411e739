import os
import shutil
import tempfile
from unittest import TestCase

from qhtoeplitz.exceptions import SymbolParseError
from qhtoeplitz.util import datapath, jobs, log, strings
from qhtoeplitz.util.settings import SettingsIO
from qhtoeplitz.util.yaml import dump_yaml, read_yaml_from_file

FIXTURES_PATH = os.path.join(os.path.dirname(__file__), 'fixtures')


class TestSymbolGrammar(TestCase):
    def test_terms(self):
        self.assertEqual(strings.parse_symbol("3*r^-1 - r^3"), [(3.0, -1.0, 0), (-1.0, 3.0, 0)])
        self.assertEqual(strings.parse_symbol("1/2*r"), [(0.5, 1.0, 0)])
        self.assertEqual(strings.parse_symbol("-2"), [(-2.0, 0.0, 0)])

    def test_bare_r_is_the_first_power(self):
        self.assertEqual(strings.parse_symbol("r"), [(1.0, 1.0, 0)])
        self.assertEqual(strings.parse_symbol("2*r"), [(2.0, 1.0, 0)])
        self.assertEqual(strings.parse_symbol("1 + r"), [(1.0, 0.0, 0), (1.0, 1.0, 0)])
        self.assertEqual(strings.parse_symbol("r*log"), [(1.0, 1.0, 1)])
        self.assertEqual(strings.parse_symbol("log"), [(1.0, 0.0, 1)])

    def test_logarithm(self):
        self.assertEqual(strings.parse_symbol("r^2*log"), [(1.0, 2.0, 1)])
        self.assertEqual(strings.parse_symbol("r^2*log(r)"), [(1.0, 2.0, 1)])

    def test_errors(self):
        with self.assertRaises(SymbolParseError):
            strings.parse_symbol("")
        with self.assertRaises(SymbolParseError):
            strings.parse_symbol("r^2 r")


class TestGridGrammar(TestCase):
    def test_ranges_and_lists(self):
        grid = strings.parse_grid("k1=-2..2,m=0.5|1|5/2,k2=3")
        self.assertEqual(list(grid), ["k1", "m", "k2"])
        self.assertEqual(grid["k1"], [-2, -1, 0, 1, 2])
        self.assertEqual(grid["m"], [0.5, 1, 2.5])
        self.assertEqual(grid["k2"], [3])

    def test_error_position(self):
        with self.assertRaises(SymbolParseError) as context:
            strings.parse_grid("k1=1, m")
        self.assertEqual(context.exception.position, 6)

    def test_bad_grids(self):
        for text in ("k1=3..1", "k1=1,k1=2", "m=1/0", "k1=0.5..2", "k1=1,,m=2"):
            with self.assertRaises(SymbolParseError, msg=text):
                strings.parse_grid(text)


class TestFormatReal(TestCase):
    def test_integers_and_fractions(self):
        self.assertEqual(strings.format_real(2.0), "2")
        self.assertEqual(strings.format_real(-0.5), "-1/2")
        self.assertEqual(strings.format_real(-19 / 30), "-19/30")

    def test_irrational(self):
        self.assertEqual(strings.format_real(3.141592653589793), "3.14159265358979")


class TestSettings(TestCase):
    def setUp(self):
        self.settings = SettingsIO(os.path.join(FIXTURES_PATH, 'qhtoeplitz.conf'))

    def test_read_numbers(self):
        self.assertEqual(self.settings.read_float("tolerance", 1e-10), 1e-8)
        self.assertEqual(self.settings.read_int("margin", 20), 12)
        self.assertEqual(self.settings.read_int("order", 40, section="quadrature"), 60)

    def test_bad_and_missing_values_fall_back(self):
        self.assertEqual(self.settings.read_int("workers", 4), 4)
        self.assertEqual(self.settings.read_float("svd_threshold", 1e-9), 1e-9)
        self.assertEqual(self.settings.read_setting("missing"), "")

    def test_write_setting(self):
        config_dir = tempfile.mkdtemp()
        try:
            config_file = os.path.join(config_dir, "conf", "qhtoeplitz.conf")
            SettingsIO(config_file).write_setting("margin", 30)
            self.assertEqual(SettingsIO(config_file).read_int("margin", 20), 30)
        finally:
            shutil.rmtree(config_dir)


class TestYaml(TestCase):
    def test_key_order_is_kept(self):
        self.assertTrue(dump_yaml({"schema": "toeplitz-qh/1", "command": "rank"}).startswith("schema:"))

    def test_write_and_read(self):
        config_dir = tempfile.mkdtemp()
        try:
            path = os.path.join(config_dir, "report.yml")
            with open(path, "w") as report_file:
                report_file.write(dump_yaml({"rank": 2, "canonical": [0, -2]}))
            self.assertEqual(read_yaml_from_file(path), {"rank": 2, "canonical": [0, -2]})
        finally:
            shutil.rmtree(config_dir)

    def test_missing_file(self):
        self.assertEqual(read_yaml_from_file(os.path.join(FIXTURES_PATH, "nothing.yml")), {})


class TestDatapath(TestCase):
    def test_examples_are_packaged(self):
        self.assertTrue(os.path.isfile(datapath.get_file("examples.yml")))


class TestLogFile(TestCase):
    def test_attach_log_file(self):
        log_dir = tempfile.mkdtemp()
        filename = os.path.join(log_dir, "logs", "qhtoeplitz.log")
        handler = log.attach_log_file(filename)
        try:
            self.assertIs(log.attach_log_file(filename), handler)
            log.logger.warning("window too small")
            handler.flush()
            with open(filename) as log_file:
                self.assertIn("window too small", log_file.read())
        finally:
            log.logger.removeHandler(handler)
            handler.close()
            shutil.rmtree(log_dir)


class TestJobs(TestCase):
    def test_results_keep_input_order(self):
        results = jobs.run_parallel(lambda value: 1 / value, [1, 2, 0, 4], workers=2)
        self.assertEqual(results[:2], [1.0, 0.5])
        self.assertIsInstance(results[2], jobs.TaskFailure)
        self.assertIsInstance(results[2].error, ZeroDivisionError)
        self.assertEqual(results[3], 0.25)

    def test_serial_run(self):
        self.assertEqual(jobs.run_parallel(abs, [-1, -2], workers=1), [1, 2])

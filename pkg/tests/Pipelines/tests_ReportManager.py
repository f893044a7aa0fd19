from unittest import TestCase
from tempfile import TemporaryDirectory
from os.path import join, isfile

from NegCat.Core.Manager.ReportManager import ReportManager
from NegCat.Core.Utils.jsonUtils import load_report


class TestReportManager(TestCase):

    def test_report(self):
        with TemporaryDirectory() as directory:
            manager = ReportManager('closure', {'n': 4}, output_dir=directory)
            manager.add_result('count', 9)
            manager.add_assertion('extension_closed', 1)
            manager.add_file('polygon.svg', '<svg/>\n')
            self.assertTrue(manager.passed)
            written = manager.write()
            self.assertEqual(written, join(directory, 'closure'))
            self.assertTrue(isfile(join(written, 'polygon.svg')))
            report = load_report(join(written, 'report.json'))
        self.assertEqual(report['command'], 'closure')
        self.assertEqual(report['results'], {'count': 9})
        self.assertEqual(report['assertions'], {'extension_closed': True})
        self.assertTrue(report['passed'])
        self.assertNotIn('timings', report)

    def test_failures(self):
        manager = ReportManager('e-check', {}, timings=True)
        manager.add_assertion('E_2', True)
        manager.add_assertion('E_3', False)
        self.assertFalse(manager.passed)
        self.assertEqual(manager.failures(), ['E_3'])
        self.assertIn('E_3', str(manager))
        manager.start('closure')
        manager.stop('closure')
        self.assertIn('closure', manager.content()['timings'])

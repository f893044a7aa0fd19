from unittest import TestCase
from unittest.mock import patch
from tempfile import TemporaryDirectory
from os import environ
from os.path import join

from NegCat.Core.Pipelines.RunConfig import RunConfig, DEFAULTS


class TestRunConfig(TestCase):

    def setUp(self):
        self.environment = patch.dict(environ)
        self.environment.start()
        environ.pop('NEGCAT_THREADS', None)

    def tearDown(self):
        self.environment.stop()

    def test_init(self):
        # Default values
        config = RunConfig()
        self.assertEqual(config.run_config._fields, tuple(DEFAULTS))
        self.assertEqual(config.n, 4)
        self.assertEqual(config.ambient_config.ambient, 'orbit')
        self.assertEqual(config.ambient_config.ambient_config.window_radius, 2)
        # None values keep the defaults
        self.assertEqual(RunConfig(seed=None).seed, 0)
        with self.assertRaises(AttributeError):
            config.unknown
        # ValueError
        with self.assertRaises(ValueError):
            RunConfig(unknown=1)
        with self.assertRaises(ValueError):
            RunConfig(samples=0)
        with self.assertRaises(ValueError):
            RunConfig(monoid_bound=-1)
        with self.assertRaises(ValueError):
            RunConfig(ambient='orbit', w=0)
        # TypeError
        with self.assertRaises(TypeError):
            RunConfig(seed='1')
        with self.assertRaises(TypeError):
            RunConfig(sms=['0,3', 1])
        with self.assertRaises(TypeError):
            RunConfig(timings=1)
        self.assertEqual(RunConfig(monoid_bound=0).monoid_bound, 0)

    def test_threads(self):
        self.assertEqual(RunConfig(threads=4).threads, 4)
        environ['NEGCAT_THREADS'] = '2'
        self.assertEqual(RunConfig(threads=4).threads, 2)
        self.assertEqual(RunConfig(threads=1).threads, 1)
        environ['NEGCAT_THREADS'] = 'two'
        with self.assertRaises(ValueError):
            RunConfig()

    def test_from_toml(self):
        with self.assertRaises(ValueError):
            RunConfig.from_toml('missing.toml')
        with TemporaryDirectory() as directory:
            path = join(directory, 'run.toml')
            with open(path, 'w') as file:
                file.write('ambient = "derived"\nn = 3\nsms = ["P3", "S2"]\nshift_window = [0, 1]\n')
            config = RunConfig.from_toml(path, n=4, seed=None)
        self.assertEqual(config.ambient, 'derived')
        self.assertEqual(config.n, 4)
        self.assertEqual(config.sms, ['P3', 'S2'])
        self.assertEqual(config.ambient_config.ambient_config.shift_window, (0, 1))
        inputs = config.inputs()
        self.assertNotIn('output_dir', inputs)
        self.assertNotIn('threads', inputs)
        self.assertEqual(list(inputs), sorted(inputs))

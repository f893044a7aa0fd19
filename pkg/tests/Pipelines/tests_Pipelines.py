from unittest import TestCase
from os import listdir
from os.path import dirname, isdir, join

import NegCat.Core
import NegCat.Core.Manager
import NegCat.Core.Pipelines
from NegCat.Core.Pipelines.RunConfig import RunConfig
from NegCat.Core.Pipelines.SnakeSuite import SnakeSuite
from NegCat.Core.Pipelines.FunctorLaws import FunctorLaws


class TestPipelines(TestCase):

    def config(self, **kwargs):
        return RunConfig(ambient='derived', n=3, sms=['P3', 'S2'], **kwargs)

    def test_init(self):
        with self.assertRaises(TypeError):
            SnakeSuite({'sms': ['P3', 'S2']})
        with self.assertRaises(ValueError):
            SnakeSuite(RunConfig(ambient='derived', n=3))
        suite = SnakeSuite(self.config(samples=3))
        self.assertEqual(len(suite.subcategory.indecomposables), 3)
        self.assertEqual(len(suite.sigma_a_star_a()), 6)
        x = suite.random_object()
        self.assertTrue(1 <= len(x) <= 2)
        self.assertTrue(all(s in suite.sigma_a_star_a() for s in x))

    def test_snake_suite(self):
        results = SnakeSuite(self.config(samples=5, seed=1)).execute()
        self.assertEqual(results['requested'], 5)
        self.assertEqual(results['failures'], [])
        self.assertEqual(results['exact'], results['triangles'])
        self.assertGreater(results['triangles'], 0)
        # Same seed, same suite, whatever the number of threads
        self.assertEqual(SnakeSuite(self.config(samples=5, seed=1, threads=2)).execute(), results)

    def test_functor_laws(self):
        results = FunctorLaws(self.config(pairs=5, seed=2)).execute()
        self.assertEqual(results['pairs'], 5)
        self.assertEqual(results['lawful'], 5)
        self.assertEqual(results['failures'], [])
        self.assertEqual(results['round_trips'], [])
        self.assertNotIn('round_trips', FunctorLaws(self.config(pairs=1), round_trips=False).execute())

    def test_packages(self):
        package = dirname(NegCat.Core.__file__)
        areas = sorted(d for d in listdir(package) if isdir(join(package, d)) and not d.startswith('__'))
        self.assertEqual(sorted(NegCat.Core.__all__), areas)
        self.assertIs(NegCat.Core.Pipelines.SnakeSuite, SnakeSuite)
        self.assertIs(NegCat.Core.Pipelines.FunctorLaws, FunctorLaws)
        self.assertIs(NegCat.Core.Pipelines.RunConfig, RunConfig)
        for module in (NegCat.Core.Pipelines, NegCat.Core.Manager):
            self.assertTrue(all(hasattr(module, name) for name in module.__all__))

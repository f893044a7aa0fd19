from unittest import TestCase

from NegCat.Core.TypeA.TypeAModules import TypeAModules
from NegCat.Core.TypeA.Interval import Interval, ModuleObject, all_intervals, interval_label


class TestTypeAModules(TestCase):

    def setUp(self):
        self.modules = TypeAModules(n=3)

    def test_init(self):
        # TypeError
        with self.assertRaises(TypeError):
            TypeAModules(n='3')
        # ValueError
        with self.assertRaises(ValueError):
            TypeAModules(n=0)
        with self.assertRaises(ValueError):
            TypeAModules(n=3, prime=4)
        self.assertEqual(len(self.modules.intervals), 6)
        self.assertEqual(len(all_intervals(4)), 10)

    def test_named_modules(self):
        self.assertEqual(self.modules.projective(2), Interval(2, 3))
        self.assertEqual(self.modules.injective(2), Interval(1, 2))
        self.assertEqual(self.modules.simple(2), Interval(2, 2))
        with self.assertRaises(ValueError):
            self.modules.projective(4)
        self.assertEqual(interval_label(Interval(3, 3), 3), 'P(3)')
        self.assertEqual(interval_label(Interval(1, 2), 3), 'I(2)')
        self.assertEqual(interval_label(Interval(2, 2), 3), 'S(2)')
        self.assertEqual(interval_label(Interval(2, 3), 4), '[2,3]')

    def test_hom(self):
        p3, p2, s2 = Interval(3, 3), Interval(2, 3), Interval(2, 2)
        self.assertEqual(self.modules.hom_dim(p3, p2), 1)
        self.assertEqual(self.modules.hom_dim(p2, s2), 1)
        self.assertEqual(self.modules.hom_dim(p3, s2), 0)
        self.assertEqual(self.modules.hom_dim(s2, p2), 0)

    def test_ext(self):
        p3, s2 = Interval(3, 3), Interval(2, 2)
        self.assertEqual(self.modules.ext1_dim(s2, p3), 1)
        self.assertEqual(self.modules.ext1_dim(p3, s2), 0)
        self.assertEqual(self.modules.ext1_dim(s2, s2), 0)
        # The resolution formula agrees with the closed form
        for n in range(1, 6):
            modules = TypeAModules(n)
            for x in modules.intervals:
                for y in modules.intervals:
                    self.assertEqual(modules.ext1_dim(x, y), modules.ext1_closed_form(x, y))

    def test_tau(self):
        self.assertIsNone(self.modules.tau(Interval(1, 3)))
        self.assertEqual(self.modules.tau(Interval(2, 2)), Interval(3, 3))
        self.assertEqual(self.modules.tau(Interval(1, 2)), Interval(2, 3))
        self.assertEqual(self.modules.tau_inverse(Interval(3, 3)), Interval(2, 2))
        self.assertIsNone(self.modules.tau_inverse(Interval(1, 2)))
        # AR duality Ext1(x, y) = D Hom(y, tau x)
        for x in self.modules.intervals:
            if self.modules.is_projective(x):
                continue
            for y in self.modules.intervals:
                self.assertEqual(self.modules.ext1_dim(x, y), self.modules.hom_dim(y, self.modules.tau(x)))

    def test_module_object(self):
        m = ModuleObject([(2, 3), (1, 1), (2, 3)])
        self.assertEqual(m.summands, (Interval(1, 1), Interval(2, 3), Interval(2, 3)))
        self.assertEqual(m.dimension_vector(3), (1, 2, 2))
        self.assertEqual(m + ModuleObject([(1, 1)]), ModuleObject([(1, 1), (1, 1), (2, 3), (2, 3)]))
        self.assertEqual(str(ModuleObject()), '0')

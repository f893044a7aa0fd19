from unittest import TestCase

from NegCat.Core.Ambient.AmbientConfig import AmbientConfig, parse_indecomposable
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Abelian.Extensions import Conflation
from NegCat.Core.Abelian.SimpleMindedSystem import SimpleMindedSystem, is_sms
from NegCat.Core.Orbit.Diagonal import Diagonal

SIMPLES = [(0, 3), (4, 11), (5, 8), (12, 15)]
EXAMPLE = [(0, 3), (0, 11), (0, 15), (4, 11), (4, 15), (8, 11), (8, 15), (12, 15), (5, 8)]


class TestAbelianSubcategory(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ambient = AmbientConfig(ambient='orbit', w=3, n=4).create_ambient()
        cls.sub = AbelianSubcategory.extension_closure(cls.ambient, [Diagonal(*s) for s in SIMPLES])

    def obj(self, *diagonals):
        return self.ambient.make_object(diagonals)

    def test_closure(self):
        self.assertEqual(self.sub.simples, [Diagonal(*s) for s in SIMPLES])
        self.assertEqual(len(self.sub.indecomposables), 9)
        self.assertEqual(set(self.sub.indecomposables), {Diagonal(*d) for d in EXAMPLE})
        self.assertTrue(self.sub.table.is_extension_closed(self.sub.indecomposables))

    def test_class_vectors(self):
        expected = {(0, 3): (1, 0, 0, 0), (4, 11): (0, 1, 0, 0), (5, 8): (0, 0, 1, 0), (12, 15): (0, 0, 0, 1),
                    (0, 11): (1, 1, 0, 0), (0, 15): (1, 1, 0, 1), (4, 15): (0, 1, 0, 1), (8, 11): (0, 1, 1, 0),
                    (8, 15): (0, 1, 1, 1)}
        for d, vector in expected.items():
            self.assertEqual(self.sub.class_vectors[Diagonal(*d)], vector)
        self.assertEqual(self.sub.class_vector(self.obj((0, 15), (0, 3))), (2, 1, 0, 1))
        self.assertEqual(self.sub.length(self.obj((8, 15))), 3)
        with self.assertRaises(ValueError):
            self.sub.class_vector(self.obj((1, 4)))

    def test_objects(self):
        self.assertTrue(self.sub.contains(self.obj((0, 3), (8, 15))))
        self.assertFalse(self.sub.contains(self.obj((0, 3), (1, 4))))
        self.assertTrue(self.sub.contains(self.ambient.make_object()))
        self.assertEqual(len(self.sub.objects(1)), 9)
        self.assertEqual(len(self.sub.objects(2)), 9 + 45)

    def test_conditions(self):
        self.assertTrue(self.sub.satisfies_En(1))
        self.assertTrue(self.sub.satisfies_En(2))
        conflations = self.sub.conflations(1)
        self.assertIn(Conflation(self.obj((0, 3)), self.obj((0, 11)), self.obj((4, 11))), conflations)
        for c in conflations:
            self.assertTrue(self.sub.contains(c.y))
            self.assertEqual(self.sub.class_vector(c.y),
                             tuple(a + b for a, b in zip(self.sub.class_vector(c.x), self.sub.class_vector(c.z))))

    def test_derived(self):
        ambient = AmbientConfig(ambient='derived', n=3).create_ambient()
        p3, s2, p2 = (parse_indecomposable(ambient, t) for t in ('P3', 'S2', 'P2'))
        sub = AbelianSubcategory.extension_closure(ambient, [p3, s2])
        self.assertEqual(sub.simples, [s2, p3])
        self.assertEqual(set(sub.indecomposables), {s2, p2, p3})
        self.assertEqual(sub.class_vectors[s2], (1, 0))
        self.assertEqual(sub.class_vectors[p3], (0, 1))
        self.assertEqual(sub.class_vectors[p2], (1, 1))
        self.assertTrue(sub.satisfies_En(2))

    def test_w1(self):
        # Hom(s, Sigma^-1 s) = D Hom(s, s) in the (-1)-Calabi-Yau case
        for n in (2, 3, 4):
            ambient = AmbientConfig(ambient='orbit', w=1, n=n).create_ambient()
            simples = [Diagonal(2 * i, 2 * i + 1) for i in range(n)]
            self.assertFalse(SimpleMindedSystem(ambient, simples).generates_proper_abelian())
            with self.assertRaises(ValueError):
                AbelianSubcategory.extension_closure(ambient, simples)
        ambient = AmbientConfig(ambient='orbit', w=1, n=2).create_ambient()
        self.assertTrue(is_sms(ambient, [Diagonal(0, 1), Diagonal(2, 3)]))
        self.assertTrue(SimpleMindedSystem(self.ambient, [Diagonal(*s) for s in SIMPLES]).generates_proper_abelian())

from unittest import TestCase

from NegCat.Core.Ambient.AmbientConfig import AmbientConfig
from NegCat.Core.Orbit.Diagonal import Diagonal, OrbitObject, is_admissible, crossing, share_endpoint

# Indecomposables of the abelian subcategory generated by (0,3), (4,11), (5,8), (12,15)
EXAMPLE = [(0, 3), (0, 11), (0, 15), (4, 11), (4, 15), (8, 11), (8, 15), (12, 15), (5, 8)]


class TestOrbitCategory(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ambient = AmbientConfig(ambient='orbit', w=3, n=4).create_ambient()

    def basis_map(self, a, b):
        return self.ambient.hom_basis(self.ambient.object_of(Diagonal(*a)), self.ambient.object_of(Diagonal(*b)))[0]

    def test_diagonals(self):
        self.assertEqual(self.ambient.N, 18)
        indecs = self.ambient.indecomposables()
        self.assertEqual(len(indecs), 36)
        self.assertEqual(indecs, sorted(indecs))
        for d in EXAMPLE:
            self.assertIn(Diagonal(*d), indecs)
        self.assertTrue(all(is_admissible(d, 3, 18) for d in indecs))
        with self.assertRaises(ValueError):
            self.ambient.check_diagonal((0, 4))
        self.assertEqual(self.ambient.check_diagonal((11, 0)), Diagonal(0, 11))

    def test_diagonal_helpers(self):
        self.assertEqual(Diagonal.of(20, 3, 18), Diagonal(2, 3))
        self.assertEqual(Diagonal(12, 15).rotated(4, 18), Diagonal(1, 16))
        self.assertTrue(crossing(Diagonal(0, 3), Diagonal(1, 4)))
        self.assertFalse(crossing(Diagonal(0, 3), Diagonal(4, 11)))
        self.assertFalse(crossing(Diagonal(0, 15), Diagonal(4, 11)))
        self.assertTrue(share_endpoint(Diagonal(0, 3), Diagonal(0, 11)))
        self.assertEqual(OrbitObject([(11, 0), (0, 3)]).summands, (Diagonal(0, 3), Diagonal(0, 11)))

    def test_lift(self):
        up = self.ambient.upstairs
        for d in self.ambient.indecomposables():
            lifted = self.ambient.lift(d)
            self.assertTrue(self.ambient.is_canonical(lifted))
            self.assertEqual(self.ambient.project(lifted), d)
            self.assertEqual(self.ambient.project(up.twist(lifted, 1)), d)
            self.assertEqual(self.ambient.twist_offset(up.twist(lifted, 1)), 1)
            self.assertEqual(self.ambient.twist_offset(up.twist(lifted, -2)), -2)

    def test_shift(self):
        self.assertEqual(self.ambient.shift_indecomposable(Diagonal(0, 3), 1)[0], Diagonal(1, 4))
        for d in self.ambient.indecomposables():
            self.assertEqual(self.ambient.shift_indecomposable(d, 1)[0], self.ambient.shift_rotation(d))
            self.assertEqual(self.ambient.shift_indecomposable(d, 18)[0], d)
            self.assertEqual(self.ambient.tau(d), d.rotated(-4, 18))
            self.assertEqual(self.ambient.serre(d), d.rotated(-3, 18))
        x = self.ambient.make_object([(0, 3), (4, 11)])
        self.assertEqual(self.ambient.shift(x, 1), self.ambient.make_object([(1, 4), (5, 12)]))

    def test_hom(self):
        hom = self.ambient.hom_dim
        d = {a: self.ambient.object_of(Diagonal(*a)) for a in EXAMPLE}
        self.assertEqual(hom(d[(0, 3)], d[(0, 11)]), 1)
        self.assertEqual(hom(d[(0, 11)], d[(0, 3)]), 0)
        self.assertEqual(hom(d[(0, 11)], d[(4, 11)]), 1)
        self.assertEqual(hom(d[(0, 3)], d[(0, 3)]), 1)
        # Hom is additive
        self.assertEqual(hom(d[(0, 3)] + d[(0, 3)], d[(0, 11)] + d[(0, 15)]), 4)

    def test_serre_duality(self):
        # Hom(x, y) and Hom(y, Sigma^-w x) have the same dimension
        for ambient in (self.ambient, AmbientConfig(ambient='orbit', w=2, n=3).create_ambient()):
            indecs = ambient.indecomposables()
            for x in indecs:
                serre_x = ambient.serre(x)
                self.assertEqual(serre_x, ambient.shift_rotation(x, -ambient.w))
                for y in indecs:
                    self.assertEqual(ambient.hom_dim_C(ambient.object_of(x), ambient.object_of(y)),
                                     ambient.hom_dim_C(ambient.object_of(y), ambient.object_of(serre_x)),
                                     f"w={ambient.w}, x={x}, y={y}")

    def test_cone(self):
        t = self.ambient.cone(self.basis_map((0, 3), (0, 11)))
        self.assertEqual(t.z, self.ambient.object_of(Diagonal(4, 11)))
        self.assertTrue(self.ambient.compose(t.g, t.f).is_zero())
        self.assertTrue(self.ambient.hom_long_exact_check(t))
        t = self.ambient.cone(self.basis_map((0, 11), (4, 11)))
        self.assertEqual(t.z, self.ambient.object_of(Diagonal(1, 4)))
        # Too small a window
        small = AmbientConfig(ambient='orbit', w=3, n=4, window_radius=1, max_window_radius=2).create_ambient()
        f = small.hom_basis(small.object_of(Diagonal(0, 3)), small.object_of(Diagonal(0, 11)))[0]
        with self.assertRaises(ValueError):
            small.cone(f)

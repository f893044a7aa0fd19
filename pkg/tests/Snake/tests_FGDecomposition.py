from unittest import TestCase

from NegCat.Core.Ambient.AmbientConfig import AmbientConfig, parse_indecomposable
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Snake.FGDecomposition import FGFunctors
from NegCat.Core.Orbit.Diagonal import Diagonal

SIMPLES = [(0, 3), (4, 11), (5, 8), (12, 15)]


class TestFGDecomposition(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ambient = AmbientConfig(ambient='orbit', w=3, n=4).create_ambient()
        cls.sub = AbelianSubcategory.extension_closure(cls.ambient, [Diagonal(*s) for s in SIMPLES])
        cls.functors = FGFunctors(cls.sub)

    def obj(self, *diagonals):
        return self.ambient.make_object(diagonals)

    def test_objects(self):
        a = self.obj((0, 11))
        self.assertTrue(self.functors.F(a).is_zero())
        self.assertEqual(self.functors.G(a), a)
        sa = self.ambient.shift(a)
        self.assertEqual(sa, self.obj((1, 12)))
        self.assertEqual(self.functors.F(sa), a)
        self.assertTrue(self.functors.G(sa).is_zero())
        # Sigma A * A holds more than A and Sigma A
        mixed = self.functors.decompose(self.obj((1, 8)))
        self.assertIsNotNone(mixed)
        self.assertFalse(mixed.f_part.is_zero())
        self.assertFalse(mixed.g_part.is_zero())
        self.assertTrue(self.sub.contains(mixed.f_part) and self.sub.contains(mixed.g_part))
        self.assertEqual(mixed.phi.source, self.ambient.shift(mixed.f_part))
        self.assertEqual(mixed.psi.target, mixed.g_part)
        # Sums
        total = self.functors.decompose(self.obj((0, 3), (1, 4)))
        self.assertEqual(total.f_part, self.obj((0, 3)))
        self.assertEqual(total.g_part, self.obj((0, 3)))

    def test_outside(self):
        outside = [d for d in self.ambient.indecomposables() if not self.functors.contains(self.ambient.object_of(d))]
        self.assertGreater(len(outside), 0)
        with self.assertRaises(ValueError):
            self.functors.F(self.ambient.object_of(outside[0]))

    def test_morphisms(self):
        a, b = self.obj((0, 3)), self.obj((0, 11))
        f = self.ambient.hom_basis(a, b)[0]
        sf = self.ambient.shift_morphism(f)
        # G is the identity on A and F vanishes there
        self.assertEqual(self.functors.G_mor(f), f)
        self.assertTrue(self.functors.F_mor(f).is_zero())
        # F undoes the shift on Sigma A
        self.assertEqual(self.functors.F_mor(sf), f)
        self.assertTrue(self.functors.G_mor(sf).is_zero())
        c = self.obj((1, 8))
        self.assertEqual(self.functors.F_mor(self.ambient.identity(c)), self.ambient.identity(self.functors.F(c)))
        self.assertEqual(self.functors.G_mor(self.ambient.identity(c)), self.ambient.identity(self.functors.G(c)))

    def test_derived(self):
        ambient = AmbientConfig(ambient='derived', n=3).create_ambient()
        p3, s2 = parse_indecomposable(ambient, 'P3'), parse_indecomposable(ambient, 'S2')
        functors = FGFunctors(AbelianSubcategory.extension_closure(ambient, [p3, s2]))
        p2 = ambient.object_of(parse_indecomposable(ambient, 'P2'))
        self.assertEqual(functors.G(p2), p2)
        self.assertEqual(functors.F(ambient.shift(p2)), p2)
        self.assertFalse(functors.contains(ambient.object_of(parse_indecomposable(ambient, 'S1'))))

    def members(self):
        indecs = [self.ambient.object_of(d) for d in self.ambient.indecomposables()]
        return [c for c in indecs if self.functors.contains(c)]

    def test_deletion_order(self):
        # The minimal approximation does not depend on the order of the greedy deletion
        for c in self.members():
            size = sum(len(self.ambient.hom_basis(self.ambient.shift(self.ambient.object_of(a)), c))
                       for a in self.sub.indecomposables)
            natural = self.functors.decompose(c)
            interleaved = [j for j in range(size) if j % 2] + [j for j in range(size) if not j % 2]
            for order in (list(reversed(range(size))), interleaved):
                other = self.functors.decompose(c, order=order)
                self.assertIsNotNone(other)
                self.assertEqual(other.f_part, natural.f_part, f"F({c}) with order {order}")
                self.assertEqual(other.g_part, natural.g_part, f"G({c}) with order {order}")

    def test_naturality(self):
        ambient, functors = self.ambient, self.functors
        members = self.members()
        for x in members:
            dx = functors.decompose(x)
            for y in members:
                dy = functors.decompose(y)
                for f in ambient.hom_basis(x, y):
                    # psi and phi are natural transformations
                    self.assertEqual(ambient.compose(functors.G_mor(f), dx.psi), ambient.compose(dy.psi, f))
                    self.assertEqual(ambient.compose(dy.phi, ambient.shift_morphism(functors.F_mor(f), 1)),
                                     ambient.compose(f, dx.phi))
        # F and G respect composition
        for x in members:
            for y in [y for y in members if ambient.hom_dim(x, y)]:
                for z in [z for z in members if ambient.hom_dim(y, z)]:
                    for f in ambient.hom_basis(x, y):
                        for g in ambient.hom_basis(y, z):
                            gf = ambient.compose(g, f)
                            self.assertEqual(functors.G_mor(gf), ambient.compose(functors.G_mor(g), functors.G_mor(f)))
                            self.assertEqual(functors.F_mor(gf), ambient.compose(functors.F_mor(g), functors.F_mor(f)))

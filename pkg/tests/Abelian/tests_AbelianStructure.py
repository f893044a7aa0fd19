from unittest import TestCase

from NegCat.Core.Ambient.AmbientConfig import AmbientConfig
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Abelian.AbelianStructure import AbelianStructure, bound_quiver_modules, fingerprint_check
from NegCat.Core.Orbit.Diagonal import Diagonal
from NegCat.Core.Linalg.FiniteField import all_vectors

SIMPLES = [(0, 3), (4, 11), (5, 8), (12, 15)]
# Indecomposables in the order 1, 2/1, 4/2/1, 2, 4/2, 3/2, (34)/2, 4, 3
EXAMPLE = [(0, 3), (0, 11), (0, 15), (4, 11), (4, 15), (8, 11), (8, 15), (12, 15), (5, 8)]


class TestAbelianStructure(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ambient = AmbientConfig(ambient='orbit', w=3, n=4).create_ambient()
        cls.sub = AbelianSubcategory.extension_closure(cls.ambient, [Diagonal(*s) for s in SIMPLES])
        cls.structure = AbelianStructure(cls.sub)

    def obj(self, *diagonals):
        return self.ambient.make_object(diagonals)

    def basis_map(self, a, b):
        basis = self.ambient.hom_basis(self.obj(a), self.obj(b))
        self.assertEqual(len(basis), 1)
        return basis[0]

    def test_kernel_cokernel(self):
        # 0 -> 1 -> 2/1 -> 2 -> 0
        f = self.basis_map((0, 3), (0, 11))
        g = self.basis_map((0, 11), (4, 11))
        self.assertTrue(self.structure.kernel(f).is_zero())
        self.assertEqual(self.structure.cokernel(f), self.obj((4, 11)))
        self.assertEqual(self.structure.kernel(g), self.obj((0, 3)))
        self.assertTrue(self.structure.cokernel(g).is_zero())
        self.assertTrue(self.structure.is_mono(f) and not self.structure.is_epi(f))
        self.assertTrue(self.structure.is_epi(g) and not self.structure.is_mono(g))
        self.assertEqual(self.structure.image_length(f), 1)
        self.assertEqual(self.structure.image_length(g), 1)
        # ValueError
        with self.assertRaises(ValueError):
            self.structure.kernel(self.ambient.zero(self.obj((1, 4)), self.obj((0, 11))))

    def cokernel_by_search(self, f):
        # Longest quotient q of the target with f vanishing on it
        ambient, sub = self.ambient, self.sub
        best, best_length = ambient.make_object(), 0
        for q in sub.objects(2):
            if sub.length(q) > sub.length(f.target) or sub.length(q) <= best_length:
                continue
            for v in all_vectors(len(ambient.basis_entries(f.target, q)), ambient.prime):
                pi = ambient.from_coordinates(f.target, q, v)
                if ambient.compose(pi, f).is_zero() and self.structure.yoneda_epi(pi):
                    best, best_length = q, sub.length(q)
                    break
        return best

    def test_all_basis_maps(self):
        diagonals = [Diagonal(*d) for d in EXAMPLE]
        self.assertTrue(fingerprint_check(self.sub, diagonals, bound_quiver_modules()))
        count = 0
        for a in diagonals:
            for b in diagonals:
                for f in self.ambient.hom_basis(self.obj(a), self.obj(b)):
                    kernel, cokernel = self.structure.kernel(f), self.structure.cokernel(f)
                    self.assertTrue(self.sub.contains(kernel) and self.sub.contains(cokernel))
                    self.assertEqual(kernel, self.structure.kernel_by_search(f), f"kernel of {a} -> {b}")
                    self.assertEqual(cokernel, self.cokernel_by_search(f), f"cokernel of {a} -> {b}")
                    # Both sides of 0 -> ker -> a -> b -> coker -> 0 give the class of the image
                    image = [x - y for x, y in zip(self.sub.class_vector(f.source), self.sub.class_vector(kernel))]
                    self.assertEqual(image, [x - y for x, y in zip(self.sub.class_vector(f.target),
                                                                    self.sub.class_vector(cokernel))])
                    self.assertGreater(sum(image), 0)
                    count += 1
        # Identities and maps between distinct indecomposables
        self.assertGreater(count, 9)

    def test_exactness(self):
        f = self.basis_map((0, 3), (0, 11))
        g = self.basis_map((0, 11), (4, 11))
        self.assertTrue(self.structure.is_exact([f, g]))
        self.assertTrue(self.structure.is_exact([]))
        self.assertFalse(self.structure.is_exact([g]))
        with self.assertRaises(ValueError):
            self.structure.is_exact([g, f])

    def test_yoneda(self):
        f = self.basis_map((0, 3), (0, 11))
        g = self.basis_map((0, 11), (4, 11))
        self.assertTrue(self.structure.yoneda_mono(f))
        self.assertFalse(self.structure.yoneda_mono(g))
        self.assertTrue(self.structure.yoneda_epi(g))
        self.assertFalse(self.structure.yoneda_epi(f))
        self.assertEqual(self.structure.kernel_by_search(g), self.obj((0, 3)))
        self.assertTrue(self.structure.kernel_by_search(f).is_zero())

    def test_subobjects(self):
        self.assertEqual(self.structure.indecomposable_subobjects(Diagonal(0, 15)),
                         frozenset({Diagonal(0, 3), Diagonal(0, 11), Diagonal(0, 15)}))
        self.assertEqual(self.structure.indecomposable_subobjects(Diagonal(5, 8)), frozenset({Diagonal(5, 8)}))

    def test_fingerprint(self):
        modules = bound_quiver_modules()
        self.assertEqual(len(modules), 9)
        diagonals = [Diagonal(*d) for d in EXAMPLE]
        self.assertTrue(fingerprint_check(self.sub, diagonals, modules))
        swapped = [diagonals[3], diagonals[1], diagonals[2], diagonals[0]] + diagonals[4:]
        self.assertFalse(fingerprint_check(self.sub, swapped, modules))

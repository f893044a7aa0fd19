from unittest import TestCase

from NegCat.Core.Ambient.AmbientConfig import AmbientConfig, parse_indecomposable
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Abelian.AbelianStructure import AbelianStructure
from NegCat.Core.Intermediate.IntermediateCategory import IntermediateCategory
from NegCat.Core.Orbit.Diagonal import Diagonal

SIMPLES = [(0, 3), (4, 11), (5, 8), (12, 15)]
TORSION_FREE = [(0, 3), (0, 11), (4, 11), (8, 11)]


class TestIntermediateCategory(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.derived = AmbientConfig(ambient='derived', n=3).create_ambient()
        cls.p3, cls.s2, cls.p2 = (parse_indecomposable(cls.derived, t) for t in ('P3', 'S2', 'P2'))
        structure = AbelianStructure(AbelianSubcategory.extension_closure(cls.derived, [cls.p3, cls.s2]))
        cls.derived_intermediate = IntermediateCategory(structure)
        cls.orbit = AmbientConfig(ambient='orbit', w=3, n=4).create_ambient()
        structure = AbelianStructure(AbelianSubcategory.extension_closure(cls.orbit, [Diagonal(*s) for s in SIMPLES]))
        cls.orbit_intermediate = IntermediateCategory(structure)

    def test_induced_derived(self):
        intermediate = self.derived_intermediate
        induced = intermediate.induced_intermediate([self.p3, self.p2])
        shifted = {self.derived.shift_data(x, 1)[0] for x in (self.p3, self.p2)}
        self.assertEqual(set(induced), {self.s2, self.p2, self.p3} | shifted)
        self.assertTrue(intermediate.is_intermediate(induced))
        self.assertEqual(intermediate.F_of(induced), tuple(sorted([self.p3, self.p2])))
        self.assertEqual(set(intermediate.induced_intermediate([])), {self.s2, self.p2, self.p3})
        with self.assertRaises(ValueError):
            intermediate.induced_intermediate([self.p2])

    def test_induced_orbit(self):
        intermediate = self.orbit_intermediate
        induced = intermediate.induced_intermediate([Diagonal(*d) for d in TORSION_FREE])
        self.assertEqual(len(induced), 14)
        extras = set(induced) - intermediate.subcategory.members
        self.assertEqual(extras, {Diagonal(1, 4), Diagonal(1, 12), Diagonal(5, 12), Diagonal(9, 12), Diagonal(1, 8)})
        self.assertTrue(intermediate.is_intermediate(induced))
        self.assertEqual(intermediate.F_of(induced), tuple(sorted(Diagonal(*d) for d in TORSION_FREE)))
        self.assertEqual(intermediate.induced_intermediate([]), tuple(intermediate.subcategory.indecomposables))

    def test_is_intermediate(self):
        intermediate = self.orbit_intermediate
        members = intermediate.subcategory.indecomposables
        self.assertTrue(intermediate.is_intermediate(members))
        self.assertFalse(intermediate.is_intermediate(members[1:]))
        # (2,5) is outside Sigma A * A
        self.assertFalse(intermediate.is_intermediate(list(members) + [Diagonal(2, 5)]))
        # Sigma (0,11) without Sigma (0,3) is not extension-closed
        self.assertFalse(intermediate.is_intermediate(list(members) + [Diagonal(1, 12)]))

    def test_bijection(self):
        report = self.derived_intermediate.bijection_check()
        self.assertTrue(report['applicable'])
        self.assertEqual((report['torsion_free'], report['intermediate']), (5, 5))
        self.assertTrue(report['bijection'])
        self.assertEqual(report['unmatched_torsion_free'], [])
        report = self.orbit_intermediate.bijection_check()
        self.assertEqual((report['torsion_free'], report['intermediate']), (37, 37))
        self.assertTrue(report['bijection'])

    def test_order(self):
        # F -> Sigma F * A preserves and reflects inclusion
        intermediate = self.orbit_intermediate
        classes = intermediate.torsion_free.enumerate()
        self.assertEqual(len(classes), 37)
        induced = {f: set(intermediate.induced_intermediate(f)) for f in classes}
        for f in classes:
            self.assertEqual(intermediate.F_of(induced[f]), tuple(sorted(f)))
            for g in classes:
                self.assertEqual(set(f) <= set(g), induced[f] <= induced[g], f"{f} and {g}")
        self.assertEqual(len({frozenset(c) for c in induced.values()}), 37)

    def test_bijection_not_applicable(self):
        ambient = AmbientConfig(ambient='orbit', w=3, n=3).create_ambient()
        simples = [Diagonal(0, 3), Diagonal(4, 7), Diagonal(9, 12)]
        intermediate = IntermediateCategory(AbelianStructure(AbelianSubcategory.extension_closure(ambient, simples)))
        report = intermediate.bijection_check()
        self.assertFalse(report['applicable'])
        self.assertFalse(report['star_equality']['star_equality'])
        self.assertGreater(report['torsion_free'], 0)
        self.assertGreater(report['intermediate'], 0)
        self.assertEqual(len(report['matching']) + len(report['unmatched_torsion_free']), report['torsion_free'])
        self.assertEqual(len(report['matching']) + len(report['unmatched_intermediate']), report['intermediate'])

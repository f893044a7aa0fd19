from typing import Any, Dict, Iterable, List

from NegCat.Core.Abelian.AbelianStructure import AbelianStructure
from NegCat.Core.Abelian.Extensions import Conflation
from NegCat.Core.Intermediate.IntermediateCategory import IntermediateCategory
from NegCat.Core.Monoid.MonoidPresentation import MonoidPresentation, Vector, monoid_of, YES, UNKNOWN
from NegCat.Core.Monoid.LocalizedMonoid import LocalizedMonoid, localize


class LocalizationCheck:

    def __init__(self,
                 structure: AbelianStructure,
                 torsion_free: Iterable[Any],
                 bound: int = 2,
                 conflation_bound: int = 1,
                 max_states: int = 200000,
                 verbose: bool = False):
        """
        LocalizationCheck compares the Grothendieck monoid of C = Sigma F * A with the localization M(A)[S^-1] at the
        classes of the indecomposables of F. The comparison map sends (m, s) to m + [Sigma s].
        Every equality is decided up to 'bound', and undecided equalities are reported as unknown.

        :param structure: Abelian structure of A.
        :param torsion_free: Torsion-free class F of A.
        :param bound: Bound of the equality tests.
        :param conflation_bound: Maximal number of summands of the end terms of the conflations.
        :param max_states: Maximal number of words explored by a single equality test.
        :param verbose: If True, print the unknown equalities.
        """

        self.name: str = self.__class__.__name__
        if type(bound) != int or bound < 0:
            raise ValueError(f"[{self.name}] Wrong 'bound' value: non-negative int required, get {bound}")
        self.structure: AbelianStructure = structure
        self.subcategory = structure.subcategory
        self.functors = structure.functors
        self.ambient = structure.ambient
        self.bound: int = bound
        self.verbose: bool = verbose
        self.torsion_free: List[Any] = sorted(set(torsion_free))
        self.intermediate: List[Any] = list(IntermediateCategory(structure).induced_intermediate(self.torsion_free))
        self.unknown: List[str] = []

        # M(A) presented by the conflations of A
        self.monoid_A: MonoidPresentation = monoid_of(self.subcategory.indecomposables,
                                                      self.subcategory.conflations(conflation_bound), max_states)

        # M(C) presented by the conflations of C and the canonical triangles Sigma F(z) -> z -> G(z)
        conflations = self.subcategory.table.conflations(self.intermediate, conflation_bound)
        for z in self.intermediate:
            d = self.functors.decompose(self.ambient.object_of(z))
            if len(d.f_part) and len(d.g_part):
                conflations.append(Conflation(d.phi.source, d.c, d.g_part))
        self.monoid_C: MonoidPresentation = monoid_of(self.intermediate, conflations, max_states)

        self.localized: LocalizedMonoid = localize(self.monoid_A, [self.monoid_A.unit(f) for f in self.torsion_free])

    # ######################################################################################################## #
    #                                                Comparison                                                #
    # ######################################################################################################## #

    def phi(self, m: Vector, s: Vector) -> Vector:
        """Image of the fraction (m, s) in M(C)."""
        image = list(self.monoid_C.zero())
        for g, count in zip(self.monoid_A.generators, m):
            image[self.monoid_C.index[g]] += count
        for g, count in zip(self.monoid_A.generators, s):
            if count:
                image[self.monoid_C.index[self.ambient.shift_data(g, 1)[0]]] += count
        return tuple(image)

    def class_of(self, m: Vector) -> Vector:
        vector = [0] * len(self.subcategory.simples)
        for g, count in zip(self.monoid_A.generators, m):
            vector = [a + count * b for a, b in zip(vector, self.subcategory.class_vectors[g])]
        return tuple(vector)

    def key(self, z: Any) -> Vector:
        """Class vector of G(z) minus the class vector of F(z), the image of [z] in the Grothendieck group."""
        d = self.functors.decompose(self.ambient.object_of(z))
        g, f = self.subcategory.class_vector(d.g_part), self.subcategory.class_vector(d.f_part)
        return tuple(a - b for a, b in zip(g, f))

    def key_of(self, u: Vector) -> Vector:
        total = [0] * len(self.subcategory.simples)
        for z, count in zip(self.monoid_C.generators, u):
            if count:
                total = [a + count * b for a, b in zip(total, self.key(z))]
        return tuple(total)

    def __decide(self, monoid: MonoidPresentation, u: Vector, v: Vector, label: str) -> bool:
        answer = monoid.eq_bounded(u, v, self.bound)
        if answer == UNKNOWN:
            self.unknown.append(label)
            if self.verbose:
                print(f"[{self.name}] Undecided within bound {self.bound}: {label}")
        return answer == YES

    # ######################################################################################################## #
    #                                                  Checks                                                  #
    # ######################################################################################################## #

    def generators_reduced(self) -> bool:
        """Every [x], x in ind A, equals the combination of the simples given by its class vector in M(A)."""
        ok = True
        simples = [self.monoid_A.unit(s) for s in self.subcategory.simples]
        for x in self.subcategory.indecomposables:
            combination = self.monoid_A.zero()
            for count, s in zip(self.subcategory.class_vectors[x], simples):
                combination = tuple(a + count * b for a, b in zip(combination, s))
            ok &= self.__decide(self.monoid_A, self.monoid_A.unit(x), combination, f"[{x}] in M(A)")
        return ok

    def free_on_simples(self) -> bool:
        """Relations of M(A) preserve class vectors, so the simples stay independent."""
        return all(self.class_of(u) == self.class_of(v) for u, v in self.monoid_A.relations)

    def relations_respected(self) -> bool:
        return all(self.key_of(u) == self.key_of(v) for u, v in self.monoid_C.relations)

    def keys_compatible(self) -> bool:
        """The comparison map commutes with the maps to the Grothendieck group on generators."""
        for x in self.subcategory.indecomposables:
            if self.key(x) != self.subcategory.class_vectors[x]:
                return False
        for f in self.torsion_free:
            if self.key(self.ambient.shift_data(f, 1)[0]) != tuple(-a for a in self.subcategory.class_vectors[f]):
                return False
        return True

    def inverses(self) -> bool:
        """[f] + [Sigma f] = 0 in M(C) for every f in F."""
        ok = True
        for f in self.torsion_free:
            u = self.monoid_C.add(self.monoid_C.unit(f), self.monoid_C.unit(self.ambient.shift_data(f, 1)[0]))
            ok &= self.__decide(self.monoid_C, u, self.monoid_C.zero(), f"[{f}] + [Sigma {f}] in M(C)")
        return ok

    def surjective(self) -> bool:
        """[z] = phi([G z], [F z]) in M(C) for every z in C."""
        ok = True
        for z in self.intermediate:
            d = self.functors.decompose(self.ambient.object_of(z))
            m, s = self.monoid_A.vector(d.g_part), self.monoid_A.vector(d.f_part)
            ok &= self.__decide(self.monoid_C, self.monoid_C.unit(z), self.phi(m, s), f"[{z}] in M(C)")
        return ok

    def run(self) -> Dict[str, Any]:
        """
        Run every check. Injectivity holds when M(A) is free on the simples and the relations of M(C) preserve the
        Grothendieck group classes, since M(A)[S^-1] is then faithfully detected by class vectors.

        :return: Report of the checks, the verdict and the undecided equalities.
        """

        self.unknown = []
        checks = {'generators_reduced': self.generators_reduced(),
                  'free_on_simples': self.free_on_simples(),
                  'relations_respected': self.relations_respected(),
                  'keys_compatible': self.keys_compatible(),
                  'inverses': self.inverses(),
                  'surjective': self.surjective()}
        checks['injective'] = checks['generators_reduced'] and checks['free_on_simples'] and \
            checks['relations_respected'] and checks['keys_compatible']
        checks['isomorphism'] = all(checks.values()) and not self.unknown
        checks['unknown'] = list(self.unknown)
        checks['torsion_free'] = [str(f) for f in self.torsion_free]
        checks['intermediate'] = [str(z) for z in self.intermediate]
        checks['bound'] = self.bound
        checks['relations'] = {'M(A)': len(self.monoid_A.relations), 'M(C)': len(self.monoid_C.relations)}
        return checks


def localization_iso_check(structure: AbelianStructure,
                           torsion_free: Iterable[Any],
                           bound: int = 2,
                           conflation_bound: int = 1) -> Dict[str, Any]:
    return LocalizationCheck(structure, torsion_free, bound, conflation_bound).run()

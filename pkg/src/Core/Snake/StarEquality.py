from typing import Any, Dict, List, NamedTuple, Optional
from numpy import asarray, int64

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.Morphism import Morphism
from NegCat.Core.Abelian.AbelianStructure import AbelianStructure
from NegCat.Core.Linalg.FiniteField import rank, solve, projective_vectors
from NegCat.Core.Utils.errors import VerificationError


class Witness(NamedTuple):
    """
    Triangle e' -f-> e -g-> x -> Sigma e' with e, e' in A, showing x in A * Sigma A.
    """

    x: AmbientObject
    e: AmbientObject
    e_prime: AmbientObject
    f: Morphism
    g: Morphism


class StarEquality:

    def __init__(self, structure: AbelianStructure, verbose: bool = False):
        """
        StarEquality checks the three equivalent conditions on a proper abelian subcategory A satisfying E_2:
        (1) every map a -> Sigma^2 a' factors through Sigma A, (2) Sigma A * A = A * Sigma A on indecomposables,
        (3) every c in Sigma A * A receives a map f from A with psi_c o f epi.

        :param structure: Abelian structure of A.
        :param verbose: If True, print the failing objects.
        """

        self.name: str = self.__class__.__name__
        self.structure: AbelianStructure = structure
        self.functors = structure.functors
        self.subcategory = structure.subcategory
        self.ambient = structure.ambient
        self.verbose: bool = verbose
        self.__witnesses: Dict[AmbientObject, Optional[Witness]] = {}

    # ######################################################################################################## #
    #                                                Condition 1                                               #
    # ######################################################################################################## #

    def factorization_condition(self) -> bool:
        """
        For all indecomposables a, a' of A, the composites through Sigma d, d in ind A, span Hom(a, Sigma^2 a').
        """

        ambient, indecs = self.ambient, self.subcategory.indecomposables
        for a in indecs:
            a_obj = ambient.object_of(a)
            for b in indecs:
                target = ambient.shift(ambient.object_of(b), 2)
                dim = ambient.hom_dim(a_obj, target)
                if dim == 0:
                    continue
                images = []
                for d in indecs:
                    sd = ambient.shift(ambient.object_of(d))
                    for g2 in ambient.hom_basis(sd, target):
                        for g1 in ambient.hom_basis(a_obj, sd):
                            images.append(ambient.coordinates(ambient.compose(g2, g1)))
                if len(images) < dim or rank(asarray(images, dtype=int64).T, ambient.prime) < dim:
                    if self.verbose:
                        print(f"[{self.name}] Hom({a}, Sigma^2 {b}) does not factor through Sigma A.")
                    return False
        return True

    # ######################################################################################################## #
    #                                                Condition 2                                               #
    # ######################################################################################################## #

    def witness(self, x: AmbientObject) -> Optional[Witness]:
        """
        Triangle e' -> e -> x -> Sigma e' with e, e' in A built from the canonical triangle of x in Sigma A * A:
        the connecting map theta: G(x) -> Sigma^2 F(x) is factored as g2 o g1 through the universal left Sigma
        A-approximation g1: G(x) -> Sigma D, and the octahedral axiom gives e = Sigma^-1 cone(g1),
        e' = Sigma^-1 cone(Sigma^-1 g2) and f = Sigma^-1 (i o j').

        :param x: Object of Sigma A * A.
        :return: Witness, or None when theta does not factor or the construction leaves A.
        """

        if x in self.__witnesses:
            return self.__witnesses[x]
        ambient, sub = self.ambient, self.subcategory
        d = self.functors.decompose(x)
        result = None
        if d is not None:
            theta = d.h
            rows = []
            for a in sub.indecomposables:
                rows.extend(ambient.hom_basis(d.g_part, ambient.shift(ambient.object_of(a))))
            if rows:
                g1 = ambient.direct_sum_rows(rows)
            else:
                g1 = ambient.zero(d.g_part, ambient.make_object())
            basis = ambient.hom_basis(g1.target, theta.target)
            target = ambient.coordinates(theta)
            columns = [ambient.coordinates(ambient.compose(b, g1)) for b in basis]
            if columns:
                solution = solve(asarray(columns, dtype=int64).T.reshape(len(target), len(columns)), target,
                                 ambient.prime)
            else:
                solution = None if target.any() else []
            if solution is not None:
                g2 = ambient.from_coordinates(g1.target, theta.target, solution)
                t1 = ambient.cone(g1)
                t2 = ambient.cone(ambient.shift_morphism(g2, -1))
                e, e_prime = ambient.shift(t1.z, -1), ambient.shift(t2.z, -1)
                if sub.contains(e) and sub.contains(e_prime):
                    f = ambient.shift_morphism(ambient.compose(t1.g, t2.h), -1)
                    t = ambient.cone(f)
                    if t.z == x:
                        result = Witness(x, e, e_prime, f, t.g)
        self.__witnesses[x] = result
        return result

    def star_inclusion(self) -> bool:
        """
        A * Sigma A is contained in Sigma A * A: the cone of every morphism between indecomposables of A lies in
        Sigma A * A.
        """

        ambient, indecs = self.ambient, self.subcategory.indecomposables
        for a in indecs:
            for b in indecs:
                a_obj, b_obj = ambient.object_of(a), ambient.object_of(b)
                for v in projective_vectors(ambient.hom_dim(a_obj, b_obj), ambient.prime):
                    c = ambient.cone(ambient.from_coordinates(a_obj, b_obj, v)).z
                    if not self.functors.contains(c):
                        if self.verbose:
                            print(f"[{self.name}] The cone {c} of a map {a} -> {b} is not in Sigma A * A.")
                        return False
        return True

    def sigma_a_star_a(self) -> List[Any]:
        """Indecomposables of the ambient lying in Sigma A * A."""
        ambient = self.ambient
        return [x for x in ambient.indecomposables() if self.functors.contains(ambient.object_of(x))]

    def mixed(self) -> List[Any]:
        """Indecomposables of Sigma A * A lying neither in A nor in Sigma A."""
        ambient, members = self.ambient, self.subcategory.members
        shifted = {ambient.shift_data(a, 1)[0] for a in members}
        return [x for x in self.sigma_a_star_a() if x not in members and x not in shifted]

    def star_equality_condition(self) -> bool:
        if not self.star_inclusion():
            return False
        for x in self.sigma_a_star_a():
            if self.witness(self.ambient.object_of(x)) is None:
                if self.verbose:
                    print(f"[{self.name}] {x} is in Sigma A * A but not in A * Sigma A.")
                return False
        return True

    # ######################################################################################################## #
    #                                                Condition 3                                               #
    # ######################################################################################################## #

    def universal_approximation(self, c: AmbientObject) -> Morphism:
        """Right A-approximation of c summing all the basis maps a -> c."""
        ambient = self.ambient
        columns = []
        for a in self.subcategory.indecomposables:
            columns.extend(ambient.hom_basis(ambient.object_of(a), c))
        if not columns:
            return ambient.zero(ambient.make_object(), c)
        return ambient.direct_sum_columns(columns)

    def epi_condition(self, c: AmbientObject) -> bool:
        d = self.functors.decompose(c)
        if d is None:
            raise ValueError(f"[{self.name}] {c} does not lie in Sigma A * A.")
        composite = self.ambient.compose(d.psi, self.universal_approximation(c))
        return self.structure.is_epi(composite)

    def epi_composite_check(self, c: AmbientObject) -> bool:
        """
        For c in A * Sigma A with witness e' -> e -g-> c, the composite psi_c o g: e -> G(c) is an epimorphism.
        """

        w = self.witness(c)
        if w is None:
            raise ValueError(f"[{self.name}] No triangle shows {c} in A * Sigma A.")
        return self.structure.is_epi(self.ambient.compose(self.functors.decompose(c).psi, w.g))

    def epi_condition_all(self) -> bool:
        for x in self.sigma_a_star_a():
            if not self.epi_condition(self.ambient.object_of(x)):
                if self.verbose:
                    print(f"[{self.name}] No map from A to {x} induces an epimorphism onto G({x}).")
                return False
        return True

    # ######################################################################################################## #
    #                                                  Report                                                  #
    # ######################################################################################################## #

    def report(self, strict: bool = True) -> Dict[str, Any]:
        """
        Check the three conditions, which must agree.

        :param strict: If True, raise a VerificationError when the conditions disagree.
        :return: Dictionary with the three booleans, their agreement and the mixed indecomposables of Sigma A * A.
        """

        conditions = {'factorization': self.factorization_condition(),
                      'star_equality': self.star_equality_condition(),
                      'epimorphism': self.epi_condition_all()}
        agree = len(set(conditions.values())) == 1
        if strict and not agree:
            raise VerificationError(f"[{self.name}] The equivalent conditions disagree: {conditions}.",
                                    dump=conditions)
        conditions['agree'] = agree
        conditions['mixed'] = [str(x) for x in self.mixed()]
        return conditions


def star_equality_report(structure: AbelianStructure) -> Dict[str, Any]:
    return StarEquality(structure).report()

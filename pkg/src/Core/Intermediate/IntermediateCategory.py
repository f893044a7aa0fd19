from typing import Any, Dict, Iterable, List, Optional, Tuple
from itertools import combinations
from vedo import ProgressBar

from NegCat.Core.Abelian.AbelianStructure import AbelianStructure
from NegCat.Core.Intermediate.TorsionFree import TorsionFree
from NegCat.Core.Snake.StarEquality import StarEquality


class IntermediateCategory:

    def __init__(self, structure: AbelianStructure, verbose: bool = False):
        """
        IntermediateCategory handles the A-intermediate categories, extension-closed sets of indecomposables between
        A and Sigma A * A, and their correspondence with the torsion-free classes of A through
        C -> F(C) and F -> Sigma F * A.

        :param structure: Abelian structure of A.
        :param verbose: If True, print the progress of the enumerations.
        """

        self.name: str = self.__class__.__name__
        self.structure: AbelianStructure = structure
        self.subcategory = structure.subcategory
        self.functors = structure.functors
        self.ambient = structure.ambient
        self.verbose: bool = verbose
        self.torsion_free: TorsionFree = TorsionFree(structure, verbose)
        self.__extended: Optional[List[Any]] = None

    def sigma_a_star_a(self) -> List[Any]:
        """Indecomposables of the ambient lying in Sigma A * A."""
        if self.__extended is None:
            self.__extended = [x for x in self.ambient.indecomposables()
                               if self.functors.contains(self.ambient.object_of(x))]
        return self.__extended

    def F_parts(self, z: Any) -> Tuple[Any, ...]:
        return self.functors.F(self.ambient.object_of(z)).summands

    # ######################################################################################################## #
    #                                      Induced and detected categories                                     #
    # ######################################################################################################## #

    def induced_intermediate(self, torsion_free: Iterable[Any]) -> Tuple[Any, ...]:
        """
        Sigma F * A, computed as the indecomposables z of Sigma A * A with F(z) in add F.

        :param torsion_free: Torsion-free class F of A, as a set of indecomposables.
        :return: Sorted indecomposables of Sigma F * A.
        """

        members = set(torsion_free)
        if not self.torsion_free.is_torsion_free(members):
            raise ValueError(f"[{self.name}] {sorted(members)} is not a torsion-free class.")
        return tuple(z for z in self.sigma_a_star_a() if all(s in members for s in self.F_parts(z)))

    def is_intermediate(self, indecomposables: Iterable[Any]) -> bool:
        """
        A is contained in C, C is contained in Sigma A * A, and C is closed under extensions. Closure under summands
        holds for any set of indecomposables.
        """

        members = set(indecomposables)
        if not self.subcategory.members <= members:
            return False
        if not members <= set(self.sigma_a_star_a()):
            return False
        return self.subcategory.table.is_extension_closed(members)

    def F_of(self, indecomposables: Iterable[Any]) -> Tuple[Any, ...]:
        return tuple(sorted({s for z in indecomposables for s in self.F_parts(z)}))

    def enumerate_intermediate(self) -> List[Tuple[Any, ...]]:
        """
        All the A-intermediate categories, by brute force over the subsets of ind(Sigma A * A) outside A.
        """

        members = self.subcategory.members
        extras = [x for x in self.sigma_a_star_a() if x not in members]
        candidates = [c for size in range(len(extras) + 1) for c in combinations(extras, size)]
        progress_bar = ProgressBar(start=0, stop=len(candidates), c='orange', title="Intermediate categories") \
            if self.verbose else None
        found = []
        for candidate in candidates:
            c = tuple(sorted(members | set(candidate)))
            if self.is_intermediate(c):
                found.append(c)
            if progress_bar is not None:
                progress_bar.print()
        return sorted(found, key=lambda c: (len(c), c))

    # ######################################################################################################## #
    #                                                 Bijection                                                #
    # ######################################################################################################## #

    def bijection_check(self) -> Dict[str, Any]:
        """
        Compare the intermediate categories with the torsion-free classes through C -> F(C) and F -> Sigma F * A.
        The two maps are inverse bijections when Sigma A * A = A * Sigma A. Otherwise the check is not applicable,
        and both enumerations are still reported with the classes and categories left unmatched.

        :return: Report with the applicability, both cardinalities, the matching and the unmatched classes.
        """

        star = StarEquality(self.structure).report(strict=False)
        applicable = star['star_equality'] and star['agree']
        classes = self.torsion_free.enumerate()
        intermediates = self.enumerate_intermediate()
        class_set, intermediate_set = set(classes), set(intermediates)
        matching, unmatched_classes, unmatched_intermediates = [], [], []
        for f in classes:
            c = self.induced_intermediate(f)
            if c in intermediate_set and self.F_of(c) == f:
                matching.append((f, c))
            else:
                unmatched_classes.append(f)
        for c in intermediates:
            f = self.F_of(c)
            if f not in class_set or self.induced_intermediate(f) != c:
                unmatched_intermediates.append(c)
        bijection = not unmatched_classes and not unmatched_intermediates and len(classes) == len(intermediates)
        if self.verbose:
            print(f"[{self.name}] {len(classes)} torsion-free classes, {len(intermediates)} intermediate categories.")
            if not applicable:
                print(f"[{self.name}] Sigma A * A differs from A * Sigma A, the bijection is not expected.")
        return {'applicable': applicable,
                'star_equality': star,
                'torsion_free': len(classes),
                'intermediate': len(intermediates),
                'bijection': bijection,
                'matching': [[[str(s) for s in f], [str(s) for s in c]] for f, c in matching],
                'unmatched_torsion_free': [[str(s) for s in f] for f in unmatched_classes],
                'unmatched_intermediate': [[str(s) for s in c] for c in unmatched_intermediates]}

from typing import Any, Iterable, List, Tuple
from itertools import combinations
from vedo import ProgressBar

from NegCat.Core.Abelian.AbelianStructure import AbelianStructure

TorsionFreeClass = Tuple[Any, ...]


class TorsionFree:

    def __init__(self, structure: AbelianStructure, verbose: bool = False):
        """
        TorsionFree checks and enumerates the torsion-free classes of a proper abelian subcategory A: the sets of
        indecomposables of A closed under extensions and under subobjects.

        :param structure: Abelian structure of A.
        :param verbose: If True, a progress bar follows the enumeration.
        """

        self.name: str = self.__class__.__name__
        self.structure: AbelianStructure = structure
        self.subcategory = structure.subcategory
        self.verbose: bool = verbose

    def is_torsion_free(self, indecomposables: Iterable[Any]) -> bool:
        """
        Extension closure is tested on the middle terms of extensions between two members. Subobject closure is
        tested on indecomposable subobjects, which suffices since a summand of a subobject is a subobject.

        :param indecomposables: Subset of the indecomposables of A.
        :return: True if the additive closure of the set is torsion-free.
        """

        members = set(indecomposables)
        outside = members - self.subcategory.members
        if outside:
            raise ValueError(f"[{self.name}] {', '.join(str(s) for s in sorted(outside))} are not in A.")
        for f in members:
            if not self.structure.indecomposable_subobjects(f) <= members:
                return False
        return self.subcategory.table.is_extension_closed(members)

    def enumerate(self) -> List[TorsionFreeClass]:
        """
        All the torsion-free classes, sorted by cardinality then lexicographically.
        """

        indecs = self.subcategory.indecomposables
        candidates = [c for size in range(len(indecs) + 1) for c in combinations(indecs, size)]
        progress_bar = ProgressBar(start=0, stop=len(candidates), c='orange', title="Torsion-free classes") \
            if self.verbose else None
        found = []
        for candidate in candidates:
            if self.is_torsion_free(candidate):
                found.append(tuple(candidate))
            if progress_bar is not None:
                progress_bar.print()
        if self.verbose:
            print(f"[{self.name}] {len(found)} torsion-free classes among {len(candidates)} subsets.")
        return found


def is_torsion_free(structure: AbelianStructure, indecomposables: Iterable[Any]) -> bool:
    return TorsionFree(structure).is_torsion_free(indecomposables)


def enumerate_torsion_free(structure: AbelianStructure, verbose: bool = False) -> List[TorsionFreeClass]:
    return TorsionFree(structure, verbose).enumerate()

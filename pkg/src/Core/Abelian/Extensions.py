from typing import Any, Dict, Iterable, List, NamedTuple, Tuple
from itertools import combinations_with_replacement

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Linalg.FiniteField import projective_vectors


class Conflation(NamedTuple):
    """
    Short triangle x -> y -> z -> Sigma x, stored by its three objects.
    """

    x: AmbientObject
    y: AmbientObject
    z: AmbientObject

    def is_split(self) -> bool:
        return self.y == self.x + self.z


class ExtensionTable:

    def __init__(self, ambient: BaseAmbient):
        """
        ExtensionTable computes and caches the middle terms of the extensions between two objects of an ambient
        category. The extension classes of z by x are the vectors of Hom(z, Sigma x), enumerated up to scalars, and
        the middle term of the class e is Sigma^-1 cone(e).

        :param ambient: Ambient triangulated category.
        """

        self.name: str = self.__class__.__name__
        self.ambient: BaseAmbient = ambient
        self.__cache: Dict[Tuple[AmbientObject, AmbientObject], List[Conflation]] = {}

    def middle_terms(self, x: AmbientObject, z: AmbientObject) -> List[Conflation]:
        """
        Non-split conflations x -> y -> z, one per extension class up to scalars.

        :param x: First end term.
        :param z: Last end term.
        :return: List of conflations.
        """

        key = (x, z)
        if key not in self.__cache:
            ambient = self.ambient
            sx = ambient.shift(x)
            basis = ambient.basis_entries(z, sx)
            found = []
            for v in projective_vectors(len(basis), ambient.prime):
                e = ambient.from_coordinates(z, sx, v)
                y = ambient.shift(ambient.cone(e).z, -1)
                found.append(Conflation(x, y, z))
            self.__cache[key] = found
        return self.__cache[key]

    def indecomposable_middle_terms(self, x: Any, z: Any) -> List[Conflation]:
        ambient = self.ambient
        return self.middle_terms(ambient.object_of(x), ambient.object_of(z))

    def is_extension_closed(self, indecomposables: Iterable[Any]) -> bool:
        """
        Check that every middle term of an extension between two indecomposables of the set decomposes in the set.
        """

        members = set(indecomposables)
        for x in sorted(members):
            for z in sorted(members):
                for conflation in self.indecomposable_middle_terms(x, z):
                    if any(s not in members for s in conflation.y.summands):
                        return False
        return True

    def conflations(self, indecomposables: Iterable[Any], bound: int = 1) -> List[Conflation]:
        """
        Conflations of the additive subcategory generated by a set of indecomposables, whose end terms have at most
        'bound' indecomposable summands. Split conflations are included, and the list is deduplicated.

        :param indecomposables: Indecomposables of the subcategory.
        :param bound: Maximal number of summands of the end terms.
        :return: Sorted list of conflations.
        """

        members = sorted(set(indecomposables))
        ambient = self.ambient
        ends = [ambient.make_object(c) for size in range(1, bound + 1)
                for c in combinations_with_replacement(members, size)]
        found = set()
        for x in ends:
            for z in ends:
                found.add(Conflation(x, x + z, z))
                for conflation in self.middle_terms(x, z):
                    if all(s in members for s in conflation.y.summands):
                        found.add(conflation)
        return sorted(found, key=lambda c: (c.x.summands, c.z.summands, c.y.summands))

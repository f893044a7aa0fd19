from typing import Any, Dict, Iterable, List
from itertools import combinations

from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Orbit.OrbitCategory import OrbitCategory
from NegCat.Core.Orbit.Diagonal import Diagonal, crossing, share_endpoint


class SimpleMindedSystem:

    def __init__(self, ambient: BaseAmbient, simples: Iterable[Any]):
        """
        SimpleMindedSystem is a collection of indecomposables meant to generate a proper abelian subcategory by
        extension closure. In the diagonal model it is a set of n pairwise non-crossing admissible diagonals with no
        common endpoint. In D^b(kA_n) it is a w-orthogonal collection.

        :param ambient: Ambient category.
        :param simples: Indecomposables of the collection.
        """

        self.name: str = self.__class__.__name__
        self.ambient: BaseAmbient = ambient
        self.simples: List[Any] = sorted(set(simples))
        if len(self.simples) == 0:
            raise ValueError(f"[{self.name}] A simple-minded system cannot be empty.")

    def combinatorial_check(self) -> Dict[str, bool]:
        """
        Size, admissibility, crossing and endpoint conditions of the diagonal model.
        """

        ambient = self.ambient
        if not isinstance(ambient, OrbitCategory):
            return {'size': True, 'admissible': True, 'non_crossing': True, 'disjoint_endpoints': True}
        admissible = set(ambient.all_indecomposables())
        diagonals = [Diagonal(*d) for d in self.simples]
        return {'size': len(diagonals) == ambient.n,
                'admissible': all(d in admissible for d in diagonals),
                'non_crossing': not any(crossing(d1, d2) for d1, d2 in combinations(diagonals, 2)),
                'disjoint_endpoints': not any(share_endpoint(d1, d2) for d1, d2 in combinations(diagonals, 2))}

    def algebraic_check(self) -> Dict[str, bool]:
        """
        Hom(s, t) is k for s = t and zero otherwise, and Hom(s, Sigma^-i t) = 0 for 0 < i < w.
        """

        ambient = self.ambient
        objects = [ambient.object_of(s) for s in self.simples]
        orthogonal = all(ambient.hom_dim(s, t) == (1 if i == j else 0)
                         for i, s in enumerate(objects) for j, t in enumerate(objects))
        negative = all(ambient.hom_dim(s, ambient.shift(t, -i)) == 0
                       for s in objects for t in objects for i in range(1, ambient.w))
        return {'orthogonal': orthogonal, 'negative_vanishing': negative}

    def generates_proper_abelian(self) -> bool:
        """
        Hom(s, Sigma^-1 t) = 0 for all simples s and t. Without it the extension closure is not proper abelian, which
        is always the case for w = 1 since the Serre functor Sigma^-1 gives Hom(s, Sigma^-1 s) = D Hom(s, s).
        """

        ambient = self.ambient
        objects = [ambient.object_of(s) for s in self.simples]
        return all(ambient.hom_dim(s, ambient.shift(t, -1)) == 0 for s in objects for t in objects)

    def is_sms(self) -> bool:
        combinatorial = self.combinatorial_check()
        if not all(combinatorial.values()):
            return False
        return all(self.algebraic_check().values())

    def __str__(self) -> str:

        description = "\n"
        description += f"# {self.name}\n"
        description += f"    Simples: {', '.join(str(s) for s in self.simples)}\n"
        return description


def is_sms(ambient: BaseAmbient, simples: Iterable[Any]) -> bool:
    simples = list(simples)
    if len(simples) != len(set(simples)):
        return False
    return SimpleMindedSystem(ambient, simples).is_sms()

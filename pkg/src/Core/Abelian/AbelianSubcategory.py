from typing import Any, Dict, Iterable, List, Optional, Tuple
from collections import Counter
from itertools import combinations_with_replacement

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Abelian.Extensions import ExtensionTable, Conflation
from NegCat.Core.Abelian.SimpleMindedSystem import SimpleMindedSystem
from NegCat.Core.Utils.errors import VerificationError

ClassVec = Tuple[int, ...]


class AbelianSubcategory:

    def __init__(self,
                 ambient: BaseAmbient,
                 simples: Iterable[Any],
                 indecomposables: Iterable[Any],
                 class_vectors: Dict[Any, ClassVec],
                 table: Optional[ExtensionTable] = None,
                 verbose: bool = False):
        """
        AbelianSubcategory is the additive closure of a finite set of indecomposables of the ambient category, closed
        under extensions, together with the composition-factor vector of every indecomposable on the simples.

        :param ambient: Ambient triangulated category.
        :param simples: Simples generating the subcategory.
        :param indecomposables: All the indecomposables of the subcategory.
        :param class_vectors: Composition-factor vector of every indecomposable.
        :param table: Shared cache of extension middle terms.
        :param verbose: If True, print the progress of the computations.
        """

        self.name: str = self.__class__.__name__
        self.ambient: BaseAmbient = ambient
        self.simples: List[Any] = sorted(simples)
        self.indecomposables: List[Any] = sorted(set(indecomposables))
        self.members = frozenset(self.indecomposables)
        self.class_vectors: Dict[Any, ClassVec] = dict(class_vectors)
        self.table: ExtensionTable = ExtensionTable(ambient) if table is None else table
        self.verbose: bool = verbose

    @classmethod
    def extension_closure(cls,
                          ambient: BaseAmbient,
                          simples: Iterable[Any],
                          table: Optional[ExtensionTable] = None,
                          verbose: bool = False) -> 'AbelianSubcategory':
        """
        Smallest set of indecomposables containing the simples and the summands of the middle terms of all the
        extensions between two of its members. Class vectors are propagated along the recorded conflations.

        :param ambient: Ambient triangulated category.
        :param simples: Simple-minded system.
        :param table: Shared cache of extension middle terms.
        :param verbose: If True, print the progress of the closure.
        :return: The extension-closed subcategory.
        """

        name = cls.__name__
        table = ExtensionTable(ambient) if table is None else table
        simples = sorted(set(simples))
        if not SimpleMindedSystem(ambient, simples).generates_proper_abelian():
            raise ValueError(f"[{name}] Hom(S, Sigma^-1 S) does not vanish on the simples {simples}, their extension "
                             f"closure is not a proper abelian subcategory.")
        for s in simples:
            if table.indecomposable_middle_terms(s, s):
                raise VerificationError(f"[{name}] The simple {s} has self-extensions.")
        guard = len(ambient.indecomposables())
        current = set(simples)
        done = set()
        recorded: List[Conflation] = []
        changed = True
        while changed:
            changed = False
            for x in sorted(current):
                for z in sorted(current):
                    if (x, z) in done:
                        continue
                    done.add((x, z))
                    for conflation in table.indecomposable_middle_terms(x, z):
                        recorded.append(conflation)
                        new = set(conflation.y.summands) - current
                        if new:
                            current |= new
                            changed = True
                            if verbose:
                                print(f"[{name}] Middle term {conflation.y} of {z} by {x} adds "
                                      f"{', '.join(str(s) for s in sorted(new))}")
                    if len(current) > guard:
                        raise ValueError(f"[{name}] The extension closure exceeds the {guard} indecomposables of "
                                         f"the ambient, the collection is inconsistent.")

        # Solve the class vectors from the conflations, one unknown summand at a time
        size = len(simples)
        vectors: Dict[Any, ClassVec] = {s: tuple(1 if i == j else 0 for j in range(size))
                                        for i, s in enumerate(simples)}
        progress = True
        while progress:
            progress = False
            for conflation in recorded:
                x, z = conflation.x.summands[0], conflation.z.summands[0]
                if x not in vectors or z not in vectors:
                    continue
                total = tuple(a + b for a, b in zip(vectors[x], vectors[z]))
                counts = Counter(conflation.y.summands)
                unknown = [s for s in counts if s not in vectors]
                known = [sum(vectors[s][i] * m for s, m in counts.items() if s in vectors) for i in range(size)]
                if not unknown:
                    if tuple(known) != total:
                        raise VerificationError(f"[{name}] Class vectors are not additive on {x} -> "
                                                f"{conflation.y} -> {z}.")
                elif len(unknown) == 1:
                    m = counts[unknown[0]]
                    rest = [t - k for t, k in zip(total, known)]
                    if any(r < 0 or r % m for r in rest):
                        raise VerificationError(f"[{name}] No class vector for {unknown[0]} solves {x} -> "
                                                f"{conflation.y} -> {z}.")
                    vectors[unknown[0]] = tuple(r // m for r in rest)
                    progress = True
        missing = sorted(current - set(vectors))
        if missing:
            raise VerificationError(f"[{name}] The class vectors of {', '.join(str(s) for s in missing)} are not "
                                    f"determined by the conflations.")
        return cls(ambient, simples, current, vectors, table, verbose)

    # ######################################################################################################## #
    #                                                 Objects                                                  #
    # ######################################################################################################## #

    def contains(self, x: AmbientObject) -> bool:
        return all(s in self.members for s in x.summands)

    def class_vector(self, x: AmbientObject) -> ClassVec:
        vector = [0] * len(self.simples)
        for s in x.summands:
            if s not in self.class_vectors:
                raise ValueError(f"[{self.name}] {s} is not an indecomposable of the subcategory.")
            vector = [a + b for a, b in zip(vector, self.class_vectors[s])]
        return tuple(vector)

    def length(self, x: AmbientObject) -> int:
        return sum(self.class_vector(x))

    def objects(self, max_summands: int) -> List[AmbientObject]:
        """Nonzero objects with at most 'max_summands' indecomposable summands."""
        return [self.ambient.make_object(c) for size in range(1, max_summands + 1)
                for c in combinations_with_replacement(self.indecomposables, size)]

    # ######################################################################################################## #
    #                                                Conditions                                                #
    # ######################################################################################################## #

    def satisfies_En(self, m: int) -> bool:
        """
        Check Hom(a, Sigma^-i a') = 0 for all indecomposables a, a' and 0 < i <= m.
        """

        ambient = self.ambient
        for i in range(1, m + 1):
            for a in self.indecomposables:
                for b in self.indecomposables:
                    if ambient.hom_dim(ambient.object_of(a), ambient.shift(ambient.object_of(b), -i)):
                        if self.verbose:
                            print(f"[{self.name}] Hom({a}, Sigma^-{i} {b}) is not zero.")
                        return False
        return True

    def conflations(self, length_bound: int = 1) -> List[Conflation]:
        return self.table.conflations(self.indecomposables, length_bound)

    def __str__(self) -> str:

        description = "\n"
        description += f"# {self.name}\n"
        description += f"    Simples: {', '.join(str(s) for s in self.simples)}\n"
        description += f"    Indecomposables ({len(self.indecomposables)}):\n"
        for s in self.indecomposables:
            description += f"        {s}: {self.class_vectors[s]}\n"
        return description

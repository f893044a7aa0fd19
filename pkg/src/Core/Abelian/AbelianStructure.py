from typing import Any, Dict, List, Optional, Sequence
from numpy import asarray, eye, zeros_like, int64

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.Morphism import Morphism
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Snake.FGDecomposition import FGFunctors
from NegCat.Core.Linalg.FiniteField import rank, all_vectors
from NegCat.Core.TypeA.Representation import Representation, hom_dim_oracle
from NegCat.Core.Utils.errors import VerificationError


class AbelianStructure:

    def __init__(self, subcategory: AbelianSubcategory, functors: Optional[FGFunctors] = None):
        """
        AbelianStructure realizes kernels, cokernels and exactness in a proper abelian subcategory A through
        triangles: for f: a -> a' in A, the cone of f lies in Sigma A * A, its F part is the kernel of f and its G
        part the cokernel. Lengths are read from the class vectors.

        :param subcategory: Proper abelian subcategory.
        :param functors: F and G functors of the subcategory, created when not given.
        """

        self.name: str = self.__class__.__name__
        self.subcategory: AbelianSubcategory = subcategory
        self.ambient = subcategory.ambient
        self.functors: FGFunctors = FGFunctors(subcategory) if functors is None else functors
        self.__subobjects: Dict[Any, frozenset] = {}

    def __check(self, f: Morphism) -> None:
        if not (self.subcategory.contains(f.source) and self.subcategory.contains(f.target)):
            raise ValueError(f"[{self.name}] {f} is not a morphism of the subcategory.")

    def __cone_parts(self, f: Morphism):
        self.__check(f)
        d = self.functors.decompose(self.ambient.cone(f).z)
        if d is None:
            raise ValueError(f"[{self.name}] The cone of {f} is not in Sigma A * A, {f} is not a morphism of A.")
        return d

    # ######################################################################################################## #
    #                                         Kernels and cokernels                                            #
    # ######################################################################################################## #

    def kernel(self, f: Morphism) -> AmbientObject:
        return self.__cone_parts(f).f_part

    def cokernel(self, f: Morphism) -> AmbientObject:
        return self.__cone_parts(f).g_part

    def image_length(self, f: Morphism) -> int:
        return self.subcategory.length(f.source) - self.subcategory.length(self.kernel(f))

    def is_mono(self, f: Morphism) -> bool:
        return self.kernel(f).is_zero()

    def is_epi(self, f: Morphism) -> bool:
        return self.cokernel(f).is_zero()

    def is_exact(self, sequence: Sequence[Morphism]) -> bool:
        """
        Exactness of 0 -> x_0 -> x_1 -> ... -> x_m -> 0 given by the composable morphisms x_i -> x_{i+1}.
        Composites vanish, the image of each map has the length of the kernel of the next one, the first map is a
        mono and the last one an epi.

        :param sequence: Composable morphisms of A.
        :return: True if the sequence is exact.
        """

        if not sequence:
            return True
        ambient = self.ambient
        for f, g in zip(sequence[:-1], sequence[1:]):
            if f.target != g.source:
                raise ValueError(f"[{self.name}] The sequence is not composable at {f.target} and {g.source}.")
        for f, g in zip(sequence[:-1], sequence[1:]):
            if not ambient.compose(g, f).is_zero():
                return False
            if self.image_length(f) != self.subcategory.length(self.kernel(g)):
                return False
        return self.is_mono(sequence[0]) and self.is_epi(sequence[-1])

    # ######################################################################################################## #
    #                                            Yoneda and search                                             #
    # ######################################################################################################## #

    def yoneda_mono(self, f: Morphism) -> bool:
        """
        f is a mono iff Hom(t, f) is injective for every indecomposable t of A.
        """

        ambient = self.ambient
        for t in self.subcategory.indecomposables:
            t_obj = ambient.object_of(t)
            basis = ambient.hom_basis(t_obj, f.source)
            if basis and self.__rank(f, basis, post=True) != len(basis):
                return False
        return True

    def yoneda_epi(self, f: Morphism) -> bool:
        """
        f is an epi iff Hom(f, t) is injective for every indecomposable t of A.
        """

        ambient = self.ambient
        for t in self.subcategory.indecomposables:
            t_obj = ambient.object_of(t)
            basis = ambient.hom_basis(f.target, t_obj)
            if basis and self.__rank(f, basis, post=False) != len(basis):
                return False
        return True

    def __rank(self, f: Morphism, basis: List[Morphism], post: bool) -> int:
        ambient = self.ambient
        images = [ambient.coordinates(ambient.compose(f, b) if post else ambient.compose(b, f)) for b in basis]
        if len(images[0]) == 0:
            return 0
        return rank(asarray(images, dtype=int64).T, ambient.prime)

    def kernel_by_search(self, f: Morphism, max_summands: int = 2) -> AmbientObject:
        """
        Kernel of f found as the longest object k of A with a mono i: k -> source such that f o i = 0. Only objects
        with at most 'max_summands' summands are searched.
        """

        self.__check(f)
        ambient, sub = self.ambient, self.subcategory
        best, best_length = ambient.make_object(), 0
        bound = sub.length(f.source)
        for k in sub.objects(max_summands):
            length = sub.length(k)
            if length > bound or length < best_length:
                continue
            entries = ambient.basis_entries(k, f.source)
            for v in all_vectors(len(entries), ambient.prime):
                i = ambient.from_coordinates(k, f.source, v)
                if ambient.compose(f, i).is_zero() and self.yoneda_mono(i):
                    if length == best_length and best != k:
                        raise VerificationError(f"[{self.name}] Two kernels {best} and {k} of {f} have the same "
                                                f"length.")
                    best, best_length = k, length
                    break
        return best

    def indecomposable_subobjects(self, a: Any) -> frozenset:
        """
        Indecomposables b of A with a mono b -> a.
        """

        if a not in self.__subobjects:
            ambient = self.ambient
            a_obj = ambient.object_of(a)
            found = set()
            for b in self.subcategory.indecomposables:
                b_obj = ambient.object_of(b)
                for v in all_vectors(ambient.hom_dim(b_obj, a_obj), ambient.prime):
                    if self.yoneda_mono(ambient.from_coordinates(b_obj, a_obj, v)):
                        found.add(b)
                        break
            self.__subobjects[a] = frozenset(found)
        return self.__subobjects[a]


def bound_quiver_modules(prime: int = 2) -> List[Representation]:
    """
    The nine indecomposable modules of the bound quiver algebra with arrows 2 -> 1, 3 -> 2, 4 -> 2 and the relation
    3 -> 2 -> 1 = 0, in the order 1, 2/1, 4/2/1, 2, 4/2, 3/2, (34)/2, 4, 3 (top over socle).
    """

    def module(spaces, active):
        arrows = []
        for source, target in ((2, 1), (3, 2), (4, 2)):
            m = eye(spaces[target - 1], spaces[source - 1], dtype=int64)
            if (source, target) not in active:
                m = zeros_like(m)
            arrows.append((source, target, m))
        return Representation(spaces, arrows=arrows, prime=prime)

    return [module((1, 0, 0, 0), ()),
            module((1, 1, 0, 0), ((2, 1),)),
            module((1, 1, 0, 1), ((2, 1), (4, 2))),
            module((0, 1, 0, 0), ()),
            module((0, 1, 0, 1), ((4, 2),)),
            module((0, 1, 1, 0), ((3, 2),)),
            module((0, 1, 1, 1), ((3, 2), (4, 2))),
            module((0, 0, 0, 1), ()),
            module((0, 0, 1, 0), ())]


def fingerprint_check(subcategory: AbelianSubcategory, indecomposables: Sequence[Any],
                      modules: Sequence[Representation]) -> bool:
    """
    Compare the Hom dimensions between the given indecomposables of A with those between the matching modules.
    """

    ambient = subcategory.ambient
    for x, mx in zip(indecomposables, modules):
        for y, my in zip(indecomposables, modules):
            if ambient.hom_dim(ambient.object_of(x), ambient.object_of(y)) != hom_dim_oracle(mx, my):
                return False
    return True

from typing import Dict, List, NamedTuple, Optional, Sequence
from numpy import ndarray, asarray, zeros, int64

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.Morphism import Morphism
from NegCat.Core.Abelian.AbelianSubcategory import AbelianSubcategory
from NegCat.Core.Linalg.FiniteField import rank, solve
from NegCat.Core.Utils.errors import VerificationError


class FGDecomposition(NamedTuple):
    """
    Canonical triangle Sigma F(c) -phi-> c -psi-> G(c) -h-> Sigma^2 F(c) of an object c of Sigma A * A.
    """

    c: AmbientObject
    f_part: AmbientObject
    g_part: AmbientObject
    phi: Morphism
    psi: Morphism
    h: Morphism


class FGFunctors:

    def __init__(self, subcategory: AbelianSubcategory):
        """
        FGFunctors computes the functors F and G from Sigma A * A to A. The Sigma A part of an object c is read from
        its minimal right Sigma A-approximation, obtained by greedy deletion of summands from the universal one, and
        the A part is the cone of that approximation.

        :param subcategory: Proper abelian subcategory A, satisfying E_2.
        """

        self.name: str = self.__class__.__name__
        self.subcategory: AbelianSubcategory = subcategory
        self.ambient = subcategory.ambient
        self.__cache: Dict[AmbientObject, Optional[FGDecomposition]] = {}

    # ######################################################################################################## #
    #                                                 Objects                                                  #
    # ######################################################################################################## #

    def decompose(self, c: AmbientObject, order: Optional[Sequence[int]] = None) -> Optional[FGDecomposition]:
        """
        Minimal decomposition of c, None when c does not lie in Sigma A * A.

        :param c: Object of the ambient category.
        :param order: Deletion order of the summands of the universal approximation, natural order by default.
        :return: FGDecomposition of c or None.
        """

        if order is None and c in self.__cache:
            return self.__cache[c]
        ambient = self.ambient
        columns: List[Morphism] = []
        for a in self.subcategory.indecomposables:
            columns.extend(ambient.hom_basis(ambient.shift(ambient.object_of(a)), c))

        # Images of Hom(Sigma a', Sigma a_j) -> Hom(Sigma a', c) for every column j and every probe a'
        probes = []
        for a in self.subcategory.indecomposables:
            sa = ambient.shift(ambient.object_of(a))
            dim = ambient.hom_dim(sa, c)
            if dim == 0:
                continue
            images = [[ambient.coordinates(ambient.compose(column, b)) for b in ambient.hom_basis(sa, column.source)]
                      for column in columns]
            probes.append((dim, images))

        def approximates(kept: List[int]) -> bool:
            for dim, images in probes:
                vectors = [v for j in kept for v in images[j]]
                if len(vectors) < dim or rank(asarray(vectors, dtype=int64).T, ambient.prime) < dim:
                    return False
            return True

        kept = list(range(len(columns)))
        for j in (range(len(columns)) if order is None else order):
            trial = [i for i in kept if i != j]
            if approximates(trial):
                kept = trial

        result = self.__complete(c, [columns[j] for j in kept])
        if order is None:
            self.__cache[c] = result
        return result

    def __complete(self, c: AmbientObject, kept: List[Morphism]) -> Optional[FGDecomposition]:

        ambient = self.ambient
        if not kept:
            if not self.subcategory.contains(c):
                return None
            zero = ambient.make_object()
            return FGDecomposition(c, zero, c, ambient.zero(zero, c), ambient.identity(c), ambient.zero(c, zero))
        phi = ambient.direct_sum_columns(kept)
        t = ambient.cone(phi)
        if not self.subcategory.contains(t.z):
            return None
        return FGDecomposition(c, ambient.shift(phi.source, -1), t.z, phi, t.g, t.h)

    def contains(self, c: AmbientObject) -> bool:
        """Membership of c in Sigma A * A."""
        return self.decompose(c) is not None

    def F(self, c: AmbientObject) -> AmbientObject:
        return self.__checked(c).f_part

    def G(self, c: AmbientObject) -> AmbientObject:
        return self.__checked(c).g_part

    def __checked(self, c: AmbientObject) -> FGDecomposition:
        d = self.decompose(c)
        if d is None:
            raise ValueError(f"[{self.name}] {c} does not lie in Sigma A * A.")
        return d

    # ######################################################################################################## #
    #                                                Morphisms                                                 #
    # ######################################################################################################## #

    def F_mor(self, f: Morphism) -> Morphism:
        """
        F(f): F(x) -> F(y), the desuspension of the unique beta with phi_y o beta = f o phi_x.
        """

        ambient = self.ambient
        dx, dy = self.__checked(f.source), self.__checked(f.target)
        bx, by = dx.phi.source, dy.phi.source
        basis = ambient.hom_basis(bx, by)
        target = ambient.coordinates(ambient.compose(f, dx.phi))
        columns = [ambient.coordinates(ambient.compose(dy.phi, b)) for b in basis]
        beta = ambient.from_coordinates(bx, by, self.__unique_solution(columns, target, 'F', f))
        return ambient.shift_morphism(beta, -1)

    def G_mor(self, f: Morphism) -> Morphism:
        """
        G(f): G(x) -> G(y), the unique gamma with gamma o psi_x = psi_y o f.
        """

        ambient = self.ambient
        dx, dy = self.__checked(f.source), self.__checked(f.target)
        basis = ambient.hom_basis(dx.g_part, dy.g_part)
        target = ambient.coordinates(ambient.compose(dy.psi, f))
        columns = [ambient.coordinates(ambient.compose(b, dx.psi)) for b in basis]
        return ambient.from_coordinates(dx.g_part, dy.g_part, self.__unique_solution(columns, target, 'G', f))

    def __unique_solution(self, columns: List[ndarray], target: ndarray, functor: str, f: Morphism) -> ndarray:

        p = self.ambient.prime
        if not columns:
            if target.any():
                raise VerificationError(f"[{self.name}] {functor}({f}) has no solution.")
            return zeros(0, dtype=int64)
        m = asarray(columns, dtype=int64).T.reshape(len(target), len(columns))
        x = solve(m, target, p)
        if x is None:
            raise VerificationError(f"[{self.name}] {functor}({f}) has no solution.",
                                    dump={'system': m.tolist(), 'target': target.tolist()})
        if rank(m, p) != len(columns):
            raise VerificationError(f"[{self.name}] {functor}({f}) is not unique.",
                                    dump={'system': m.tolist(), 'target': target.tolist()})
        return x

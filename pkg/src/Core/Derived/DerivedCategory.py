from typing import Any, Dict, List, Tuple, Optional, Iterable
from collections import namedtuple
from numpy import ndarray, zeros, int64

from NegCat.Core.Ambient.BaseAmbient import BaseAmbient
from NegCat.Core.Ambient.Morphism import Morphism, Triangle
from NegCat.Core.Derived.DerivedObject import DerivedObject, ShiftedInterval
from NegCat.Core.Derived.ProjComplex import ChainMap, StdComplex, restrict, embed, cone_complex
from NegCat.Core.Derived.HomotopyHom import HomotopyHom
from NegCat.Core.Derived.ComplexReduction import reduce_complex
from NegCat.Core.TypeA.TypeAModules import TypeAModules
from NegCat.Core.TypeA.Interval import Interval
from NegCat.Core.Utils.errors import VerificationError


class DerivedCategory(BaseAmbient):

    def __init__(self, config: namedtuple):
        """
        DerivedCategory is the bounded derived category D^b(kA_n). Objects are stored decomposed, morphisms are
        coefficient matrices on canonical basis maps and every computation that needs chains (composition constants,
        cones, shifts of morphisms) goes through the standard projective resolutions.

        :param config: Namedtuple with fields n, w, prime, shift_window and verbose.
        """

        BaseAmbient.__init__(self, config)
        self.modules: TypeAModules = TypeAModules(self.n, self.prime)
        self.shift_window: Tuple[int, int] = tuple(config.shift_window)
        self.__std_cache: Dict[ShiftedInterval, StdComplex] = {}
        self.__hom_cache: Dict[Tuple[ShiftedInterval, ShiftedInterval], HomotopyHom] = {}
        self.__basis_cache: Dict[Tuple[ShiftedInterval, ShiftedInterval], Optional[ChainMap]] = {}

    # ######################################################################################################## #
    #                                                 Objects                                                  #
    # ######################################################################################################## #

    def make_object(self, summands: Iterable[Any] = ()) -> DerivedObject:
        return DerivedObject(summands)

    def indecomposables(self) -> List[ShiftedInterval]:
        lo, hi = self.shift_window
        return [ShiftedInterval(k, x) for k in range(lo, hi + 1) for x in self.modules.intervals]

    def module(self, x: Interval, k: int = 0) -> ShiftedInterval:
        return ShiftedInterval(k, Interval(*x).check(self.n))

    def shift_indecomposable(self, x: ShiftedInterval, m: int) -> Tuple[ShiftedInterval, int]:
        return x.shifted(m), 0

    def tau(self, x: ShiftedInterval) -> ShiftedInterval:
        """
        AR translate of D^b(kA_n): module tau on non-projectives, and tau P(i) = Sigma^-1 I(i).
        """

        k, interval = x
        if self.modules.is_projective(interval):
            return ShiftedInterval(k - 1, self.modules.injective(interval.lo))
        return ShiftedInterval(k, self.modules.tau(interval))

    def tau_inverse(self, x: ShiftedInterval) -> ShiftedInterval:
        k, interval = x
        if self.modules.is_injective(interval):
            return ShiftedInterval(k + 1, self.modules.projective(interval.hi))
        return ShiftedInterval(k, self.modules.tau_inverse(interval))

    def serre(self, x: ShiftedInterval) -> ShiftedInterval:
        """Serre functor nu = Sigma tau."""
        return self.tau(x).shifted(1)

    def twist(self, x: ShiftedInterval, k: int = 1) -> ShiftedInterval:
        """
        k-th power of F = Sigma^{w+1} tau, the auto-equivalence defining the negative cluster category.
        """

        for _ in range(abs(k)):
            x = self.tau(x).shifted(self.w + 1) if k > 0 else self.tau_inverse(x.shifted(-self.w - 1))
        return x

    def apply(self, x: DerivedObject, functor) -> DerivedObject:
        return DerivedObject(functor(s) for s in x.summands)

    # ######################################################################################################## #
    #                                             Hom and chains                                               #
    # ######################################################################################################## #

    def hom_dim_D(self, x: ShiftedInterval, y: ShiftedInterval) -> int:
        """
        dim Hom(Sigma^k a, Sigma^l b): Hom(a, b) when l = k, Ext1(a, b) when l = k + 1, 0 otherwise.
        """

        difference = y.shift - x.shift
        if difference == 0:
            return self.modules.hom_dim(x.interval, y.interval)
        if difference == 1:
            return self.modules.ext1_dim(x.interval, y.interval)
        return 0

    def basis_labels(self, x: ShiftedInterval, y: ShiftedInterval) -> Tuple[int, ...]:
        return (0,) if self.hom_dim_D(x, y) else ()

    def resolve(self, x: DerivedObject) -> StdComplex:
        return StdComplex(x, self.n, self.prime)

    def std(self, x: ShiftedInterval) -> StdComplex:
        if x not in self.__std_cache:
            self.__std_cache[x] = StdComplex(DerivedObject([x]), self.n, self.prime)
        return self.__std_cache[x]

    def homotopy_hom(self, x: ShiftedInterval, y: ShiftedInterval) -> HomotopyHom:
        if (x, y) not in self.__hom_cache:
            self.__hom_cache[(x, y)] = HomotopyHom(self.std(x), self.std(y))
        return self.__hom_cache[(x, y)]

    def hom_dim_chain(self, x: DerivedObject, y: DerivedObject) -> int:
        """Dimension of Hom_K between the resolutions of two objects, computed without closed forms."""
        return HomotopyHom(self.resolve(x), self.resolve(y)).dim

    def canonical_chain_map(self, x: ShiftedInterval, y: ShiftedInterval) -> Optional[ChainMap]:
        """
        Chain map std(x) -> std(y) representing the canonical basis vector of Hom(x, y), None when Hom(x, y) = 0.
        """

        if (x, y) not in self.__basis_cache:
            if x == y:
                self.__basis_cache[(x, y)] = ChainMap.identity(self.std(x))
            elif self.hom_dim_D(x, y) == 0:
                self.__basis_cache[(x, y)] = None
            else:
                space = self.homotopy_hom(x, y)
                if space.dim != 1:
                    raise VerificationError(f"[{self.name}] Homotopy Hom({x}, {y}) has dimension {space.dim}, the "
                                            f"interval rules give 1.")
                self.__basis_cache[(x, y)] = space.basis_maps()[0]
        return self.__basis_cache[(x, y)]

    def coefficient(self, f: ChainMap, x: ShiftedInterval, y: ShiftedInterval) -> int:
        """
        Scalar c such that the chain map f: std(x) -> std(y) is homotopic to c times the canonical basis map.
        """

        space = self.homotopy_hom(x, y)
        c = space.coefficients(f)
        if c is None:
            raise VerificationError(f"[{self.name}] The map {x} -> {y} to expand is not a chain map.")
        if space.dim == 0:
            return 0
        if x == y:
            # The canonical basis of End(x) is the identity, which may differ from the quotient basis vector
            identity = space.coefficients(ChainMap.identity(self.std(x)))
            return int(c[0] * pow(int(identity[0]), self.prime - 2, self.prime)) % self.prime
        return int(c[0]) % self.prime

    def _composition_constant(self, x: ShiftedInterval, k: int, y: ShiftedInterval, l: int,
                              z: ShiftedInterval) -> int:
        f, g = self.canonical_chain_map(x, y), self.canonical_chain_map(y, z)
        if f is None or g is None or self.hom_dim_D(x, z) == 0:
            return 0
        return self.coefficient(g.compose(f), x, z)

    def _shift_constant(self, x: ShiftedInterval, y: ShiftedInterval, k: int, m: int) -> int:

        # Sigma^m of a chain map keeps its matrices; std(x)[m] and std(Sigma^m x) differ by the sign (-1)^m on the
        # lower term of a two-term resolution
        f = self.canonical_chain_map(x, y)
        sx, sy = x.shifted(m), y.shifted(m)
        shifted = f.shifted(m)
        sign = -1 if m % 2 else 1
        maps = {}
        for d, block in shifted.maps.items():
            block = block.copy()
            if len(self.std(sy).terms) == 2 and d == min(self.std(sy).terms):
                block = sign * block
            if len(self.std(sx).terms) == 2 and d == min(self.std(sx).terms):
                block = sign * block
            maps[d] = block
        return self.coefficient(ChainMap(self.std(sx), self.std(sy), maps), sx, sy)

    def chain_map(self, f: Morphism, source_std: Optional[StdComplex] = None,
                  target_std: Optional[StdComplex] = None) -> ChainMap:
        """
        Chain-level representative std(source) -> std(target) of a morphism.
        """

        source_std = self.resolve(f.source) if source_std is None else source_std
        target_std = self.resolve(f.target) if target_std is None else target_std
        maps: Dict[int, ndarray] = {}
        m = f.component(0)
        for j, i in zip(*m.nonzero()):
            basis = self.canonical_chain_map(f.source.summands[i], f.target.summands[j])
            embed(basis, i, j, source_std, target_std, maps, int(m[j, i]))
        return ChainMap(source_std, target_std, maps)

    def morphism_of_chain_map(self, f: ChainMap, source_std: StdComplex, target_std: StdComplex) -> Morphism:
        """
        Expand a chain map between standard complexes on the canonical bases, summand block by summand block.
        """

        source, target = source_std.obj, target_std.obj
        m = zeros((len(target), len(source)), dtype=int64)
        for i, x in enumerate(source.summands):
            for j, y in enumerate(target.summands):
                if self.hom_dim_D(x, y) == 0:
                    continue
                block = restrict(f, self.std(x), i, self.std(y), j, source_std, target_std)
                m[j, i] = self.coefficient(block, x, y)
        return Morphism(source, target, {0: m}, self.prime)

    # ######################################################################################################## #
    #                                                  Cones                                                   #
    # ######################################################################################################## #

    def cone(self, f: Morphism) -> Triangle:
        """
        Complete f: x -> y to a triangle x -> y -> z -> Sigma x. The mapping cone of the chain-level representative is
        reduced to standard form, and the triangle maps are read through the comparison maps of the reduction.

        :param f: Morphism to complete.
        :return: Triangle (x, y, z, f, g, h).
        """

        degenerate = self._degenerate_cone(f)
        if degenerate is not None:
            return degenerate
        x, y = f.source, f.target
        x_std, y_std = self.resolve(x), self.resolve(y)
        c = cone_complex(self.chain_map(f, x_std, y_std))
        reduction = reduce_complex(c, self.n)
        z, z_std = reduction.obj, reduction.std

        # g: y -> z is v restricted to the Y part of the cone
        g_maps = {d: reduction.v.at(d)[:, len(x_std.term(d + 1)):] for d in z_std.terms}
        g = self.morphism_of_chain_map(ChainMap(y_std, z_std, g_maps), y_std, z_std)

        # h: z -> Sigma x is the projection on X[1] composed with the sign fix towards std(Sigma x)
        sx = x.shifted(1)
        sx_std = self.resolve(sx)
        h_maps = {}
        for d in z_std.terms:
            rows = len(x_std.term(d + 1))
            if rows == 0:
                continue
            block = reduction.u.at(d)[:rows, :].copy()
            for i in range(len(sx)):
                lower = sx_std.lower_positions(i)
                if lower is not None and lower[0] == d:
                    block[lower[1], :] = -block[lower[1], :]
            h_maps[d] = block
        h = self.morphism_of_chain_map(ChainMap(z_std, sx_std, h_maps), z_std, sx_std)
        return Triangle(x, y, z, f, g, h)

    def cone_object(self, f: Morphism) -> DerivedObject:
        if f.source.is_zero() or f.target.is_zero():
            return self._degenerate_cone(f).z
        x_std, y_std = self.resolve(f.source), self.resolve(f.target)
        return reduce_complex(cone_complex(self.chain_map(f, x_std, y_std)), self.n).obj

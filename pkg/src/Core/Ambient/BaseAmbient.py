from typing import Any, Dict, List, Tuple, Iterable, Sequence, Optional
from collections import namedtuple
from numpy import ndarray, zeros, int64, asarray

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.Morphism import Morphism, Triangle
from NegCat.Core.Linalg.FiniteField import check_prime, rank


class BaseAmbient:

    def __init__(self, config: namedtuple):
        """
        BaseAmbient is the interface of a Hom-finite Krull-Schmidt triangulated category in which every Hom space
        between two indecomposables has a canonical basis, indexed by twist labels k. Morphisms between decomposed
        objects are coefficient matrices per twist, composition uses cached structure constants and cones are
        computed by the subclasses.

        :param config: Namedtuple containing the ambient parameters.
        """

        self.name: str = self.__class__.__name__
        self.config: namedtuple = config
        self.n: int = config.n
        self.w: int = config.w
        self.prime: int = check_prime(config.prime)
        self.verbose: bool = config.verbose
        self.__composition_cache: Dict[Tuple, int] = {}
        self.__shift_cache: Dict[Tuple, Tuple[Any, int]] = {}

    # ######################################################################################################## #
    #                                       Interface of the subclasses                                        #
    # ######################################################################################################## #

    def make_object(self, summands: Iterable[Any] = ()) -> AmbientObject:
        raise NotImplementedError

    def indecomposables(self) -> List[Any]:
        """All the indecomposables the enumerations range over, canonically sorted."""
        raise NotImplementedError

    def basis_labels(self, x: Any, y: Any) -> Tuple[int, ...]:
        """Twist labels k of the canonical basis of Hom(x, y) between two indecomposables."""
        raise NotImplementedError

    def shift_indecomposable(self, x: Any, m: int) -> Tuple[Any, int]:
        """Sigma^m x in canonical form, with the twist offset s such that lift(Sigma^m x) = F^s Sigma^m lift(x)."""
        raise NotImplementedError

    def _composition_constant(self, x: Any, k: int, y: Any, l: int, z: Any) -> int:
        raise NotImplementedError

    def _shift_constant(self, x: Any, y: Any, k: int, m: int) -> int:
        raise NotImplementedError

    def cone(self, f: Morphism) -> Triangle:
        raise NotImplementedError

    # ######################################################################################################## #
    #                                                 Objects                                                  #
    # ######################################################################################################## #

    def shift(self, x: AmbientObject, m: int = 1) -> AmbientObject:
        return self.make_object(self.shift_indecomposable(s, m)[0] for s in x.summands)

    def hom_dim(self, x: AmbientObject, y: AmbientObject) -> int:
        """
        Dimension of Hom(x, y), additive in both arguments.
        """

        return sum(len(self.basis_labels(a, b)) for a in x.summands for b in y.summands)

    def hom_dim_indec(self, a: Any, b: Any) -> int:
        return len(self.basis_labels(a, b))

    def object_of(self, x: Any) -> AmbientObject:
        return self.make_object([x])

    # ######################################################################################################## #
    #                                               Morphisms                                                  #
    # ######################################################################################################## #

    def morphism(self, source: AmbientObject, target: AmbientObject,
                 components: Optional[Dict[int, ndarray]] = None) -> Morphism:
        return Morphism(source, target, components, self.prime)

    def zero(self, source: AmbientObject, target: AmbientObject) -> Morphism:
        return Morphism(source, target, {}, self.prime)

    def identity(self, x: AmbientObject) -> Morphism:
        m = zeros((len(x), len(x)), dtype=int64)
        for i in range(len(x)):
            m[i, i] = 1
        return Morphism(x, x, {0: m}, self.prime)

    def basis_entries(self, source: AmbientObject, target: AmbientObject) -> List[Tuple[int, int, int]]:
        """
        Ordered list of the (target index, source index, twist) triples indexing the basis of Hom(source, target).
        """

        entries = []
        for j, b in enumerate(target.summands):
            for i, a in enumerate(source.summands):
                for k in self.basis_labels(a, b):
                    entries.append((j, i, k))
        return entries

    def hom_basis(self, source: AmbientObject, target: AmbientObject) -> List[Morphism]:
        basis = []
        for j, i, k in self.basis_entries(source, target):
            m = zeros((len(target), len(source)), dtype=int64)
            m[j, i] = 1
            basis.append(Morphism(source, target, {k: m}, self.prime))
        return basis

    def coordinates(self, f: Morphism) -> ndarray:
        return asarray([f.component(k)[j, i] for j, i, k in self.basis_entries(f.source, f.target)],
                       dtype=int64).reshape(-1)

    def from_coordinates(self, source: AmbientObject, target: AmbientObject, v: Sequence[int]) -> Morphism:
        components: Dict[int, ndarray] = {}
        for (j, i, k), c in zip(self.basis_entries(source, target), v):
            if c % self.prime:
                if k not in components:
                    components[k] = zeros((len(target), len(source)), dtype=int64)
                components[k][j, i] = c
        return Morphism(source, target, components, self.prime)

    def composition_constant(self, x: Any, k: int, y: Any, l: int, z: Any) -> int:
        key = (x, k, y, l, z)
        if key not in self.__composition_cache:
            self.__composition_cache[key] = self._composition_constant(x, k, y, l, z) % self.prime
        return self.__composition_cache[key]

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """
        Composite g o f of f: x -> y and g: y -> z.
        """

        if f.target != g.source:
            raise ValueError(f"[{self.name}] Cannot compose {g.source} -> {g.target} after {f.source} -> {f.target}.")
        x, y, z = f.source, f.target, g.target
        components: Dict[int, ndarray] = {}
        for k, fk in f.components.items():
            for l, gl in g.components.items():
                for j, i in zip(*fk.nonzero()):
                    for h in gl[:, j].nonzero()[0]:
                        c = self.composition_constant(x.summands[i], k, y.summands[j], l, z.summands[h])
                        if c:
                            if k + l not in components:
                                components[k + l] = zeros((len(z), len(x)), dtype=int64)
                            components[k + l][h, i] += int(gl[h, j]) * int(fk[j, i]) * c
        return Morphism(x, z, components, self.prime)

    def compose_all(self, *maps: Morphism) -> Morphism:
        """Composite of maps given in application order."""
        result = maps[0]
        for f in maps[1:]:
            result = self.compose(f, result)
        return result

    def shift_data(self, x: Any, m: int) -> Tuple[Any, int]:
        key = (x, m)
        if key not in self.__shift_cache:
            self.__shift_cache[key] = self.shift_indecomposable(x, m)
        return self.__shift_cache[key]

    def shift_morphism(self, f: Morphism, m: int = 1) -> Morphism:
        """
        Sigma^m f, between the canonical forms of Sigma^m source and Sigma^m target.
        """

        if m == 0:
            return f
        source, target = self.shift(f.source, m), self.shift(f.target, m)
        source_pos = self.__placement(f.source, source, m)
        target_pos = self.__placement(f.target, target, m)
        components: Dict[int, ndarray] = {}
        for k, fk in f.components.items():
            for j, i in zip(*fk.nonzero()):
                _, s_x = self.shift_data(f.source.summands[i], m)
                _, s_y = self.shift_data(f.target.summands[j], m)
                k2 = k + s_x - s_y
                c = self._shift_constant(f.source.summands[i], f.target.summands[j], k, m) % self.prime
                if k2 not in components:
                    components[k2] = zeros((len(target), len(source)), dtype=int64)
                components[k2][target_pos[j], source_pos[i]] += c * int(fk[j, i])
        return Morphism(source, target, components, self.prime)

    def __placement(self, x: AmbientObject, shifted: AmbientObject, m: int) -> List[int]:

        # Position of Sigma^m of every summand of x among the summands of the canonical Sigma^m x
        free = {}
        for index, s in enumerate(shifted.summands):
            free.setdefault(s, []).append(index)
        return [free[self.shift_data(s, m)[0]].pop(0) for s in x.summands]

    def is_zero(self, f: Morphism) -> bool:
        return f.is_zero()

    # ######################################################################################################## #
    #                                         Direct sums and blocks                                           #
    # ######################################################################################################## #

    def sub_object(self, x: AmbientObject, indices: Sequence[int]) -> AmbientObject:
        return self.make_object(x.summands[i] for i in indices)

    def inclusion(self, x: AmbientObject, indices: Sequence[int]) -> Morphism:
        """
        Split inclusion of the summands of x at the given positions.
        """

        sub = self.sub_object(x, indices)
        order = sorted(indices, key=lambda i: (x.summands[i], i))
        m = zeros((len(x), len(sub)), dtype=int64)
        for col, i in enumerate(order):
            m[i, col] = 1
        return Morphism(sub, x, {0: m}, self.prime)

    def projection(self, x: AmbientObject, indices: Sequence[int]) -> Morphism:
        inc = self.inclusion(x, indices)
        return Morphism(x, inc.source, {0: inc.component(0).T}, self.prime)

    def direct_sum_columns(self, maps: Sequence[Morphism]) -> Morphism:
        """
        Map (f_1, ..., f_r): x_1 + ... + x_r -> y from maps with a common target.
        """

        target = maps[0].target
        source = self.make_object(s for f in maps for s in f.source.summands)
        free = {}
        for index, s in enumerate(source.summands):
            free.setdefault(s, []).append(index)
        components: Dict[int, ndarray] = {}
        for f in maps:
            columns = [free[s].pop(0) for s in f.source.summands]
            for k, fk in f.components.items():
                if k not in components:
                    components[k] = zeros((len(target), len(source)), dtype=int64)
                components[k][:, columns] += fk
        return Morphism(source, target, components, self.prime)

    def direct_sum_rows(self, maps: Sequence[Morphism]) -> Morphism:
        """
        Map (f_1; ...; f_r): x -> y_1 + ... + y_r from maps with a common source.
        """

        source = maps[0].source
        target = self.make_object(s for f in maps for s in f.target.summands)
        free = {}
        for index, s in enumerate(target.summands):
            free.setdefault(s, []).append(index)
        components: Dict[int, ndarray] = {}
        for f in maps:
            rows = [free[s].pop(0) for s in f.target.summands]
            for k, fk in f.components.items():
                if k not in components:
                    components[k] = zeros((len(target), len(source)), dtype=int64)
                components[k][rows, :] += fk
        return Morphism(source, target, components, self.prime)

    def restrict(self, f: Morphism, source_indices: Sequence[int], target_indices: Sequence[int]) -> Morphism:
        return self.compose_all(self.inclusion(f.source, source_indices), f,
                                self.projection(f.target, target_indices))

    # ######################################################################################################## #
    #                                               Triangles                                                  #
    # ######################################################################################################## #

    def _degenerate_cone(self, f: Morphism) -> Optional[Triangle]:
        """
        Split triangles of the maps 0 -> y and x -> 0, None for any other map.
        """

        x, y = f.source, f.target
        if x.is_zero():
            return Triangle(x, y, y, f, self.identity(y), self.zero(y, self.shift(x)))
        if y.is_zero():
            sx = self.shift(x)
            return Triangle(x, y, sx, f, self.zero(y, sx), -self.identity(sx))
        return None

    def rotate(self, t: Triangle) -> Triangle:
        """
        Rotation y -g-> z -h-> Sigma x -(-Sigma f)-> Sigma y of a triangle x -f-> y -g-> z -h-> Sigma x.
        """

        return Triangle(t.y, t.z, self.shift(t.x), t.g, t.h, -self.shift_morphism(t.f))

    def hom_long_exact_check(self, t: Triangle, probes: Optional[Iterable[Any]] = None) -> bool:
        """
        Exactness of Hom(p, -) along x -> y -> z -> Sigma x -> Sigma y for every indecomposable probe p:
        the rank of each induced map must match the dimension count of its neighbours.
        """

        probes = self.indecomposables() if probes is None else probes
        sequence = [t.f, t.g, t.h, self.shift_morphism(t.f)]
        for probe in probes:
            p_obj = self.object_of(probe)
            ranks = []
            for f in sequence:
                basis = self.hom_basis(p_obj, f.source)
                if not basis:
                    ranks.append(0)
                    continue
                images = asarray([self.coordinates(self.compose(f, b)) for b in basis], dtype=int64).T
                ranks.append(rank(images.reshape(-1, len(basis)), self.prime) if images.size else 0)
            # dim Hom(p, middle term) = rank of outgoing map + rank of incoming map
            middles = [t.y, t.z, self.shift(t.x)]
            for index, middle in enumerate(middles):
                if self.hom_dim(p_obj, middle) != ranks[index] + ranks[index + 1]:
                    return False
        return True

    def __str__(self) -> str:

        description = "\n"
        description += f"# {self.name}\n"
        description += f"    n: {self.n}\n"
        description += f"    w: {self.w}\n"
        description += f"    Characteristic: {self.prime}\n"
        return description

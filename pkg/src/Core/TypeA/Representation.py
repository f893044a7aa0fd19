from typing import List, Tuple, Optional, Sequence
from numpy import ndarray, zeros, asarray, int64, eye

from NegCat.Core.Linalg.FiniteField import kernel_basis, rank, matmul_mod, mod_p
from NegCat.Core.TypeA.Interval import Interval, ModuleObject

Arrow = Tuple[int, int, ndarray]


class Representation:

    def __init__(self,
                 spaces: Sequence[int],
                 maps: Optional[Sequence[ndarray]] = None,
                 arrows: Optional[Sequence[Arrow]] = None,
                 prime: int = 2):
        """
        Representation of a quiver by vector spaces over GF(p) and linear maps.
        The default quiver is the linearly oriented A_n quiver, where maps[i] goes from vertex i+1 to vertex i+2.
        Any other quiver is given by 'arrows', a list of (source, target, matrix) with 1-based vertices.

        :param spaces: Dimension of the space at each vertex.
        :param maps: Matrices of the A_n arrows, with shape dim(i+1) x dim(i).
        :param arrows: Arrows of an arbitrary quiver.
        :param prime: Characteristic of the ground field.
        """

        self.name: str = self.__class__.__name__
        self.spaces: Tuple[int, ...] = tuple(int(d) for d in spaces)
        self.prime: int = prime
        if arrows is None:
            maps = [zeros((self.spaces[i + 1], self.spaces[i]), dtype=int64) for i in range(len(self.spaces) - 1)] \
                if maps is None else maps
            if len(maps) != len(self.spaces) - 1:
                raise ValueError(f"[{self.name}] A_n representation requires {len(self.spaces) - 1} maps, "
                                 f"get {len(maps)}.")
            arrows = [(i + 1, i + 2, m) for i, m in enumerate(maps)]
        self.arrows: List[Arrow] = []
        for source, target, m in arrows:
            m = mod_p(asarray(m, dtype=int64).reshape(self.spaces[target - 1], self.spaces[source - 1]), prime)
            self.arrows.append((source, target, m))

    @classmethod
    def from_interval(cls, x: Interval, n: int, prime: int = 2) -> 'Representation':
        """
        Build the interval module M[lo, hi]: one-dimensional on the interval, identity maps inside it.
        """

        spaces = x.dimension_vector(n)
        maps = [eye(spaces[i + 1], spaces[i], dtype=int64) for i in range(n - 1)]
        return cls(spaces, maps, prime=prime)

    @property
    def n(self) -> int:
        return len(self.spaces)

    def is_linear_an(self) -> bool:
        return all(s + 1 == t for s, t, _ in self.arrows) and len(self.arrows) == self.n - 1

    def direct_sum(self, other: 'Representation') -> 'Representation':
        if self.n != other.n or [(s, t) for s, t, _ in self.arrows] != [(s, t) for s, t, _ in other.arrows]:
            raise ValueError(f"[{self.name}] Direct sum requires representations of the same quiver.")
        arrows = []
        for (s, t, a), (_, _, b) in zip(self.arrows, other.arrows):
            m = zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=int64)
            m[:a.shape[0], :a.shape[1]] = a
            m[a.shape[0]:, a.shape[1]:] = b
            arrows.append((s, t, m))
        return Representation([x + y for x, y in zip(self.spaces, other.spaces)], arrows=arrows, prime=self.prime)

    def composite(self, a: int, b: int) -> ndarray:
        """
        Composite map V_a -> V_b along the A_n arrows, for a <= b.
        """

        m = eye(self.spaces[a - 1], dtype=int64)
        for i in range(a, b):
            m = matmul_mod(self.arrows[i - 1][2], m, self.prime)
        return m

    def __str__(self) -> str:
        return f"{self.name}{self.spaces}"


def hom_dim_oracle(x: Representation, y: Representation) -> int:
    """
    Dimension of Hom(x, y), computed as the solution space of the commuting-square equations
    y_a . phi_s = phi_t . x_a for every arrow a: s -> t.

    :param x: Source representation.
    :param y: Target representation.
    :return: dim Hom(x, y).
    """

    if x.n != y.n:
        raise ValueError(f"[Representation] Both representations must have the same number of vertices.")
    p = x.prime
    # One block of unknowns phi_v (dim y_v x dim x_v) per vertex, stored row-major
    offsets, nb_vars = [], 0
    for v in range(x.n):
        offsets.append(nb_vars)
        nb_vars += x.spaces[v] * y.spaces[v]
    if nb_vars == 0:
        return 0
    rows = []
    for (s, t, xa), (_, _, ya) in zip(x.arrows, y.arrows):
        # Equation entries (i, j) with i in y_t and j in x_s
        for i in range(y.spaces[t - 1]):
            for j in range(x.spaces[s - 1]):
                row = zeros(nb_vars, dtype=int64)
                # (ya . phi_s)[i, j] = sum_k ya[i, k] phi_s[k, j]
                for k in range(y.spaces[s - 1]):
                    row[offsets[s - 1] + k * x.spaces[s - 1] + j] += ya[i, k]
                # (phi_t . xa)[i, j] = sum_k phi_t[i, k] xa[k, j]
                for k in range(x.spaces[t - 1]):
                    row[offsets[t - 1] + i * x.spaces[t - 1] + k] -= xa[k, j]
                rows.append(row % p)
    if not rows:
        return nb_vars
    return len(kernel_basis(asarray(rows), p))


def ext1_oracle(x: Interval, y: Representation) -> int:
    """
    Dimension of Ext1(M[x], y) as the cokernel of Hom(P(x.lo), y) -> Hom(P(x.hi + 1), y), applying Hom(-, y) to the
    projective resolution 0 -> P(x.hi + 1) -> P(x.lo) -> M[x] -> 0. With Hom(P(i), y) = y_i, this map is the
    composite y_lo -> y_(hi+1) of the representation.

    :param x: Interval of the first argument.
    :param y: Linearly oriented A_n representation.
    :return: dim Ext1(M[x], y).
    """

    if not y.is_linear_an():
        raise ValueError(f"[Representation] The resolution of M{tuple(x)} requires a linearly oriented A_n target.")
    if x.hi >= y.n:
        return 0
    source, target = y.spaces[x.lo - 1], y.spaces[x.hi]
    if source == 0 or target == 0:
        return target
    image_rank = source - len(kernel_basis(y.composite(x.lo, x.hi + 1), y.prime))
    return target - image_rank


def decompose(r: Representation) -> ModuleObject:
    """
    Decompose a representation of the linearly oriented A_n quiver into interval modules with the rank formula
    mult[a, b] = r(a, b) - r(a-1, b) - r(a, b+1) + r(a-1, b+1), r(a, b) being the rank of V_a -> V_b.

    :param r: Representation of A_n.
    :return: ModuleObject of the interval summands.
    """

    if not r.is_linear_an():
        raise ValueError(f"[Representation] Interval decomposition requires a linearly oriented A_n representation.")
    n = r.n

    def rk(a: int, b: int) -> int:
        if a < 1 or b > n:
            return 0
        return rank(r.composite(a, b), r.prime) if r.spaces[a - 1] and r.spaces[b - 1] else 0

    summands = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            mult = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1)
            summands.extend([Interval(a, b)] * mult)
    return ModuleObject(summands)

from typing import Dict, List, Tuple, Optional
from numpy import ndarray, zeros, int64, asarray, eye

from NegCat.Core.Linalg.FiniteField import mod_p, matmul_mod, is_zero
from NegCat.Core.Derived.DerivedObject import DerivedObject, ShiftedInterval


def allowed_mask(targets: Tuple[int, ...], sources: Tuple[int, ...]) -> ndarray:
    """
    Hom(P(s), P(t)) is one-dimensional, spanned by the inclusion P(s) in P(t), exactly when t <= s.

    :param targets: Vertices of the target projectives (rows).
    :param sources: Vertices of the source projectives (columns).
    :return: Boolean matrix of the entries that may be nonzero.
    """

    return asarray([[t <= s for s in sources] for t in targets], dtype=bool).reshape(len(targets), len(sources))


class ProjComplex:

    def __init__(self,
                 terms: Dict[int, Tuple[int, ...]],
                 diffs: Optional[Dict[int, ndarray]] = None,
                 prime: int = 2):
        """
        Bounded cochain complex of projective kA_n-modules. The term of degree d is a direct sum of P(i), given by
        the list of the vertices i. The differential of degree d maps the term d to the term d + 1.

        :param terms: Map from degree to the tuple of projective vertices.
        :param diffs: Map from degree to the differential matrix with shape len(terms[d+1]) x len(terms[d]).
        :param prime: Characteristic of the ground field.
        """

        self.prime: int = prime
        self.terms: Dict[int, Tuple[int, ...]] = {d: tuple(t) for d, t in terms.items() if len(t) > 0}
        self.diffs: Dict[int, ndarray] = {}
        for d, m in (diffs or {}).items():
            m = mod_p(asarray(m, dtype=int64).reshape(len(self.term(d + 1)), len(self.term(d))), prime)
            if m.size > 0:
                self.diffs[d] = m

    def term(self, d: int) -> Tuple[int, ...]:
        return self.terms.get(d, ())

    def diff(self, d: int) -> ndarray:
        return self.diffs[d] if d in self.diffs else zeros((len(self.term(d + 1)), len(self.term(d))), dtype=int64)

    @property
    def degrees(self) -> List[int]:
        return sorted(self.terms)

    def is_complex(self) -> bool:
        """Check d o d = 0 and that every entry of the differentials is a morphism of projectives."""
        for d in self.degrees:
            if not is_zero(matmul_mod(self.diff(d + 1), self.diff(d), self.prime), self.prime):
                return False
            if (self.diff(d) != 0)[~allowed_mask(self.term(d + 1), self.term(d))].any():
                return False
        return True

    def shifted(self, k: int) -> 'ProjComplex':
        """
        Shift X[k]: the term of degree d is X^{d+k} and the differential is multiplied by (-1)^k.
        """

        sign = -1 if k % 2 else 1
        return ProjComplex({d - k: t for d, t in self.terms.items()},
                           {d - k: sign * m for d, m in self.diffs.items()}, self.prime)

    def __str__(self) -> str:
        return ' -> '.join(f"{d}:{list(self.term(d))}" for d in self.degrees) or '0'


class ChainMap:

    def __init__(self,
                 source: ProjComplex,
                 target: ProjComplex,
                 maps: Optional[Dict[int, ndarray]] = None):
        """
        Degree-wise morphism between two complexes of projectives.

        :param source: Source complex.
        :param target: Target complex.
        :param maps: Map from degree to the matrix with shape len(target.term(d)) x len(source.term(d)).
        """

        self.source: ProjComplex = source
        self.target: ProjComplex = target
        self.prime: int = source.prime
        self.maps: Dict[int, ndarray] = {}
        for d, m in (maps or {}).items():
            m = mod_p(asarray(m, dtype=int64).reshape(len(target.term(d)), len(source.term(d))), self.prime)
            if m.size > 0:
                self.maps[d] = m

    @classmethod
    def identity(cls, x: ProjComplex) -> 'ChainMap':
        return cls(x, x, {d: eye(len(t), dtype=int64) for d, t in x.terms.items()})

    def at(self, d: int) -> ndarray:
        return self.maps[d] if d in self.maps else zeros((len(self.target.term(d)), len(self.source.term(d))),
                                                         dtype=int64)

    def degrees(self) -> List[int]:
        return sorted(set(self.source.terms) & set(self.target.terms))

    def is_chain_map(self) -> bool:
        for d in sorted(set(self.source.terms) | set(self.target.terms)):
            lhs = matmul_mod(self.at(d + 1), self.source.diff(d), self.prime)
            rhs = matmul_mod(self.target.diff(d), self.at(d), self.prime)
            if not is_zero(lhs - rhs, self.prime):
                return False
        return True

    def compose(self, other: 'ChainMap') -> 'ChainMap':
        """
        Composite self o other.
        """

        return ChainMap(other.source, self.target,
                        {d: matmul_mod(self.at(d), other.at(d), self.prime) for d in other.source.terms})

    def __add__(self, other: 'ChainMap') -> 'ChainMap':
        degrees = set(self.maps) | set(other.maps)
        return ChainMap(self.source, self.target, {d: self.at(d) + other.at(d) for d in degrees})

    def scale(self, c: int) -> 'ChainMap':
        return ChainMap(self.source, self.target, {d: c * m for d, m in self.maps.items()})

    def shifted(self, k: int) -> 'ChainMap':
        return ChainMap(self.source.shifted(k), self.target.shifted(k), {d - k: m for d, m in self.maps.items()})


class StdComplex(ProjComplex):

    def __init__(self,
                 obj: DerivedObject,
                 n: int,
                 prime: int = 2):
        """
        Standard projective resolution of a decomposed object: the direct sum, in summand order, of the resolutions
        P(b+1) -> P(a) of the shifted interval modules Sigma^k M[a, b] (the single term P(a) when b = n).

        :param obj: Object to resolve.
        :param n: Number of vertices of the quiver.
        :param prime: Characteristic of the ground field.
        """

        self.obj: DerivedObject = obj
        self.n: int = n
        # Position of the terms of every summand, degree by degree
        self.blocks: List[Dict[int, int]] = []
        terms: Dict[int, List[int]] = {}
        pairs: List[Tuple[int, int, int]] = []
        for summand in obj.summands:
            position = {}
            for d, vertex in summand_terms(summand, n):
                terms.setdefault(d, [])
                position[d] = len(terms[d])
                terms[d].append(vertex)
            if len(position) == 2:
                lower = -summand.shift - 1
                pairs.append((lower, position[lower], position[lower + 1]))
            self.blocks.append(position)
        diffs: Dict[int, ndarray] = {}
        for lower, source_pos, target_pos in pairs:
            if lower not in diffs:
                diffs[lower] = zeros((len(terms.get(lower + 1, [])), len(terms[lower])), dtype=int64)
            diffs[lower][target_pos, source_pos] = 1
        ProjComplex.__init__(self, {d: tuple(t) for d, t in terms.items()}, diffs, prime)

    def lower_positions(self, summand_index: int) -> Optional[Tuple[int, int]]:
        """Degree and position of the lower term of a two-term summand, None for a one-term summand."""
        block = self.blocks[summand_index]
        return (min(block), block[min(block)]) if len(block) == 2 else None


def summand_terms(x: ShiftedInterval, n: int) -> List[Tuple[int, int]]:
    """
    Terms (degree, projective vertex) of the standard resolution of Sigma^k M[a, b].
    """

    k, (a, b) = x.shift, x.interval
    if b == n:
        return [(-k, a)]
    return [(-k - 1, b + 1), (-k, a)]


def restrict(f: ChainMap, source: StdComplex, i: int, target: StdComplex, j: int,
             source_std: StdComplex, target_std: StdComplex) -> ChainMap:
    """
    Block of a chain map between two standard complexes, from the i-th source summand to the j-th target summand.

    :param f: Chain map between the two standard complexes.
    :param source: Standard complex of the i-th source summand alone.
    :param i: Index of the source summand.
    :param target: Standard complex of the j-th target summand alone.
    :param j: Index of the target summand.
    :param source_std: Standard complex of the whole source.
    :param target_std: Standard complex of the whole target.
    :return: The block as a chain map between the single-summand complexes.
    """

    maps = {}
    for d, col in source_std.blocks[i].items():
        if d in target_std.blocks[j]:
            maps[d] = f.at(d)[target_std.blocks[j][d], col].reshape(1, 1)
    return ChainMap(source, target, maps)


def embed(f: ChainMap, i: int, j: int, source_std: StdComplex, target_std: StdComplex,
          maps: Dict[int, ndarray], coefficient: int = 1) -> None:
    """
    Add coefficient * f, a chain map between single summands, into the block (j, i) of degree-wise matrices.
    """

    for d, m in f.maps.items():
        if d in source_std.blocks[i] and d in target_std.blocks[j]:
            if d not in maps:
                maps[d] = zeros((len(target_std.term(d)), len(source_std.term(d))), dtype=int64)
            maps[d][target_std.blocks[j][d], source_std.blocks[i][d]] += coefficient * int(m[0, 0])


def cone_complex(f: ChainMap) -> ProjComplex:
    """
    Mapping cone of a chain map X -> Y: the term of degree d is X^{d+1} + Y^d with differential [[-dX, 0], [f, dY]].
    """

    x, y = f.source, f.target
    degrees = {d - 1 for d in x.terms} | set(y.terms)
    terms = {d: x.term(d + 1) + y.term(d) for d in degrees}
    diffs = {}
    for d in degrees:
        top, left = len(x.term(d + 2)), len(x.term(d + 1))
        rows, cols = top + len(y.term(d + 1)), len(terms[d])
        if rows == 0 or cols == 0:
            continue
        m = zeros((rows, cols), dtype=int64)
        m[:top, :left] = -x.diff(d + 1)
        m[top:, :left] = f.at(d + 1)
        m[top:, left:] = y.diff(d)
        diffs[d] = m
    return ProjComplex(terms, diffs, f.prime)

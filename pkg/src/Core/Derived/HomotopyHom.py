from typing import Dict, List, Tuple, Optional
from numpy import ndarray, zeros, int64, asarray, column_stack

from NegCat.Core.Linalg.FiniteField import kernel_basis, rank, solve, mod_p
from NegCat.Core.Derived.ProjComplex import ProjComplex, ChainMap


class HomotopyHom:

    def __init__(self,
                 source: ProjComplex,
                 target: ProjComplex):
        """
        HomotopyHom computes Hom_K(X, Y), the chain maps X -> Y modulo the null-homotopic ones, for complexes of
        projectives. Chain maps are vectors over the allowed entries of every degree. The quotient comes with an
        explicit basis of chain maps.

        :param source: Complex X.
        :param target: Complex Y.
        """

        self.name: str = self.__class__.__name__
        self.source: ProjComplex = source
        self.target: ProjComplex = target
        self.prime: int = source.prime

        # Variables of the chain maps: allowed entries of every degree
        self.variables: List[Tuple[int, int, int]] = []
        self.index: Dict[Tuple[int, int, int], int] = {}
        for d in sorted(set(source.terms) & set(target.terms)):
            for t, vt in enumerate(target.term(d)):
                for s, vs in enumerate(source.term(d)):
                    if vt <= vs:
                        self.index[(d, t, s)] = len(self.variables)
                        self.variables.append((d, t, s))

        self.cycles: List[ndarray] = self.__chain_map_space()
        self.boundaries: List[ndarray] = self.__homotopy_image()
        self.basis: List[ndarray] = self.__quotient_basis()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __chain_map_space(self) -> List[ndarray]:

        nb = len(self.variables)
        if nb == 0:
            return []
        x, y = self.source, self.target
        rows = []
        degrees = sorted(set(x.terms) | set(y.terms))
        # Entry (i, j) of f^{d+1} dX^d - dY^d f^d, with i in Y^{d+1} and j in X^d
        for d in degrees:
            dx, dy = x.diff(d), y.diff(d)
            for i in range(len(y.term(d + 1))):
                for j in range(len(x.term(d))):
                    row = zeros(nb, dtype=int64)
                    for s in range(len(x.term(d + 1))):
                        if dx[s, j] and (d + 1, i, s) in self.index:
                            row[self.index[(d + 1, i, s)]] += dx[s, j]
                    for t in range(len(y.term(d))):
                        if dy[i, t] and (d, t, j) in self.index:
                            row[self.index[(d, t, j)]] -= dy[i, t]
                    if row.any():
                        rows.append(row)
        if not rows:
            return [v for v in kernel_basis(zeros((0, nb), dtype=int64), self.prime)]
        return kernel_basis(asarray(rows), self.prime)

    def __homotopy_image(self) -> List[ndarray]:

        nb = len(self.variables)
        x, y = self.source, self.target
        images = []
        # A homotopy entry h^d[t, s]: X^d -> Y^{d-1} contributes dY^{d-1} h^d + h^{d+1} dX^d
        for d in sorted(x.terms):
            for t, vt in enumerate(y.term(d - 1)):
                for s, vs in enumerate(x.term(d)):
                    if vt > vs:
                        continue
                    v = zeros(nb, dtype=int64)
                    dy = y.diff(d - 1)
                    for i in range(len(y.term(d))):
                        if dy[i, t] and (d, i, s) in self.index:
                            v[self.index[(d, i, s)]] += dy[i, t]
                    dx = x.diff(d - 1)
                    for j in range(len(x.term(d - 1))):
                        if dx[s, j] and (d - 1, t, j) in self.index:
                            v[self.index[(d - 1, t, j)]] += dx[s, j]
                    v = mod_p(v, self.prime)
                    if v.any():
                        images.append(v)
        return images

    def __quotient_basis(self) -> List[ndarray]:

        basis: List[ndarray] = []
        current = list(self.boundaries)
        current_rank = rank(column_stack(current), self.prime) if current else 0
        for v in self.cycles:
            candidate = current + [v]
            r = rank(column_stack(candidate), self.prime)
            if r > current_rank:
                basis.append(v)
                current, current_rank = candidate, r
        return basis

    def to_vector(self, f: ChainMap) -> ndarray:
        v = zeros(len(self.variables), dtype=int64)
        for (d, t, s), k in self.index.items():
            v[k] = f.at(d)[t, s]
        return v

    def to_chain_map(self, v: ndarray) -> ChainMap:
        maps: Dict[int, ndarray] = {}
        for (d, t, s), k in self.index.items():
            if d not in maps:
                maps[d] = zeros((len(self.target.term(d)), len(self.source.term(d))), dtype=int64)
            maps[d][t, s] = v[k]
        return ChainMap(self.source, self.target, maps)

    def basis_maps(self) -> List[ChainMap]:
        return [self.to_chain_map(v) for v in self.basis]

    def coefficients(self, f: ChainMap) -> Optional[ndarray]:
        """
        Coordinates of the homotopy class of a chain map in the quotient basis.

        :param f: Chain map X -> Y.
        :return: Coefficient vector, None if f is not a chain map.
        """

        if len(self.variables) == 0:
            return zeros(0, dtype=int64)
        v = self.to_vector(f)
        columns = self.basis + self.boundaries
        if not columns:
            return zeros(0, dtype=int64) if not mod_p(v, self.prime).any() else None
        x = solve(column_stack(columns), v, self.prime)
        return None if x is None else x[:len(self.basis)]

    def is_null_homotopic(self, f: ChainMap) -> bool:
        c = self.coefficients(f)
        if c is None:
            raise ValueError(f"[{self.name}] The given map is not a chain map.")
        return not mod_p(c, self.prime).any()

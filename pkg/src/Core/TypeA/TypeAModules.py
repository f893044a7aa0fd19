from typing import Dict, List, Optional

from NegCat.Core.Linalg.FiniteField import check_prime
from NegCat.Core.TypeA.Interval import Interval, all_intervals, projective, injective, simple


class TypeAModules:

    def __init__(self,
                 n: int,
                 prime: int = 2):
        """
        TypeAModules gathers the module category of the linearly oriented A_n quiver 1 -> 2 -> ... -> n.
        Indecomposables are the interval modules, Hom and Ext1 between them are given by closed forms and the AR
        translate is read from a table solved from AR duality.

        :param n: Number of vertices.
        :param prime: Characteristic of the ground field.
        """

        self.name: str = self.__class__.__name__

        if type(n) != int:
            raise TypeError(f"[{self.name}] Wrong 'n' type: int required, get {type(n)}")
        if n < 1:
            raise ValueError(f"[{self.name}] The number of vertices must be positive, get {n}.")
        self.n: int = n
        self.prime: int = check_prime(prime)
        self.intervals: List[Interval] = all_intervals(n)
        self.__tau_table: Optional[Dict[Interval, Optional[Interval]]] = None

    def projective(self, i: int) -> Interval:
        return projective(i, self.n)

    def injective(self, i: int) -> Interval:
        return injective(i, self.n)

    def simple(self, i: int) -> Interval:
        return simple(i, self.n)

    def is_projective(self, x: Interval) -> bool:
        return x.hi == self.n

    def is_injective(self, x: Interval) -> bool:
        return x.lo == 1

    def hom_dim(self, x: Interval, y: Interval) -> int:
        """
        Dimension of Hom(M[x], M[y]): the image of a nonzero map is a quotient of x and a submodule of y.

        :param x: Source interval.
        :param y: Target interval.
        :return: 1 if y.lo <= x.lo <= y.hi <= x.hi, 0 otherwise.
        """

        return 1 if y.lo <= x.lo <= y.hi <= x.hi else 0

    def vertex_dim(self, y: Interval, i: int) -> int:
        """dim Hom(P(i), M[y]), the dimension of M[y] at vertex i."""
        return 1 if y.lo <= i <= y.hi else 0

    def ext1_dim(self, x: Interval, y: Interval) -> int:
        """
        Dimension of Ext1(M[x], M[y]) read from the projective resolution 0 -> P(x.hi + 1) -> P(x.lo) -> M[x] -> 0.

        :param x: First argument.
        :param y: Second argument.
        :return: dim Ext1(M[x], M[y]).
        """

        if self.is_projective(x):
            return 0
        return self.vertex_dim(y, x.hi + 1) - self.vertex_dim(y, x.lo) + self.hom_dim(x, y)

    def ext1_closed_form(self, x: Interval, y: Interval) -> int:
        return 1 if x.hi < self.n and x.lo < y.lo <= x.hi + 1 <= y.hi else 0

    def tau(self, x: Interval) -> Optional[Interval]:
        """
        AR translate of an interval module, None when x is projective.
        """

        if self.__tau_table is None:
            self.__tau_table = self.__solve_tau_table()
        return self.__tau_table[Interval(*x)]

    def tau_inverse(self, x: Interval) -> Optional[Interval]:
        if self.__tau_table is None:
            self.__tau_table = self.__solve_tau_table()
        for source, target in self.__tau_table.items():
            if target == x:
                return source
        return None

    def __solve_tau_table(self) -> Dict[Interval, Optional[Interval]]:

        # For a non-projective x, tau(x) is the unique z with dim Hom(y, z) = dim Ext1(x, y) for every interval y
        table: Dict[Interval, Optional[Interval]] = {}
        for x in self.intervals:
            if self.is_projective(x):
                table[x] = None
                continue
            profile = [self.ext1_dim(x, y) for y in self.intervals]
            candidates = [z for z in self.intervals if [self.hom_dim(y, z) for y in self.intervals] == profile]
            if len(candidates) != 1:
                raise ValueError(f"[{self.name}] AR duality does not determine tau({x}): {len(candidates)} candidates.")
            table[x] = candidates[0]
        return table

    def __str__(self) -> str:

        description = "\n"
        description += f"# {self.name}\n"
        description += f"    Quiver: linear A_{self.n}\n"
        description += f"    Characteristic: {self.prime}\n"
        description += f"    Interval modules: {len(self.intervals)}\n"
        return description

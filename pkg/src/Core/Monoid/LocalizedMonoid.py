from typing import Iterable, List, Optional, Tuple
from itertools import combinations_with_replacement

from NegCat.Core.Monoid.MonoidPresentation import MonoidPresentation, Vector, YES, NO, UNKNOWN

Fraction = Tuple[Vector, Vector]


class LocalizedMonoid:

    def __init__(self, base: MonoidPresentation, inverted: Iterable[Vector]):
        """
        LocalizedMonoid is the localization M[S^-1] of a commutative monoid at the submonoid S generated by a set of
        elements. Elements are fractions (m, s) standing for m - s, and (m, s) = (m', s') when m + s' + t = m' + s + t
        in M for some t in S.

        :param base: Presentation of M.
        :param inverted: Generators of S, as N-vectors of M.
        """

        self.name: str = self.__class__.__name__
        self.base: MonoidPresentation = base
        self.inverted: List[Vector] = sorted({tuple(s) for s in inverted})
        for s in self.inverted:
            if len(s) != base.rank:
                raise ValueError(f"[{self.name}] Wrong inverted element {s}: {base.rank} coordinates required.")

    def element(self, m: Vector, s: Optional[Vector] = None) -> Fraction:
        return tuple(m), self.base.zero() if s is None else tuple(s)

    def q(self, m: Vector) -> Fraction:
        """Canonical map M -> M[S^-1]."""
        return self.element(m)

    def inverse(self, s: Vector) -> Fraction:
        if not self.in_submonoid(s):
            raise ValueError(f"[{self.name}] {s} is not a sum of inverted elements.")
        return self.base.zero(), tuple(s)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return self.base.add(a[0], b[0]), self.base.add(a[1], b[1])

    def in_submonoid(self, s: Vector) -> bool:
        """Syntactic membership of s in S, as a sum of generators of S."""
        degree = sum(s)
        return any(tuple(s) == t for t in self.submonoid(degree))

    def submonoid(self, bound: int) -> List[Vector]:
        """Elements of S that are sums of at most 'bound' generators of S."""
        elements = {self.base.zero()}
        for size in range(1, bound + 1):
            for c in combinations_with_replacement(self.inverted, size):
                t = self.base.zero()
                for s in c:
                    t = self.base.add(t, s)
                elements.add(t)
        return sorted(elements, key=lambda t: (sum(t), t))

    def equal(self, a: Fraction, b: Fraction, bound: int) -> str:
        """
        Bounded equality of two fractions.

        :param a: First fraction (m, s).
        :param b: Second fraction (m', s').
        :param bound: Bound on the degree of t in S and on the excess degree of the rewriting.
        :return: 'yes', 'no' or 'unknown'.
        """

        left, right = self.base.add(a[0], b[1]), self.base.add(b[0], a[1])
        if self.base.group_separates(left, right):
            return NO
        for t in self.submonoid(bound):
            if self.base.eq_bounded(self.base.add(left, t), self.base.add(right, t), bound) == YES:
                return YES
        return UNKNOWN

    def is_inverse_witness(self, s: Vector, bound: int) -> bool:
        """Check q(s) + (0, s) = 0 in M[S^-1]."""
        zero = self.element(self.base.zero())
        return self.equal(self.add(self.q(s), self.inverse(s)), zero, bound) == YES


def localize(base: MonoidPresentation, inverted: Iterable[Vector]) -> LocalizedMonoid:
    return LocalizedMonoid(base, inverted)

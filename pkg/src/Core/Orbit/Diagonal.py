from typing import NamedTuple, Any, Iterable

from NegCat.Core.Ambient.AmbientObject import AmbientObject


class Diagonal(NamedTuple):
    """
    Diagonal (a, b) of the N-gon with vertices 0, ..., N-1, stored with a < b.
    """

    a: int
    b: int

    @classmethod
    def of(cls, a: int, b: int, size: int) -> 'Diagonal':
        a, b = a % size, b % size
        return cls(min(a, b), max(a, b))

    def endpoints(self) -> frozenset:
        return frozenset((self.a, self.b))

    def rotated(self, k: int, size: int) -> 'Diagonal':
        return Diagonal.of(self.a + k, self.b + k, size)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def is_admissible(d: Diagonal, w: int, size: int) -> bool:
    """
    (a, b) is admissible when a != b lie in the polygon and w + 1 divides b - a + 1.
    """

    return 0 <= d.a < d.b < size and (d.b - d.a + 1) % (w + 1) == 0


def crossing(d1: Diagonal, d2: Diagonal) -> bool:
    """
    Strict interleaving of the endpoints: a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1.
    """

    return d1.a < d2.a < d1.b < d2.b or d2.a < d1.a < d2.b < d1.b


def share_endpoint(d1: Diagonal, d2: Diagonal) -> bool:
    return len(d1.endpoints() & d2.endpoints()) > 0


class OrbitObject(AmbientObject):

    def __init__(self, summands: Iterable[Any] = ()):
        """
        OrbitObject is an object of the negative cluster category: a multiset of admissible diagonals.

        :param summands: Diagonal items or (a, b) pairs.
        """

        AmbientObject.__init__(self, summands)

    @staticmethod
    def _wrap(summand: Any) -> Diagonal:
        a, b = summand
        return Diagonal(min(a, b), max(a, b))

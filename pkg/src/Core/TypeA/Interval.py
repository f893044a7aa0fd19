from typing import NamedTuple, Iterable, List, Tuple
from collections import Counter


class Interval(NamedTuple):
    """
    Interval module M[lo, hi] of the linearly oriented A_n quiver 1 -> 2 -> ... -> n.
    """

    lo: int
    hi: int

    def check(self, n: int) -> 'Interval':
        if not 1 <= self.lo <= self.hi <= n:
            raise ValueError(f"[Interval] Interval {self} is not valid for n={n}.")
        return self

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def dimension_vector(self, n: int) -> Tuple[int, ...]:
        return tuple(1 if self.lo <= i <= self.hi else 0 for i in range(1, n + 1))

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def projective(i: int, n: int) -> Interval:
    """P(i) has simple top S(i): it is the interval [i, n]."""
    return Interval(i, n).check(n)


def injective(i: int, n: int) -> Interval:
    """I(i) has simple socle S(i): it is the interval [1, i]."""
    return Interval(1, i).check(n)


def simple(i: int, n: int) -> Interval:
    return Interval(i, i).check(n)


def all_intervals(n: int) -> List[Interval]:
    return [Interval(lo, hi) for lo in range(1, n + 1) for hi in range(lo, n + 1)]


def interval_label(x: Interval, n: int) -> str:
    """
    Name an interval with the usual P / I / S labels when one applies.
    """

    if x.hi == n:
        return f"P({x.lo})"
    if x.lo == 1:
        return f"I({x.hi})"
    if x.lo == x.hi:
        return f"S({x.lo})"
    return str(x)


class ModuleObject:

    def __init__(self, summands: Iterable[Interval] = ()):
        """
        ModuleObject is a Krull-Schmidt decomposition of a module of kA_n: a canonically ordered multiset of intervals.

        :param summands: Interval summands, in any order.
        """

        self.summands: Tuple[Interval, ...] = tuple(sorted(Interval(*s) for s in summands))

    def multiplicities(self) -> Counter:
        return Counter(self.summands)

    def dimension_vector(self, n: int) -> Tuple[int, ...]:
        dims = [0] * n
        for s in self.summands:
            for i in range(s.lo, s.hi + 1):
                dims[i - 1] += 1
        return tuple(dims)

    def __add__(self, other: 'ModuleObject') -> 'ModuleObject':
        return ModuleObject(self.summands + other.summands)

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleObject) and self.summands == other.summands

    def __hash__(self) -> int:
        return hash(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __str__(self) -> str:
        return ' + '.join(str(s) for s in self.summands) if self.summands else '0'

    __repr__ = __str__

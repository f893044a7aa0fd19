from typing import Any, Iterable, List, Tuple, Counter as CounterType
from collections import Counter


class AmbientObject:

    def __init__(self, summands: Iterable[Any] = ()):
        """
        AmbientObject is an object of a Krull-Schmidt category stored decomposed: a canonically sorted multiset of
        indecomposables. Subclasses fix the type of the indecomposables.

        :param summands: Indecomposable summands, in any order.
        """

        self.summands: Tuple[Any, ...] = tuple(sorted(self._wrap(s) for s in summands))

    @staticmethod
    def _wrap(summand: Any) -> Any:
        return summand

    @classmethod
    def zero(cls) -> 'AmbientObject':
        return cls(())

    def is_zero(self) -> bool:
        return len(self.summands) == 0

    def is_indecomposable(self) -> bool:
        return len(self.summands) == 1

    def multiplicities(self) -> CounterType:
        return Counter(self.summands)

    def support(self) -> Tuple[Any, ...]:
        return tuple(sorted(set(self.summands)))

    def index(self, summand: Any) -> int:
        return self.summands.index(summand)

    def positions(self, items: Iterable[Any]) -> List[int]:
        """
        Positions of the given summands, listed in any order, among the sorted summands. Repeated summands receive
        distinct positions.
        """

        free = {}
        for i, s in enumerate(self.summands):
            free.setdefault(s, []).append(i)
        return [free[self._wrap(s)].pop(0) for s in items]

    def __add__(self, other: 'AmbientObject') -> 'AmbientObject':
        if type(other) != type(self):
            raise TypeError(f"[{self.__class__.__name__}] Wrong 'other' type: {self.__class__.__name__} required, "
                            f"get {type(other)}")
        return self.__class__(self.summands + other.summands)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __eq__(self, other) -> bool:
        return type(other) == type(self) and self.summands == other.summands

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self.summands))

    def __str__(self) -> str:
        return ' + '.join(str(s) for s in self.summands) if self.summands else '0'

    __repr__ = __str__

from typing import NamedTuple, Any, Iterable

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.TypeA.Interval import Interval, interval_label


class ShiftedInterval(NamedTuple):
    """
    Indecomposable object Sigma^shift M[lo, hi] of D^b(kA_n).
    """

    shift: int
    interval: Interval

    def shifted(self, k: int) -> 'ShiftedInterval':
        return ShiftedInterval(self.shift + k, self.interval)

    def label(self, n: int) -> str:
        base = interval_label(self.interval, n).replace('(', '').replace(')', '')
        return base if self.shift == 0 else f"{base}@{self.shift}"

    def __str__(self) -> str:
        return f"{self.interval}" if self.shift == 0 else f"{self.interval}@{self.shift}"


class DerivedObject(AmbientObject):

    def __init__(self, summands: Iterable[Any] = ()):
        """
        DerivedObject is an object of D^b(kA_n) in canonical form: a multiset of shifted interval modules.

        :param summands: ShiftedInterval items or (shift, (lo, hi)) pairs.
        """

        AmbientObject.__init__(self, summands)

    @staticmethod
    def _wrap(summand: Any) -> ShiftedInterval:
        shift, interval = summand
        return ShiftedInterval(int(shift), Interval(*interval))

    @classmethod
    def module(cls, x: Interval, shift: int = 0) -> 'DerivedObject':
        return cls([(shift, x)])

    def shifted(self, k: int) -> 'DerivedObject':
        return DerivedObject(s.shifted(k) for s in self.summands)

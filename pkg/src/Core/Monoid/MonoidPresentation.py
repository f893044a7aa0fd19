from typing import Any, Iterable, List, Sequence, Tuple
from collections import Counter, deque
from numpy import asarray, int64

from NegCat.Core.Abelian.Extensions import Conflation
from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Linalg.FiniteField import rank

Vector = Tuple[int, ...]

# Large prime of the group separation test
SEPARATION_PRIME = 32003

YES, NO, UNKNOWN = 'yes', 'no', 'unknown'


class MonoidPresentation:

    def __init__(self,
                 generators: Sequence[Any],
                 relations: Iterable[Tuple[Vector, Vector]] = (),
                 max_states: int = 200000):
        """
        MonoidPresentation is a commutative monoid given by generators and relations u = v between N-vectors.
        Equality of two elements is decided up to a bound on the degree of the intermediate words.

        :param generators: Generators, usually isomorphism classes of indecomposables.
        :param relations: Pairs of N-vectors over the generators.
        :param max_states: Maximal number of words explored by a single equality test.
        """

        self.name: str = self.__class__.__name__
        self.generators: List[Any] = list(generators)
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.max_states: int = max_states
        self.relations: List[Tuple[Vector, Vector]] = []
        for u, v in relations:
            u, v = tuple(int(a) for a in u), tuple(int(a) for a in v)
            if len(u) != len(self.generators) or len(v) != len(self.generators):
                raise ValueError(f"[{self.name}] Relation {u} = {v} does not match the {len(self.generators)} "
                                 f"generators.")
            if u != v and (u, v) not in self.relations and (v, u) not in self.relations:
                self.relations.append((u, v))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def zero(self) -> Vector:
        return (0,) * self.rank

    def unit(self, g: Any) -> Vector:
        v = [0] * self.rank
        v[self.index[g]] = 1
        return tuple(v)

    def vector(self, x: AmbientObject) -> Vector:
        """N-vector of an object whose summands are generators."""
        v = [0] * self.rank
        for s, m in Counter(x.summands).items():
            if s not in self.index:
                raise ValueError(f"[{self.name}] {s} is not a generator.")
            v[self.index[s]] += m
        return tuple(v)

    @staticmethod
    def add(u: Vector, v: Vector) -> Vector:
        return tuple(a + b for a, b in zip(u, v))

    # ######################################################################################################## #
    #                                                 Equality                                                 #
    # ######################################################################################################## #

    def group_separates(self, u: Vector, v: Vector) -> bool:
        """
        True when u - v is outside the span of the relations modulo a large prime, which certifies that u and v
        differ in the group completion, hence in the monoid.
        """

        difference = [a - b for a, b in zip(u, v)]
        if not any(difference):
            return False
        lattice = [[a - b for a, b in zip(l, r)] for l, r in self.relations]
        if not lattice:
            return True
        base = rank(asarray(lattice, dtype=int64), SEPARATION_PRIME)
        return rank(asarray(lattice + [difference], dtype=int64), SEPARATION_PRIME) > base

    def eq_bounded(self, u: Vector, v: Vector, bound: int) -> str:
        """
        Decide u = v by breadth-first rewriting of u with the relations in both directions, through words of degree
        at most max(deg u, deg v) + bound.

        :param u: First element.
        :param v: Second element.
        :param bound: Allowed excess degree of the intermediate words.
        :return: 'yes', 'no' or 'unknown'.
        """

        u, v = tuple(u), tuple(v)
        if u == v:
            return YES
        if self.group_separates(u, v):
            return NO
        cap = max(sum(u), sum(v)) + bound
        moves = self.relations + [(r, l) for l, r in self.relations]
        seen = {u}
        queue = deque([u])
        truncated = False
        while queue:
            word = queue.popleft()
            for left, right in moves:
                if any(w < l for w, l in zip(word, left)):
                    continue
                new = tuple(w - l + r for w, l, r in zip(word, left, right))
                if sum(new) > cap:
                    truncated = True
                    continue
                if new == v:
                    return YES
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
                    if len(seen) > self.max_states:
                        return UNKNOWN
        return UNKNOWN if truncated else NO

    def __str__(self) -> str:

        description = "\n"
        description += f"# {self.name}\n"
        description += f"    Generators: {len(self.generators)}\n"
        description += f"    Relations: {len(self.relations)}\n"
        return description


def monoid_of(generators: Sequence[Any], conflations: Iterable[Conflation], max_states: int = 200000) \
        -> MonoidPresentation:
    """
    Grothendieck monoid of an extension-closed subcategory: one generator per indecomposable and one relation
    [x] + [z] = [y] per conflation x -> y -> z. Split conflations give trivial relations and are dropped.

    :param generators: Indecomposables of the subcategory.
    :param conflations: Conflations of the subcategory.
    :param max_states: Maximal number of words explored by a single equality test.
    :return: Presentation of the monoid.
    """

    presentation = MonoidPresentation(generators, (), max_states)
    relations = []
    for c in conflations:
        if c.is_split():
            continue
        relations.append((presentation.add(presentation.vector(c.x), presentation.vector(c.z)),
                          presentation.vector(c.y)))
    return MonoidPresentation(generators, relations, max_states)

from typing import Dict, Optional, NamedTuple
from numpy import ndarray, zeros, int64, asarray

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Linalg.FiniteField import mod_p, is_zero, equal_mod


class Morphism:

    def __init__(self,
                 source: AmbientObject,
                 target: AmbientObject,
                 components: Optional[Dict[int, ndarray]] = None,
                 prime: int = 2):
        """
        Morphism between two decomposed objects. The component of index k is a matrix with shape
        len(target) x len(source): entry [j, i] is the coefficient of the canonical basis map from the lift of the
        i-th source summand to the k-th twist of the lift of the j-th target summand. The derived ambient only uses k=0.

        :param source: Source object.
        :param target: Target object.
        :param components: Map from twist index to coefficient matrix.
        :param prime: Characteristic of the ground field.
        """

        self.source: AmbientObject = source
        self.target: AmbientObject = target
        self.prime: int = prime
        self.components: Dict[int, ndarray] = {}
        for k, m in (components or {}).items():
            m = mod_p(asarray(m, dtype=int64).reshape(len(target), len(source)), prime)
            if not is_zero(m, prime):
                self.components[int(k)] = m

    @property
    def shape(self):
        return len(self.target), len(self.source)

    def component(self, k: int) -> ndarray:
        return self.components[k] if k in self.components else zeros(self.shape, dtype=int64)

    def is_zero(self) -> bool:
        return len(self.components) == 0

    def scale(self, c: int) -> 'Morphism':
        return Morphism(self.source, self.target, {k: c * m for k, m in self.components.items()}, self.prime)

    def __add__(self, other: 'Morphism') -> 'Morphism':
        if self.source != other.source or self.target != other.target:
            raise ValueError(f"[Morphism] Cannot add morphisms {self.source} -> {self.target} and "
                             f"{other.source} -> {other.target}.")
        components = {k: m.copy() for k, m in self.components.items()}
        for k, m in other.components.items():
            components[k] = components[k] + m if k in components else m
        return Morphism(self.source, self.target, components, self.prime)

    def __neg__(self) -> 'Morphism':
        return self.scale(-1)

    def __sub__(self, other: 'Morphism') -> 'Morphism':
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism) or self.source != other.source or self.target != other.target:
            return False
        keys = set(self.components) | set(other.components)
        return all(equal_mod(self.component(k), other.component(k), self.prime) for k in keys)

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted((k, m.tobytes()) for k, m in self.components.items()))))

    def __str__(self) -> str:
        return f"Morphism({self.source} -> {self.target}, twists={sorted(self.components)})"

    __repr__ = __str__


class Triangle(NamedTuple):
    """
    Distinguished triangle x -f-> y -g-> z -h-> Sigma x.
    """

    x: AmbientObject
    y: AmbientObject
    z: AmbientObject
    f: Morphism
    g: Morphism
    h: Morphism

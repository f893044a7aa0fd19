from typing import Any, Dict, List, NamedTuple

from NegCat.Core.Ambient.AmbientObject import AmbientObject
from NegCat.Core.Ambient.Morphism import Morphism, Triangle
from NegCat.Core.Abelian.AbelianStructure import AbelianStructure
from NegCat.Core.Snake.FGDecomposition import FGDecomposition
from NegCat.Core.Utils.errors import VerificationError


class SnakeResult(NamedTuple):
    """
    Seven-term sequence 0 -> F(c) -> F(c') -> F(c'') -> G(c) -> G(c') -> G(c'') -> 0 of a triangle.
    """

    objects: List[AmbientObject]
    maps: List[Morphism]
    delta: Morphism
    exact: bool
    alternating_sum: tuple


def snake(structure: AbelianStructure, t: Triangle) -> SnakeResult:
    """
    Snake sequence of a triangle c -f-> c' -g-> c'' -h-> Sigma c whose three vertices lie in Sigma A * A. The
    connecting map is delta = psi_c o Sigma^-1 h o Sigma^-1 phi_c''.

    :param structure: Abelian structure of A.
    :param t: Triangle of the ambient category.
    :return: SnakeResult, after checking exactness.
    """

    functors, ambient, sub = structure.functors, structure.ambient, structure.subcategory
    parts: List[FGDecomposition] = []
    for c in (t.x, t.y, t.z):
        d = functors.decompose(c)
        if d is None:
            raise ValueError(f"[SnakeLemma] The vertex {c} of the triangle is not in Sigma A * A.")
        parts.append(d)
    dc, _, dc2 = parts
    delta = ambient.compose_all(ambient.shift_morphism(dc2.phi, -1), ambient.shift_morphism(t.h, -1), dc.psi)
    maps = [functors.F_mor(t.f), functors.F_mor(t.g), delta, functors.G_mor(t.f), functors.G_mor(t.g)]
    objects = [d.f_part for d in parts] + [d.g_part for d in parts]

    # Alternating sum of the class vectors along the sequence
    total = [0] * len(sub.simples)
    for sign, obj in zip((1, -1, 1, -1, 1, -1), objects):
        total = [a + sign * b for a, b in zip(total, sub.class_vector(obj))]

    exact = structure.is_exact(maps)
    if not exact or any(total):
        dump: Dict[str, Any] = {'objects': [str(o) for o in objects],
                                'maps': [{str(k): m.tolist() for k, m in f.components.items()} for f in maps]}
        raise VerificationError(f"[SnakeLemma] The snake sequence of {t.x} -> {t.y} -> {t.z} is not exact.", dump)
    return SnakeResult(objects, maps, delta, exact, tuple(total))

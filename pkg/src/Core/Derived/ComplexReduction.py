from typing import Dict, List, Tuple, NamedTuple
from numpy import ndarray, zeros, int64, eye

from NegCat.Core.Linalg.FiniteField import inv_mod_scalar, matmul_mod
from NegCat.Core.Derived.ProjComplex import ProjComplex, ChainMap, StdComplex
from NegCat.Core.Derived.DerivedObject import DerivedObject, ShiftedInterval
from NegCat.Core.TypeA.Interval import Interval


class Reduction(NamedTuple):
    """
    Standard form of a complex C: the decomposed object, its standard complex S and two chain maps u: S -> C and
    v: C -> S with v o u = id and u o v homotopic to id.
    """

    obj: DerivedObject
    std: StdComplex
    u: ChainMap
    v: ChainMap


def reduce_complex(c: ProjComplex, n: int) -> Reduction:
    """
    Bring a complex of projectives to standard form by Gaussian elimination on its differentials, from the top degree
    down. Row operations are automorphisms of the target term, column operations automorphisms of the source term,
    and both are recorded so that the final complex is isomorphic to c. Every differential ends as a partial matching
    of pivots equal to 1: a pivot P(s) -> P(t) with s = t is contractible, otherwise it resolves an interval module.

    :param c: Complex to reduce.
    :param n: Number of vertices of the quiver.
    :return: Reduction of c.
    """

    p = c.prime
    degrees = c.degrees
    terms = {d: c.term(d) for d in degrees}
    diffs: Dict[int, ndarray] = {d: c.diff(d).copy() for d in degrees}
    phi: Dict[int, ndarray] = {d: eye(len(terms[d]), dtype=int64) for d in degrees}
    psi: Dict[int, ndarray] = {d: eye(len(terms[d]), dtype=int64) for d in degrees}
    pairs: Dict[int, List[Tuple[int, int]]] = {}

    def row_op(d: int, target: int, source: int, coefficient: int) -> None:
        # Row 'target' += coefficient * row 'source' on the term of degree d + 1
        m = diffs[d]
        m[target, :] = (m[target, :] + coefficient * m[source, :]) % p
        phi[d + 1][target, :] = (phi[d + 1][target, :] + coefficient * phi[d + 1][source, :]) % p
        psi[d + 1][:, source] = (psi[d + 1][:, source] - coefficient * psi[d + 1][:, target]) % p
        if d + 1 in diffs:
            up = diffs[d + 1]
            up[:, source] = (up[:, source] - coefficient * up[:, target]) % p

    def col_op(d: int, target: int, source: int, coefficient: int) -> None:
        # Column 'target' += coefficient * column 'source' on the term of degree d
        m = diffs[d]
        m[:, target] = (m[:, target] + coefficient * m[:, source]) % p
        phi[d][source, :] = (phi[d][source, :] - coefficient * phi[d][target, :]) % p
        psi[d][:, target] = (psi[d][:, target] + coefficient * psi[d][:, source]) % p
        if d - 1 in diffs:
            down = diffs[d - 1]
            down[source, :] = (down[source, :] - coefficient * down[target, :]) % p

    def scale_row(d: int, row: int, coefficient: int) -> None:
        inverse = inv_mod_scalar(coefficient, p)
        diffs[d][row, :] = (diffs[d][row, :] * coefficient) % p
        phi[d + 1][row, :] = (phi[d + 1][row, :] * coefficient) % p
        psi[d + 1][:, row] = (psi[d + 1][:, row] * inverse) % p
        if d + 1 in diffs:
            diffs[d + 1][:, row] = (diffs[d + 1][:, row] * inverse) % p

    for d in reversed(degrees):
        if d + 1 not in terms:
            pairs[d] = []
            continue
        m = diffs[d]
        source_vertices, target_vertices = terms[d], terms[d + 1]
        done_cols: List[int] = []
        pairs[d] = []
        while True:
            candidates = [s for s in range(m.shape[1]) if s not in done_cols and m[:, s].any()]
            if not candidates:
                break
            # Pivot: source of minimal vertex, then target of maximal vertex in its column
            s = min(candidates, key=lambda j: (source_vertices[j], j))
            t = max((i for i in range(m.shape[0]) if m[i, s]), key=lambda i: (target_vertices[i], -i))
            for t2 in range(m.shape[0]):
                if t2 != t and m[t2, s]:
                    row_op(d, t2, t, (-m[t2, s] * inv_mod_scalar(m[t, s], p)) % p)
            for s2 in range(m.shape[1]):
                if s2 != s and m[t, s2]:
                    col_op(d, s2, s, (-m[t, s2] * inv_mod_scalar(m[t, s], p)) % p)
            if m[t, s] != 1:
                scale_row(d, t, inv_mod_scalar(m[t, s], p))
            done_cols.append(s)
            pairs[d].append((s, t))

    # Read the standard summands off the pivots
    paired: Dict[int, set] = {d: set() for d in degrees}
    found: List[Tuple[ShiftedInterval, Dict[int, int]]] = []
    for d in degrees:
        for s, t in pairs.get(d, []):
            paired[d].add(s)
            paired[d + 1].add(t)
            vs, vt = terms[d][s], terms[d + 1][t]
            if vs != vt:
                found.append((ShiftedInterval(-(d + 1), Interval(vt, vs - 1)), {d: s, d + 1: t}))
    for d in degrees:
        for i, vertex in enumerate(terms[d]):
            if i not in paired[d]:
                found.append((ShiftedInterval(-d, Interval(vertex, n)), {d: i}))

    obj = DerivedObject(summand for summand, _ in found)
    std = StdComplex(obj, n, p)
    # Match every standard summand with the positions it occupies in the reduced complex
    remaining = list(found)
    iota: Dict[int, ndarray] = {d: zeros((len(terms[d]), len(std.term(d))), dtype=int64) for d in std.terms}
    for index, summand in enumerate(obj.summands):
        k = next(i for i, (s, _) in enumerate(remaining) if s == summand)
        _, positions = remaining.pop(k)
        for d, position in positions.items():
            iota[d][position, std.blocks[index][d]] = 1
    pi = {d: m.T.copy() for d, m in iota.items()}

    u = ChainMap(std, c, {d: matmul_mod(psi[d], iota[d], p) for d in std.terms})
    v = ChainMap(c, std, {d: matmul_mod(pi[d], phi[d], p) for d in std.terms})
    return Reduction(obj, std, u, v)

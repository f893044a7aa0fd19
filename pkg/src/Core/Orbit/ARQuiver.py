from typing import Any, List, Sequence, Union
from numpy import asarray, int64
import networkx as nx

from NegCat.Core.Derived.DerivedCategory import DerivedCategory
from NegCat.Core.Derived.ZACoordinates import to_mesh, from_mesh, mesh_successors
from NegCat.Core.Orbit.OrbitCategory import OrbitCategory
from NegCat.Core.Orbit.Diagonal import Diagonal
from NegCat.Core.Linalg.FiniteField import rank


def ar_quiver(ambient: Union[OrbitCategory, DerivedCategory]) -> nx.DiGraph:
    """
    Auslander-Reiten quiver of an ambient category. Vertices are the indecomposables with their mesh coordinates as
    'col' and 'row' attributes, arrows are the irreducible maps (col, row) -> (col + 1, row +- 1) read on ZA_n.
    For the orbit category the columns are taken in the fundamental domain [0, N).

    :param ambient: OrbitCategory or DerivedCategory.
    :return: Directed graph of the AR quiver.
    """

    graph = nx.DiGraph()
    if isinstance(ambient, OrbitCategory):
        for d in ambient.all_indecomposables():
            col, row = to_mesh(ambient.lift(d), ambient.n)
            graph.add_node(d, col=col, row=row)
        for d in ambient.all_indecomposables():
            col, row = to_mesh(ambient.lift(d), ambient.n)
            for c2, r2 in mesh_successors(col, row, ambient.n):
                graph.add_edge(d, ambient.diagonal_at(c2, r2))
    else:
        vertices = set(ambient.indecomposables())
        for x in sorted(vertices):
            col, row = to_mesh(x, ambient.n)
            graph.add_node(x, col=col, row=row)
        for x in sorted(vertices):
            for c2, r2 in mesh_successors(*to_mesh(x, ambient.n), ambient.n):
                y = from_mesh(c2, r2, ambient.n)
                if y in vertices:
                    graph.add_edge(x, y)
    return graph


def tau_orbit(ambient: OrbitCategory, d: Diagonal) -> List[Diagonal]:
    """
    Orbit of a diagonal under tau^-1, listed from d until it returns to d.
    """

    inverse = {ambient.tau(x): x for x in ambient.all_indecomposables()}
    orbit = [d]
    while inverse[orbit[-1]] != d:
        orbit.append(inverse[orbit[-1]])
    return orbit


def layout(graph: nx.DiGraph) -> dict:
    """Plane positions of the vertices: column to the right, row upwards."""
    return {v: (data['col'], data['row']) for v, data in graph.nodes(data=True)}


def rows(graph: nx.DiGraph) -> List[List[Any]]:
    """Vertices grouped by mesh row, each row sorted by column."""
    by_row = {}
    for v, data in graph.nodes(data=True):
        by_row.setdefault(data['row'], []).append((data['col'], v))
    return [[v for _, v in sorted(by_row[r], key=lambda item: item[0])] for r in sorted(by_row)]


def irreducible_dim(ambient: Union[OrbitCategory, DerivedCategory], x: Any, y: Any,
                    indecomposables: Sequence[Any]) -> int:
    """
    Dimension of rad(x, y) / rad^2(x, y) for indecomposables x != y, with rad^2 spanned by the composites
    x -> z -> y of radical maps through the given indecomposables z. Endomorphisms of nonzero twist are radical.

    :param ambient: OrbitCategory or DerivedCategory.
    :param x: Source indecomposable.
    :param y: Target indecomposable.
    :param indecomposables: Indecomposables to factor through, closed under the paths from x to y.
    :return: Number of arrows x -> y in the AR quiver.
    """

    if x == y:
        raise ValueError(f"[ARQuiver] Irreducible maps are counted between distinct indecomposables, get {x} twice.")
    source, target = ambient.object_of(x), ambient.object_of(y)
    dim = ambient.hom_dim(source, target)
    if dim == 0:
        return 0

    def radical(a: Any, b: Any) -> List:
        basis = ambient.hom_basis(ambient.object_of(a), ambient.object_of(b))
        return [f for f in basis if a != b or 0 not in f.components]

    composites = []
    for z in indecomposables:
        first = radical(x, z)
        second = radical(z, y) if first else []
        composites.extend(ambient.coordinates(ambient.compose(g, f)) for f in first for g in second)
    if not composites:
        return dim
    return dim - rank(asarray(composites, dtype=int64).T, ambient.prime)

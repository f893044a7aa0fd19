from typing import Tuple

from NegCat.Core.Derived.DerivedObject import ShiftedInterval
from NegCat.Core.TypeA.Interval import Interval


# Mesh coordinates on the ZA_n stable translation quiver of D^b(kA_n).
# Irreducible maps go from (col, row) to (col + 1, row +- 1), tau is col - 2 and Sigma is col + n + 1 with a row flip.


def to_mesh(x: ShiftedInterval, n: int) -> Tuple[int, int]:
    """
    Mesh coordinate (column, row) of Sigma^k M[a, b].

    :param x: Indecomposable object.
    :param n: Number of vertices of the quiver.
    :return: Column and row (1-based) of the object.
    """

    k, (a, b) = x.shift, x.interval
    length = b - a + 1
    col = 2 * n - a - b + k * (n + 1)
    row = length if k % 2 == 0 else n + 1 - length
    return col, row


def from_mesh(col: int, row: int, n: int) -> ShiftedInterval:
    """
    Indecomposable object sitting at a mesh coordinate.

    :param col: Column of the vertex.
    :param row: Row of the vertex, between 1 and n.
    :param n: Number of vertices of the quiver.
    :return: The shifted interval module at (col, row).
    """

    if not 1 <= row <= n:
        raise ValueError(f"[ZACoordinates] Row {row} is out of range for n={n}.")
    guess = col // (n + 1)
    for k in (guess - 1, guess, guess + 1):
        c = col - k * (n + 1)
        length = row if k % 2 == 0 else n + 1 - row
        if (2 * n - c - length + 1) % 2:
            continue
        a = (2 * n - c - length + 1) // 2
        b = (2 * n - c + length - 1) // 2
        if 1 <= a <= b <= n:
            return ShiftedInterval(k, Interval(a, b))
    raise ValueError(f"[ZACoordinates] ({col}, {row}) is not a vertex of the mesh for n={n}.")


def mesh_successors(col: int, row: int, n: int) -> Tuple[Tuple[int, int], ...]:
    """Targets of the irreducible maps leaving (col, row)."""
    return tuple((col + 1, r) for r in (row - 1, row + 1) if 1 <= r <= n)

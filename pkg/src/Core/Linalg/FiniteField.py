from typing import List, Optional, Tuple, Iterator
from itertools import product
from numpy import ndarray, asarray, zeros, eye, concatenate, any as np_any, int64, outer, array_equal


def check_prime(p: int) -> int:
    """
    Check that the given characteristic is a prime number.

    :param p: Characteristic of the prime field.
    :return: The validated prime.
    """

    if type(p) != int:
        raise TypeError(f"[FiniteField] Wrong 'p' type: int required, get {type(p)}")
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"[FiniteField] The characteristic must be a prime number, get {p}.")
    return p


def mod_p(m: ndarray, p: int) -> ndarray:
    return asarray(asarray(m, dtype=int64) % p, dtype=int64)


def inv_mod_scalar(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError(f"[FiniteField] 0 has no inverse modulo {p}.")
    return pow(a, p - 2, p)


def matmul_mod(a: ndarray, b: ndarray, p: int) -> ndarray:
    return mod_p(asarray(a, dtype=int64) @ asarray(b, dtype=int64), p)


def rref_mod(m: ndarray, p: int) -> Tuple[ndarray, List[int]]:
    """
    Reduced row echelon form over the prime field.

    :param m: Matrix to reduce.
    :param p: Characteristic of the field.
    :return: The reduced matrix and the list of pivot columns.
    """

    a = mod_p(m, p).copy()
    if a.ndim != 2:
        raise ValueError(f"[FiniteField] rref requires a 2D matrix, get {a.ndim} dimensions.")
    rows, cols = a.shape
    r = 0
    pivots: List[int] = []
    for c in range(cols):
        if r == rows:
            break
        candidates = [i for i in range(r, rows) if a[i, c] != 0]
        if not candidates:
            continue
        piv = candidates[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r, :] = (a[r, :] * inv_mod_scalar(a[r, c], p)) % p
        # Eliminate the pivot column from every other row at once
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - outer(factors, a[r, :])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: ndarray, p: int = 2) -> int:
    """
    Rank of a matrix over the prime field.

    :param m: Matrix.
    :param p: Characteristic of the field.
    :return: Rank over GF(p).
    """

    m = asarray(m, dtype=int64)
    if m.size == 0:
        return 0
    _, pivots = rref_mod(m, p)
    return len(pivots)


def kernel_basis(m: ndarray, p: int = 2) -> List[ndarray]:
    """
    Basis of the right null space of a matrix over the prime field.

    :param m: Matrix with shape (rows, cols).
    :param p: Characteristic of the field.
    :return: List of column vectors v with m.v = 0; its size is cols - rank(m).
    """

    m = asarray(m, dtype=int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return [unit_vector(cols, j) for j in range(cols)]
    r, pivots = rref_mod(m, p)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        v = zeros(cols, dtype=int64)
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-r[row, f]) % p
        basis.append(v)
    return basis


def solve(m: ndarray, b: ndarray, p: int = 2) -> Optional[ndarray]:
    """
    Find one solution x of m.x = b over the prime field.

    :param m: Matrix with shape (rows, cols).
    :param b: Right-hand side vector with rows entries.
    :param p: Characteristic of the field.
    :return: A solution (free variables set to 0) or None when the system is inconsistent.
    """

    m = asarray(m, dtype=int64)
    b = asarray(b, dtype=int64).reshape(-1)
    if m.ndim != 2 or m.shape[0] != b.shape[0]:
        raise ValueError(f"[FiniteField] Dimension mismatch: matrix {m.shape} with right-hand side {b.shape}.")
    rows, cols = m.shape
    if cols == 0:
        return zeros(0, dtype=int64) if not np_any(mod_p(b, p)) else None
    aug = concatenate([mod_p(m, p), mod_p(b, p).reshape(-1, 1)], axis=1)
    r, pivots = rref_mod(aug, p)
    if cols in pivots:
        return None
    x = zeros(cols, dtype=int64)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, cols]
    return x


def in_span(columns: ndarray, v: ndarray, p: int = 2) -> bool:
    """
    Check if a vector lies in the span of the columns of a matrix.
    """

    columns = asarray(columns, dtype=int64)
    if columns.size == 0:
        return not np_any(mod_p(v, p))
    return rank(concatenate([columns, asarray(v, dtype=int64).reshape(-1, 1)], axis=1), p) == rank(columns, p)


def unit_vector(size: int, index: int) -> ndarray:
    v = zeros(size, dtype=int64)
    v[index] = 1
    return v


def identity(size: int) -> ndarray:
    return eye(size, dtype=int64)


def is_zero(m: ndarray, p: int = 2) -> bool:
    return not np_any(mod_p(m, p))


def equal_mod(a: ndarray, b: ndarray, p: int = 2) -> bool:
    return array_equal(mod_p(a, p), mod_p(b, p))


def projective_vectors(dim: int, p: int = 2) -> Iterator[ndarray]:
    """
    Enumerate the nonzero vectors of GF(p)^dim up to scalar multiples (first nonzero entry equal to 1).

    :param dim: Dimension of the space.
    :param p: Characteristic of the field.
    """

    for lead in range(dim):
        for tail in product(range(p), repeat=dim - lead - 1):
            v = zeros(dim, dtype=int64)
            v[lead] = 1
            v[lead + 1:] = tail
            yield v


def all_vectors(dim: int, p: int = 2, nonzero: bool = True) -> Iterator[ndarray]:
    """
    Enumerate the vectors of GF(p)^dim.

    :param dim: Dimension of the space.
    :param p: Characteristic of the field.
    :param nonzero: If True, the zero vector is skipped.
    """

    for entries in product(range(p), repeat=dim):
        if nonzero and not any(entries):
            continue
        yield asarray(entries, dtype=int64)

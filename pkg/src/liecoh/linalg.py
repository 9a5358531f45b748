"""Exact linear algebra over the Gaussian rationals.

Two arithmetic regimes, both exact:

* ``rank_sparse`` clears denominators row by row and then runs
  fraction-free elimination on Gaussian-integer rows: a surviving row is
  combined with the pivot row by cross-multiplication and its integer
  content is divided out, so the loop never touches rational arithmetic.
  Pivots are always the first nonzero entry scanning columns left to
  right and rows top to bottom, which makes every run deterministic.
* The dense helpers (``rref``, ``kernel_basis``, ``inverse``, ``det``,
  ``SpanBuilder``) do Gauss-Jordan over Scalar directly.  They are used
  on the small matrices that need actual vectors back, not just a rank.
"""

from __future__ import annotations

from math import gcd

from .scalars import ONE, ZERO, Scalar

__all__ = [
    "rank_sparse",
    "rank_dense",
    "rref",
    "kernel_basis",
    "inverse",
    "det",
    "SpanBuilder",
]


def _int_row(row: dict[int, Scalar]) -> dict[int, tuple[int, int]]:
    """Scale one sparse row by a positive integer to Gaussian-integer entries."""
    if not row:
        return {}
    scale = 1
    for value in row.values():
        for part in (value.re, value.im):
            d = part.denominator
            scale = scale // gcd(scale, d) * d
    out = {}
    for col, value in row.items():
        a = int(value.re * scale)
        b = int(value.im * scale)
        if a or b:
            out[col] = (a, b)
    return _strip_content(out)


def _strip_content(row: dict[int, tuple[int, int]]) -> dict[int, tuple[int, int]]:
    g = 0
    for a, b in row.values():
        g = gcd(g, a)
        g = gcd(g, b)
        if g == 1:
            return row
    if g <= 1:
        return row
    return {c: (a // g, b // g) for c, (a, b) in row.items()}


def rank_sparse(rows, ncols: int) -> int:
    """Exact rank of a matrix given as sparse {column: Scalar} rows."""
    live = [r for r in (_int_row(dict(row)) for row in rows) if r]
    rank = 0
    for col in range(ncols):
        pivot_index = None
        for idx, row in enumerate(live):
            if col in row:
                pivot_index = idx
                break
        if pivot_index is None:
            continue
        pivot_row = live.pop(pivot_index)
        pa, pb = pivot_row[col]
        rank += 1
        if not live:
            break
        reduced = []
        for row in live:
            if col not in row:
                reduced.append(row)
                continue
            ra, rb = row.pop(col)
            combo = {}
            for c, (a, b) in row.items():
                combo[c] = (pa * a - pb * b, pa * b + pb * a)
            for c, (a, b) in pivot_row.items():
                if c == col:
                    continue
                ta = ra * a - rb * b
                tb = ra * b + rb * a
                ua, ub = combo.get(c, (0, 0))
                ua -= ta
                ub -= tb
                if ua or ub:
                    combo[c] = (ua, ub)
                elif c in combo:
                    del combo[c]
            if combo:
                reduced.append(_strip_content(combo))
        live = reduced
        if not live:
            break
    return rank


def rank_dense(matrix) -> int:
    rows = [
        {j: v for j, v in enumerate(row) if v}
        for row in matrix
    ]
    ncols = len(matrix[0]) if matrix else 0
    return rank_sparse(rows, ncols)


def rref(matrix):
    """Reduced row echelon form over Scalar.

    Returns (rows, pivot_columns); the input is not modified.  Pivoting
    follows the same deterministic first-nonzero rule as rank_sparse.
    """
    rows = [[Scalar.coerce(v) for v in row] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(matrix, ncols: int | None = None):
    """Basis of the right kernel {v : M v = 0}, one vector per free column.

    Free columns are visited in increasing order and each basis vector
    has a 1 in its free position, so the output is deterministic.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for row_index, pc in enumerate(pivots):
            vec[pc] = -rows[row_index][f]
        basis.append(vec)
    return basis


def inverse(matrix):
    """Exact inverse of a square Scalar matrix; ValueError if singular."""
    n = len(matrix)
    aug = [
        [Scalar.coerce(v) for v in row] + [ONE if i == j else ZERO for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows[:n]]


def det(matrix) -> Scalar:
    """Exact determinant via forward elimination over Scalar."""
    n = len(matrix)
    rows = [[Scalar.coerce(v) for v in row] for row in matrix]
    sign = 1
    result = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        pivot = rows[c][c]
        result = result * pivot
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = rows[i][c] / pivot
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
    return result if sign > 0 else -result


class SpanBuilder:
    """Incrementally maintained row space in reduced echelon form.

    add() reduces a vector against the rows collected so far and keeps
    it when something survives; contains() tests membership the same
    way.  Used for rank-augmentation arguments: extend a spanning set
    one vector at a time and see which vectors grow the span.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: list[tuple[int, list[Scalar]]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vector):
        vec = [Scalar.coerce(v) for v in vector]
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match span dimension")
        for pivot_col, row in self._rows:
            factor = vec[pivot_col]
            if factor:
                vec = [a - factor * b for a, b in zip(vec, row)]
        return vec

    def add(self, vector) -> bool:
        """Add a vector; True if it enlarged the span."""
        vec = self._reduce(vector)
        pivot_col = next((c for c, v in enumerate(vec) if v), None)
        if pivot_col is None:
            return False
        inv = ONE / vec[pivot_col]
        vec = [inv * v for v in vec]
        for i, (pc, row) in enumerate(self._rows):
            factor = row[pivot_col]
            if factor:
                self._rows[i] = (pc, [a - factor * b for a, b in zip(row, vec)])
        self._rows.append((pivot_col, vec))
        self._rows.sort(key=lambda item: item[0])
        return True

    def contains(self, vector) -> bool:
        return not any(self._reduce(vector))

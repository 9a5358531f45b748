"""Finite-dimensional Lie algebras given by structure constants.

An algebra is a dimension n, a sparse bracket table storing [e_i, e_j]
for i < j as a coefficient vector over the basis, and optional basis
labels.  Construction always checks the Jacobi identity on every basis
triple, so an instance that exists is a Lie algebra.

Families used throughout:

* ``aff_r()`` -- the two-dimensional algebra span{X, Y} with [X, Y] = Y
  (the affine line).
* ``abelian(d)`` -- d-dimensional abelian; ``abelian(0)`` is the
  identity for ``direct_sum``.
* ``heisenberg(m)`` -- dimension 2m+1, basis (Z, X_1..X_2m) with
  [X_i, X_{m+i}] = Z and Z central.
* ``diamond(lam)`` -- the oscillator-type algebra of dimension 2n+2 for
  n parameters:  basis (X_0..X_n, Y_0..Y_n) with [Y_0, X_i] = lam_i X_i,
  [Y_0, Y_i] = -lam_i Y_i and [X_i, Y_i] = lam_i X_0, carrying the
  hyperbolic invariant form pairing X_i with Y_i.  Returns the algebra
  together with its quadratic structure.
"""

from __future__ import annotations

from . import linalg
from .errors import (
    DimensionMismatch,
    DuplicatePair,
    IndexOutOfRange,
    JacobiViolation,
)
from .scalars import ONE, ZERO, Scalar, scalar_from_json, scalar_to_json

__all__ = [
    "LieAlgebra",
    "from_structure_constants",
    "bracket",
    "aff_r",
    "abelian",
    "heisenberg",
    "diamond",
    "direct_sum",
    "derived_ideal_dim",
    "change_basis",
    "algebra_to_json",
    "algebra_from_json",
]


class LieAlgebra:
    """A Lie algebra over Q(i) described by structure constants.

    ``brackets`` maps a pair (i, j) with i < j to the sparse coefficient
    vector of [e_i, e_j]; missing pairs bracket to zero, and [e_j, e_i]
    is recovered by antisymmetry.
    """

    __slots__ = ("dim", "brackets", "labels")

    def __init__(self, dim: int, brackets, labels=None):
        if not isinstance(dim, int) or dim < 0:
            raise DimensionMismatch(f"dimension must be a non-negative integer, got {dim!r}")
        table: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), vector in brackets.items():
            if not (0 <= i < j < dim):
                raise IndexOutOfRange(
                    f"bracket pair ({i}, {j}) needs 0 <= i < j < {dim}"
                )
            clean = {}
            for l, value in vector.items():
                if not (0 <= l < dim):
                    raise IndexOutOfRange(
                        f"bracket [e_{i}, e_{j}] hits basis index {l} outside 0..{dim - 1}"
                    )
                coeff = Scalar.coerce(value)
                if coeff:
                    clean[l] = coeff
            if clean:
                table[(i, j)] = clean
        self.dim = dim
        self.brackets = table
        if labels is not None:
            labels = tuple(str(name) for name in labels)
            if len(labels) != dim:
                raise DimensionMismatch(
                    f"{len(labels)} labels supplied for dimension {dim}"
                )
        self.labels = labels
        self._check_jacobi()

    def bracket_basis(self, i: int, j: int) -> dict[int, Scalar]:
        """Sparse coefficient vector of [e_i, e_j] for any index order."""
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexOutOfRange(f"basis index out of range in ({i}, {j})")
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        flipped = self.brackets.get((j, i), {})
        return {l: -c for l, c in flipped.items()}

    def bracket_vectors(self, x, y) -> list[Scalar]:
        """[x, y] for coefficient vectors x, y; returns a dense vector."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(
                f"vectors of length {len(x)} and {len(y)} in dimension {self.dim}"
            )
        xs = [Scalar.coerce(v) for v in x]
        ys = [Scalar.coerce(v) for v in y]
        out = [ZERO] * self.dim
        for (i, j), vector in self.brackets.items():
            factor = xs[i] * ys[j] - xs[j] * ys[i]
            if factor:
                for l, c in vector.items():
                    out[l] = out[l] + factor * c
        return out

    def _bracket_sparse(self, vec: dict[int, Scalar], k: int) -> dict[int, Scalar]:
        # [v, e_k] for sparse v, used by the Jacobi check
        out: dict[int, Scalar] = {}
        for l, coeff in vec.items():
            for target, c in self.bracket_basis(l, k).items():
                value = out.get(target, ZERO) + coeff * c
                if value:
                    out[target] = value
                elif target in out:
                    del out[target]
        return out

    def _check_jacobi(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vij = self.brackets.get((i, j))
                for k in range(j + 1, self.dim):
                    residual: dict[int, Scalar] = {}
                    for vec, arg in (
                        (vij, k),
                        (self.brackets.get((j, k)), i),
                        ({l: -c for l, c in self.brackets.get((i, k), {}).items()}, j),
                    ):
                        if not vec:
                            continue
                        for target, c in self._bracket_sparse(vec, arg).items():
                            value = residual.get(target, ZERO) + c
                            if value:
                                residual[target] = value
                            elif target in residual:
                                del residual[target]
                    if residual:
                        dense = [residual.get(l, ZERO) for l in range(self.dim)]
                        raise JacobiViolation((i, j, k), dense)

    def label(self, index: int) -> str:
        if self.labels is not None:
            return self.labels[index]
        return f"e{index}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.brackets == other.brackets
            and self.labels == other.labels
        )

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, pairs={len(self.brackets)})"


def from_structure_constants(dim: int, brackets, labels=None) -> LieAlgebra:
    """Build an algebra from a list of (i, j, coefficient-vector) triples.

    Coefficient vectors are dense sequences of length ``dim``.  Raises
    IndexOutOfRange / DuplicatePair / DimensionMismatch on malformed
    input and JacobiViolation when the constants do not define a Lie
    algebra.
    """
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for i, j, vector in brackets:
        if not (0 <= i < j < dim):
            raise IndexOutOfRange(f"bracket pair ({i}, {j}) needs 0 <= i < j < {dim}")
        if (i, j) in table:
            raise DuplicatePair(f"bracket pair ({i}, {j}) supplied twice")
        values = list(vector)
        if len(values) != dim:
            raise DimensionMismatch(
                f"coefficient vector for ({i}, {j}) has length {len(values)}, expected {dim}"
            )
        table[(i, j)] = {l: Scalar.coerce(v) for l, v in enumerate(values)}
    return LieAlgebra(dim, table, labels=labels)


def bracket(algebra: LieAlgebra, x, y) -> list[Scalar]:
    """[x, y] in the given algebra, for dense coefficient vectors."""
    return algebra.bracket_vectors(x, y)


def aff_r() -> LieAlgebra:
    """The affine line: span{X, Y} with [X, Y] = Y."""
    return LieAlgebra(2, {(0, 1): {1: ONE}}, labels=("X", "Y"))


def abelian(d: int) -> LieAlgebra:
    """The d-dimensional abelian algebra (d = 0 allowed)."""
    if d < 0:
        raise DimensionMismatch(f"abelian dimension must be >= 0, got {d}")
    return LieAlgebra(d, {}, labels=tuple(f"Z{k}" for k in range(1, d + 1)))


def heisenberg(m: int) -> LieAlgebra:
    """The Heisenberg algebra of dimension 2m+1.

    Basis order (Z, X_1, .., X_2m) with [X_i, X_{m+i}] = Z for
    1 <= i <= m and Z central.
    """
    if m < 1:
        raise DimensionMismatch(f"heisenberg needs m >= 1, got {m}")
    table = {(i, m + i): {0: ONE} for i in range(1, m + 1)}
    labels = ("Z",) + tuple(f"X{k}" for k in range(1, 2 * m + 1))
    return LieAlgebra(2 * m + 1, table, labels=labels)


def diamond(lam):
    """The generalized diamond algebra with its invariant form.

    ``lam`` is a sequence of n scalars (zeros allowed).  Returns the
    pair (algebra, quadratic structure); the algebra has dimension
    2n+2 with basis order (X_0..X_n, Y_0..Y_n).
    """
    entries = [Scalar.coerce(v) for v in lam]
    n = len(entries)
    dim = 2 * n + 2
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for i, value in enumerate(entries, start=1):
        if not value:
            continue
        # [Y_0, X_i] = lam_i X_i and [Y_0, Y_i] = -lam_i Y_i, stored with i < j
        table[(i, n + 1)] = {i: -value}
        table[(n + 1, n + 1 + i)] = {n + 1 + i: -value}
        table[(i, n + 1 + i)] = {0: value}
    labels = tuple(f"X{k}" for k in range(n + 1)) + tuple(f"Y{k}" for k in range(n + 1))
    algebra = LieAlgebra(dim, table, labels=labels)
    form = [[ZERO] * dim for _ in range(dim)]
    for i in range(n + 1):
        form[i][n + 1 + i] = ONE
        form[n + 1 + i][i] = ONE
    from . import quadratic  # deferred: quadratic imports this module

    return algebra, quadratic.validate(algebra, form)


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Direct sum with a's basis first, then b's shifted by a.dim."""
    shift = a.dim
    table: dict[tuple[int, int], dict[int, Scalar]] = {
        pair: dict(vector) for pair, vector in a.brackets.items()
    }
    for (i, j), vector in b.brackets.items():
        table[(i + shift, j + shift)] = {l + shift: c for l, c in vector.items()}
    if a.labels is None and b.labels is None:
        labels = None
    else:
        labels = tuple(a.label(i) for i in range(a.dim)) + tuple(
            b.label(i) for i in range(b.dim)
        )
    return LieAlgebra(a.dim + b.dim, table, labels=labels)


def derived_ideal_dim(algebra: LieAlgebra) -> int:
    """Dimension of [g, g], the span of all basis brackets."""
    rows = [
        {l: c for l, c in vector.items()}
        for vector in algebra.brackets.values()
    ]
    return linalg.rank_sparse(rows, algebra.dim)


def change_basis(algebra: LieAlgebra, matrix, inverse_matrix=None) -> LieAlgebra:
    """Structure constants in the basis f_p = sum_l matrix[l][p] e_l.

    The result is validated like any other construction; a change of
    basis of a Lie algebra always passes.
    """
    n = algebra.dim
    cols = [[Scalar.coerce(matrix[l][p]) for l in range(n)] for p in range(n)]
    if inverse_matrix is None:
        inverse_matrix = linalg.inverse(matrix)
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for p in range(n):
        for q in range(p + 1, n):
            old_coords = algebra.bracket_vectors(cols[p], cols[q])
            vector = {}
            for l in range(n):
                value = ZERO
                for s in range(n):
                    value = value + Scalar.coerce(inverse_matrix[l][s]) * old_coords[s]
                if value:
                    vector[l] = value
            if vector:
                table[(p, q)] = vector
    return LieAlgebra(n, table)


def algebra_to_json(algebra: LieAlgebra) -> dict:
    """Serialise an algebra to the JSON schema used by the CLI."""
    pairs = []
    for (i, j) in sorted(algebra.brackets):
        vector = algebra.brackets[(i, j)]
        coeffs = {str(l): scalar_to_json(vector[l]) for l in sorted(vector)}
        pairs.append({"i": i, "j": j, "coeffs": coeffs})
    data = {"dim": algebra.dim, "brackets": pairs}
    if algebra.labels is not None:
        data["labels"] = list(algebra.labels)
    return data


def algebra_from_json(data: dict) -> LieAlgebra:
    """Read an algebra from the JSON schema; validates like any constructor."""
    if not isinstance(data, dict) or "dim" not in data:
        raise DimensionMismatch("algebra JSON must be an object with a 'dim' key")
    dim = data["dim"]
    if not isinstance(dim, int):
        raise DimensionMismatch(f"'dim' must be an integer, got {dim!r}")
    table: dict[tuple[int, int], dict[int, Scalar]] = {}
    for entry in data.get("brackets", []):
        i, j = entry["i"], entry["j"]
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < dim):
            raise IndexOutOfRange(f"bracket pair ({i!r}, {j!r}) needs 0 <= i < j < {dim}")
        if (i, j) in table:
            raise DuplicatePair(f"bracket pair ({i}, {j}) supplied twice")
        vector = {}
        for key, value in entry.get("coeffs", {}).items():
            l = int(key)
            if not (0 <= l < dim):
                raise IndexOutOfRange(f"coefficient index {l} outside 0..{dim - 1}")
            vector[l] = scalar_from_json(value)
        table[(i, j)] = vector
    labels = data.get("labels")
    return LieAlgebra(dim, table, labels=labels)

"""Lie algebra cohomology with trivial coefficients.

The coboundary of a k-form f is

    (d f)(x_0, .., x_k) = sum_{i<j} (-1)**(i+j) f([x_i, x_j], x_0, ..
                          omitting x_i and x_j .., x_k)

On the dual basis this means d(e_l*) = -sum_{i<j} c^l_{ij} e_i* ^ e_j*
where the c are the structure constants, and d extends to all of the
exterior algebra as an antiderivation.  ``apply_coboundary`` implements
exactly that, and every matrix in the package is assembled column by
column from it: there is one code path from structure constants to
coboundaries.

Degree-k cochains are coordinatised by the lexicographic monomial list
``exterior.basis(dim, k)``.  The matrix of d in degree k then has
C(n, k+1) rows and C(n, k) columns; its exact rank gives Betti numbers
through  b_k = C(n, k) - rank d_{k-1} - rank d_k  with the out-of-range
ranks defined to be zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import linalg
from .errors import DegreeOutOfRange, DimensionMismatch
from .exterior import ExteriorForm, basis
from .lie_algebra import LieAlgebra
from .scalars import ZERO, Scalar

__all__ = [
    "apply_coboundary",
    "coboundary_matrix",
    "CoboundaryMatrix",
    "rank_exact",
    "betti",
    "betti_profile",
    "BettiProfile",
    "cocycle_basis",
    "coboundary_basis",
    "cohomology_representatives",
]


def _dual_differentials(algebra: LieAlgebra) -> list[dict[tuple[int, int], Scalar]]:
    # d(e_l*) as a map (a, b) -> coefficient, one dict per basis index l
    out: list[dict[tuple[int, int], Scalar]] = [{} for _ in range(algebra.dim)]
    for (a, b), vector in algebra.brackets.items():
        for l, coeff in vector.items():
            out[l][(a, b)] = -coeff
    return out


def apply_coboundary(algebra: LieAlgebra, w: ExteriorForm) -> ExteriorForm:
    """The coboundary of a form, one degree up.

    Expands d as an antiderivation: each index of a monomial is replaced
    in turn by the two-form d(e_l*), with the sign (-1)**position from
    walking d past the earlier one-forms.
    """
    if w.dim != algebra.dim:
        raise DimensionMismatch(
            f"form on dimension {w.dim} against algebra of dimension {algebra.dim}"
        )
    differentials = _dual_differentials(algebra)
    terms: dict[tuple[int, ...], Scalar] = {}
    for key, coeff in w.terms.items():
        for position, l in enumerate(key):
            replacement = differentials[l]
            if not replacement:
                continue
            rest = key[:position] + key[position + 1 :]
            rest_set = set(rest)
            base = -coeff if position % 2 else coeff
            for (a, b), factor in replacement.items():
                if a in rest_set or b in rest_set:
                    continue
                # wedge (a, b) onto rest: parity counts how many rest
                # indices each of a, b must jump past
                inversions = 0
                for r in rest:
                    if r < a:
                        inversions += 1
                    if r < b:
                        inversions += 1
                merged = tuple(sorted(rest + (a, b)))
                value = base * factor
                if inversions % 2:
                    value = -value
                total = terms.get(merged, ZERO) + value
                if total:
                    terms[merged] = total
                elif merged in terms:
                    del terms[merged]
    return ExteriorForm(algebra.dim, w.degree + 1, terms)


@dataclass(frozen=True)
class CoboundaryMatrix:
    """Sparse matrix of d in one degree, in lexicographic monomial order.

    ``entries`` maps (row, column) to a nonzero scalar; row indexes the
    degree k+1 monomials, column the degree k monomials.
    """

    degree: int
    rows: int
    cols: int
    entries: dict[tuple[int, int], Scalar]

    def sparse_rows(self) -> list[dict[int, Scalar]]:
        rows: list[dict[int, Scalar]] = [{} for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            rows[r][c] = value
        return rows

    def dense(self) -> list[list[Scalar]]:
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            out[r][c] = value
        return out

    def column(self, c: int) -> list[Scalar]:
        return [self.entries.get((r, c), ZERO) for r in range(self.rows)]

    def to_coordinate_text(self) -> str:
        """Coordinate-list export: header ``% k rows cols`` then
        ``row col value`` lines with compact scalars, sorted by row then
        column."""
        lines = [f"% {self.degree} {self.rows} {self.cols}"]
        for (r, c) in sorted(self.entries):
            lines.append(f"{r} {c} {self.entries[(r, c)]}")
        return "\n".join(lines) + "\n"


def coboundary_matrix(algebra: LieAlgebra, k: int) -> CoboundaryMatrix:
    """Matrix of d on degree-k cochains, assembled column by column."""
    n = algebra.dim
    if not (0 <= k <= n):
        raise DegreeOutOfRange(f"degree {k} outside 0..{n}")
    source = basis(n, k)
    target_index = {key: r for r, key in enumerate(basis(n, k + 1))} if k < n else {}
    entries: dict[tuple[int, int], Scalar] = {}
    for c, key in enumerate(source):
        image = apply_coboundary(algebra, ExteriorForm(n, k, {key: 1}))
        for target_key, value in image.terms.items():
            entries[(target_index[target_key], c)] = value
    return CoboundaryMatrix(
        degree=k, rows=comb(n, k + 1), cols=len(source), entries=entries
    )


def rank_exact(matrix: CoboundaryMatrix) -> int:
    """Exact rank over Q(i) by fraction-free elimination."""
    return linalg.rank_sparse(matrix.sparse_rows(), matrix.cols)


@dataclass(frozen=True)
class BettiProfile:
    """Betti numbers of one algebra with the rank bookkeeping behind them.

    ``ranks[k]`` is the rank of d on degree-k cochains, ``kernels[k]``
    the dimension of the closed forms, ``images[k]`` the dimension of
    the exact forms in degree k.
    """

    n: int
    b: tuple[int, ...]
    ranks: tuple[int, ...]
    kernels: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if len(self.b) != n + 1 or len(self.ranks) != n + 1:
            raise DimensionMismatch("profile vectors must have length n + 1")
        if self.ranks[n] != 0:
            raise DimensionMismatch("the top coboundary has no rows, so rank 0")
        for k in range(n + 1):
            if self.kernels[k] + self.ranks[k] != comb(n, k):
                raise DimensionMismatch(f"rank-nullity fails in degree {k}")
            below = self.ranks[k - 1] if k > 0 else 0
            if self.images[k] != below:
                raise DimensionMismatch(f"image dimension wrong in degree {k}")
            if self.b[k] != comb(n, k) - below - self.ranks[k]:
                raise DimensionMismatch(f"Betti number inconsistent in degree {k}")
            if self.b[k] < 0:
                raise DimensionMismatch(f"negative Betti number in degree {k}")
        if self.b[0] != 1:
            raise DimensionMismatch("degree-0 cohomology of a Lie algebra is the scalars")
        if n >= 1 and sum((-1) ** k * bk for k, bk in enumerate(self.b)) != 0:
            raise DimensionMismatch("Euler characteristic must vanish for n >= 1")

    @classmethod
    def from_ranks(cls, n: int, ranks) -> "BettiProfile":
        ranks = tuple(ranks)
        b = []
        kernels = []
        images = []
        for k in range(n + 1):
            below = ranks[k - 1] if k > 0 else 0
            b.append(comb(n, k) - below - ranks[k])
            kernels.append(comb(n, k) - ranks[k])
            images.append(below)
        return cls(n=n, b=tuple(b), ranks=ranks, kernels=tuple(kernels), images=tuple(images))

    @classmethod
    def from_betti(cls, n: int, b) -> "BettiProfile":
        """Reconstruct the rank data a Betti vector forces.

        The recurrence rank_k = C(n,k) - b_k - rank_{k-1} pins every
        rank, so a Betti vector alone determines the whole profile.
        """
        b = tuple(b)
        if len(b) != n + 1:
            raise DimensionMismatch("Betti vector must have length n + 1")
        ranks = []
        below = 0
        for k in range(n + 1):
            rank = comb(n, k) - b[k] - below
            ranks.append(rank)
            below = rank
        return cls.from_ranks(n, tuple(ranks))


def betti(algebra: LieAlgebra, k: int) -> int:
    """The k-th Betti number from the two ranks that bound degree k."""
    n = algebra.dim
    if not (0 <= k <= n):
        raise DegreeOutOfRange(f"degree {k} outside 0..{n}")
    below = rank_exact(coboundary_matrix(algebra, k - 1)) if k > 0 else 0
    here = rank_exact(coboundary_matrix(algebra, k)) if k < n else 0
    return comb(n, k) - below - here


def betti_profile(algebra: LieAlgebra) -> BettiProfile:
    """All Betti numbers of the algebra, from exact coboundary ranks."""
    n = algebra.dim
    ranks = [rank_exact(coboundary_matrix(algebra, k)) for k in range(n + 1)]
    return BettiProfile.from_ranks(n, tuple(ranks))


def cocycle_basis(algebra: LieAlgebra, k: int) -> list[ExteriorForm]:
    """A basis of the closed degree-k forms (the kernel of d)."""
    n = algebra.dim
    if not (0 <= k <= n):
        raise DegreeOutOfRange(f"degree {k} outside 0..{n}")
    matrix = coboundary_matrix(algebra, k)
    vectors = linalg.kernel_basis(matrix.dense(), matrix.cols)
    monomials = basis(n, k)
    return [_form_from_vector(n, k, monomials, vec) for vec in vectors]


def coboundary_basis(algebra: LieAlgebra, k: int) -> list[ExteriorForm]:
    """A basis of the exact degree-k forms: coboundaries of monomials.

    The pivot columns of the degree k-1 matrix pick out monomials whose
    images are independent, so every basis element is literally d of a
    degree k-1 monomial.
    """
    n = algebra.dim
    if not (0 <= k <= n):
        raise DegreeOutOfRange(f"degree {k} outside 0..{n}")
    if k == 0:
        return []
    matrix = coboundary_matrix(algebra, k - 1)
    _, pivots = linalg.rref(matrix.dense())
    monomials = basis(n, k)
    return [
        _form_from_vector(n, k, monomials, matrix.column(c)) for c in pivots
    ]


def cohomology_representatives(algebra: LieAlgebra, k: int) -> list[ExteriorForm]:
    """Closed forms whose classes form a basis of degree-k cohomology.

    Extends a basis of the exact forms by cocycle basis vectors that
    grow the span; the added vectors represent independent classes and
    there are exactly b_k of them.
    """
    n = algebra.dim
    monomials = basis(n, k)
    span = linalg.SpanBuilder(len(monomials))
    for form in coboundary_basis(algebra, k):
        span.add(form.coordinates(monomials))
    representatives = []
    for form in cocycle_basis(algebra, k):
        if span.add(form.coordinates(monomials)):
            representatives.append(form)
    return representatives


def _form_from_vector(n, k, monomials, vector) -> ExteriorForm:
    terms = {key: value for key, value in zip(monomials, vector) if value}
    return ExteriorForm(n, k, terms)

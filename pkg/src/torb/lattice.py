"""Exact integer linear algebra: determinants, Smith/Hermite normal forms,
cokernels and lattice bases.

Matrices are tuples of row tuples holding Python ints (or Fractions where a
function says so), so everything here is exact and hashable.  No floating
point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

Matrix = tuple[tuple[int, ...], ...]


def make_matrix(rows) -> Matrix:
    mat = tuple(tuple(entry for entry in row) for row in rows)
    if mat:
        ncols = len(mat[0])
        if any(len(row) != ncols for row in mat):
            raise ValueError("ragged matrix")
    return mat


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def columns(a: Matrix) -> list[tuple]:
    return list(transpose(a))


def from_columns(cols) -> Matrix:
    return transpose(make_matrix(cols))


def content(v) -> int:
    """gcd of the entries, 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive_part(v) -> tuple[int, tuple[int, ...]]:
    """Split an integer vector as c * u with u primitive and c = content."""
    c = content(v)
    if c == 0:
        return 0, tuple(v)
    return c, tuple(x // c for x in v)


def det(a: Matrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def frac_det(a) -> Fraction:
    """Exact determinant of a matrix with Fraction entries."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    denom = lcm(*[Fraction(x).denominator for row in a for x in row], 1)
    scaled = make_matrix(
        [[int(Fraction(x) * denom) for x in row] for row in a]
    )
    return Fraction(det(scaled), denom**n)


def frac_inverse(a):
    """Inverse of a square matrix with Fraction entries (Gauss-Jordan)."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        scale = work[col][col]
        work[col] = [x / scale for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular S, T and diagonal D with D = S * A * T^-1.

    Diagonal entries of D are nonnegative and form a divisibility chain.
    """

    s: Matrix
    d: Matrix
    t: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(
            self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))
        )

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(x for x in self.diagonal if x > 1)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant-factor presentation Z_d1 + ... + Z_dk + Z^free_rank,
    with d1 | d2 | ... | dk and every di >= 2."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        facs = self.invariant_factors
        if any(f < 2 for f in facs):
            raise ValueError("invariant factors must be >= 2")
        if any(facs[i + 1] % facs[i] != 0 for i in range(len(facs) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank > 0:
            return None
        return prod(self.invariant_factors, start=1)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def __str__(self):
        parts = [f"Z{f}" for f in self.invariant_factors]
        parts.extend("Z" for _ in range(self.free_rank))
        return " x ".join(parts) if parts else "0"


def _min_pivot(m, start, rows, cols):
    """Smallest-magnitude nonzero entry in the trailing block, ties broken
    by lowest (row, col)."""
    best = None
    for i in range(start, rows):
        for j in range(start, cols):
            if m[i][j] != 0:
                key = (abs(m[i][j]), i, j)
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    return best[1], best[2]


def _snf_raw(a: Matrix):
    """Diagonalize with full bookkeeping.

    Returns (d, s, t, r) where d = s * a * r, r = t^-1, and s, t, r are
    unimodular.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(row) for row in a]
    s = [list(row) for row in identity(rows)]
    t = [list(row) for row in identity(cols)]
    r = [list(row) for row in identity(cols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        s[i], s[j] = s[j], s[i]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        s[i] = [-x for x in s[i]]

    def add_row(i, j, q):
        # row i += q * row j
        m[i] = [x + q * y for x, y in zip(m[i], m[j])]
        s[i] = [x + q * y for x, y in zip(s[i], s[j])]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in r:
            row[i], row[j] = row[j], row[i]
        t[i], t[j] = t[j], t[i]

    def add_col(i, j, q):
        # col i += q * col j; on t the contragredient row op keeps t = r^-1
        for row in m:
            row[i] += q * row[j]
        for row in r:
            row[i] += q * row[j]
        t[j] = [x - q * y for x, y in zip(t[j], t[i])]

    def negate_col(i):
        for row in m:
            row[i] = -row[i]
        for row in r:
            row[i] = -row[i]
        t[i] = [-x for x in t[i]]

    k = 0
    limit = min(rows, cols)
    while k < limit:
        pos = _min_pivot(m, k, rows, cols)
        if pos is None:
            break
        i, j = pos
        if i != k:
            swap_rows(k, i)
        if j != k:
            swap_cols(k, j)
        if m[k][k] < 0:
            negate_row(k)
        # clear row and column k
        dirty = False
        for i in range(k + 1, rows):
            if m[i][k] != 0:
                q = m[i][k] // m[k][k]
                add_row(i, k, -q)
                if m[i][k] != 0:
                    dirty = True
        for j in range(k + 1, cols):
            if m[k][j] != 0:
                q = m[k][j] // m[k][k]
                add_col(j, k, -q)
                if m[k][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the trailing block by the pivot
        piv = m[k][k]
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if m[i][j] % piv != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(k, offender, 1)
            continue
        k += 1

    dmat = make_matrix(m)
    return dmat, make_matrix(s), make_matrix(t), make_matrix(r)


def smith_normal_form(a: Matrix) -> SmithDecomposition:
    """Smith normal form D = S * A * T^-1 with a deterministic pivot rule."""
    a = make_matrix(a)
    d, s, t, _ = _snf_raw(a)
    return SmithDecomposition(s=s, d=d, t=t)


def integer_kernel_basis(a: Matrix) -> list[tuple[int, ...]]:
    """Z-basis of {x in Z^cols : A x = 0}."""
    a = make_matrix(a)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    d, _, _, r = _snf_raw(a)
    basis = []
    for j in range(cols):
        dj = d[j][j] if j < min(rows, cols) else 0
        if dj == 0:
            basis.append(tuple(r[i][j] for i in range(cols)))
    return basis


def cokernel(a: Matrix) -> FiniteAbelianGroup:
    """Z^rows / (column span of A) as a finite abelian group."""
    a = make_matrix(a)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return FiniteAbelianGroup()
    if cols == 0:
        return FiniteAbelianGroup(free_rank=rows)
    d, _, _, _ = _snf_raw(a)
    diag = [d[i][i] for i in range(min(rows, cols))]
    rank = sum(1 for x in diag if x != 0)
    factors = tuple(x for x in diag if x > 1)
    return FiniteAbelianGroup(invariant_factors=factors, free_rank=rows - rank)


def hermite_column_basis(cols_in: list[tuple[int, ...]], dim: int) -> Matrix:
    """Canonical (lower-triangular, positive-diagonal) basis of the lattice
    generated by the given integer columns; returned as a matrix whose
    columns are the basis vectors.  Requires the columns to span Q^dim."""
    work = [list(c) for c in cols_in]
    ncols = len(work)
    basis_cols = []
    col_ptr = 0
    active = list(range(ncols))
    for row in range(dim):
        # gcd-reduce the row across remaining columns
        while True:
            nz = [j for j in active if work[j][row] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: (abs(work[j][row]), j))
            j0 = nz[0]
            for j in nz[1:]:
                q = work[j][row] // work[j0][row]
                for i in range(dim):
                    work[j][i] -= q * work[j0][i]
        nz = [j for j in active if work[j][row] != 0]
        if not nz:
            raise ValueError("columns do not span full rank")
        j0 = nz[0]
        if work[j0][row] < 0:
            work[j0] = [-x for x in work[j0]]
        basis_cols.append(work[j0])
        active.remove(j0)
    # reduce off-diagonal entries: 0 <= b[i][j] < b[i][i] for earlier columns
    for i in range(dim):
        piv = basis_cols[i][i]
        for j in range(i):
            q = basis_cols[j][i] // piv
            if q:
                basis_cols[j] = [x - q * y for x, y in zip(basis_cols[j], basis_cols[i])]
    return from_columns([tuple(c) for c in basis_cols])


def lattice_basis_from_generators(gens, dim: int):
    """Basis of the lattice Z^dim + <gens> (rational generators).

    Returns (basis, index): basis is a matrix of Fractions whose columns are
    a canonical Hermite-like basis, and index = [lattice : Z^dim] is a
    positive integer with |det basis| = 1 / index.
    """
    gens = [tuple(Fraction(x) for x in g) for g in gens]
    for g in gens:
        if len(g) != dim:
            raise ValueError(f"generator of dimension {len(g)}, expected {dim}")
    denom = lcm(*[x.denominator for g in gens for x in g], 1)
    cols = [tuple(denom if i == j else 0 for i in range(dim)) for j in range(dim)]
    cols += [tuple(int(x * denom) for x in g) for g in gens]
    h = hermite_column_basis(cols, dim)
    hdet = abs(det(h))
    index_num = denom**dim
    if index_num % hdet != 0:
        raise ValueError("non-integer lattice index")
    index = index_num // hdet
    basis = tuple(
        tuple(Fraction(h[i][j], denom) for j in range(dim)) for i in range(dim)
    )
    return basis, index

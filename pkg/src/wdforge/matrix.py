"""Dense exact matrices and the kernels built on them.

Vectors are plain tuples of field elements; subspaces are passed around as
tuples of basis vectors.
"""

from __future__ import annotations

from .errors import FieldMismatch, NonSplitCharPoly, ShapeError, SingularMatrix
from .fields import Field, FieldElement
from .poly import Poly, gcd, radical, roots


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise ShapeError("matrices must have at least one row and column")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ShapeError("ragged matrix rows")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = n

    @classmethod
    def _raw(cls, field, rows):
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0])
        return m

    # -- constructors
    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field, n, m=None):
        z = field.zero
        return cls._raw(field, tuple((z,) * (n if m is None else m) for _ in range(n)))

    @classmethod
    def diag(cls, field, entries):
        entries = [field(e) for e in entries]
        n = len(entries)
        z = field.zero
        return cls._raw(field, tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, field, cols):
        cols = [tuple(field(x) for x in c) for c in cols]
        return cls._raw(field, tuple(zip(*cols)))

    @classmethod
    def block_diag(cls, a: "Matrix", b: "Matrix"):
        F = a.field
        z = F.zero
        rows = [r + (z,) * b.ncols for r in a.rows] + [(z,) * a.ncols + r for r in b.rows]
        return cls._raw(F, tuple(rows))

    # -- basic structure
    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix._raw(self.field, tuple(zip(*self.rows)))

    T = property(transpose)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"Matrix({self.field.name()}, {self.to_json()})"

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # -- arithmetic
    def __add__(self, other):
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("shape mismatch in addition")
        return Matrix._raw(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("shape mismatch in subtraction")
        return Matrix._raw(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c):
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self.rows))

    def __matmul__(self, other):
        if isinstance(other, tuple):
            return self.apply(other)
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        F = self.field
        mul, add, isz = F._mul, F._add, F._is_zero
        a_rows = [[x.rep for x in r] for r in self.rows]
        cols = [[x.rep for x in c] for c in zip(*other.rows)]
        zero = F.zero.rep
        out = []
        for r in a_rows:
            nz = [(i, a) for i, a in enumerate(r) if not isz(a)]
            row = []
            for c in cols:
                acc = zero
                for i, a in nz:
                    b = c[i]
                    if not isz(b):
                        acc = add(acc, mul(a, b))
                row.append(FieldElement(F, acc))
            out.append(tuple(row))
        return Matrix._raw(F, tuple(out))

    def apply(self, v):
        """Matrix times column vector (tuple)."""
        F = self.field
        mul, add, isz = F._mul, F._add, F._is_zero
        vr = [F(x).rep for x in v]
        zero = F.zero.rep
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, vr):
                a = a.rep
                if not isz(a) and not isz(b):
                    acc = add(acc, mul(a, b))
            out.append(FieldElement(F, acc))
        return tuple(out)

    def __pow__(self, e: int):
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def is_identity(self):
        return self == Matrix.identity(self.field, self.nrows) if self.is_square else False

    def is_scalar(self):
        if not self.is_square:
            return False
        return self == Matrix.identity(self.field, self.nrows).scale(self.rows[0][0])

    def trace(self):
        acc = self.field.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    # -- elimination
    def rref(self):
        """Reduced row echelon form and pivot columns."""
        F = self.field
        mul, sub, inv, isz = F._mul, F._sub, F._inv, F._is_zero
        m = [[x.rep for x in r] for r in self.rows]
        pivots = []
        row = 0
        for col in range(self.ncols):
            piv = next((i for i in range(row, self.nrows) if not isz(m[i][col])), None)
            if piv is None:
                continue
            m[row], m[piv] = m[piv], m[row]
            iv = inv(m[row][col])
            m[row] = [mul(x, iv) for x in m[row]]
            prow = m[row]
            for i in range(self.nrows):
                if i != row and not isz(m[i][col]):
                    c = m[i][col]
                    m[i] = [a if isz(b) else sub(a, mul(c, b)) for a, b in zip(m[i], prow)]
            pivots.append(col)
            row += 1
            if row == self.nrows:
                break
        rows = tuple(tuple(FieldElement(F, x) for x in r) for r in m)
        return Matrix._raw(F, rows), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of {v : M v = 0}, one vector per free column, from the RREF."""
        F = self.field
        R, piv = self.rref()
        free = [j for j in range(self.ncols) if j not in piv]
        basis = []
        for fj in free:
            v = [F.zero] * self.ncols
            v[fj] = F.one
            for i, pj in enumerate(piv):
                v[pj] = -R.rows[i][fj]
            basis.append(tuple(v))
        return basis

    def det(self):
        if not self.is_square:
            raise ShapeError("determinant of a non-square matrix")
        F = self.field
        m = [list(r) for r in self.rows]
        n = self.nrows
        d = F.one
        for col in range(n):
            piv = next((i for i in range(col, n) if not m[i][col].is_zero()), None)
            if piv is None:
                return F.zero
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                d = -d
            d = d * m[col][col]
            inv = m[col][col].inverse()
            for i in range(col + 1, n):
                if not m[i][col].is_zero():
                    c = m[i][col] * inv
                    m[i] = [a - c * b for a, b in zip(m[i], m[col])]
        return d

    def inverse(self):
        if not self.is_square:
            raise ShapeError("inverse of a non-square matrix")
        n = self.nrows
        F = self.field
        aug = Matrix._raw(F, tuple(r + Matrix.identity(F, n).rows[i] for i, r in enumerate(self.rows)))
        R, piv = aug.rref()
        if piv[:n] != tuple(range(n)):
            raise SingularMatrix("matrix is not invertible")
        return Matrix._raw(F, tuple(r[n:] for r in R.rows))

    def is_invertible(self):
        return self.is_square and not self.det().is_zero()

    def is_nilpotent(self):
        return self.is_square and (self ** self.nrows).is_zero()


# ---------------------------------------------------------------------------
# subspace helpers


def span_rank(vectors, field) -> int:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return 0
    return Matrix(field, vectors).rank()


def same_span(a, b, field) -> bool:
    ra, rb = span_rank(a, field), span_rank(b, field)
    return ra == rb and span_rank(list(a) + list(b), field) == ra


def contains(big, small, field) -> bool:
    """Whether span(small) is inside span(big)."""
    return span_rank(list(big) + list(small), field) == span_rank(big, field)


def intersect(a, b, field, dim):
    """Basis of span(a) ∩ span(b) in a space of dimension ``dim``."""
    if not a or not b:
        return []
    # solve sum x_i a_i - sum y_j b_j = 0
    cols = [tuple(v) for v in a] + [tuple(-x for x in v) for v in b]
    M = Matrix.from_columns(field, cols)
    out = []
    for sol in M.nullspace():
        v = [field.zero] * dim
        for coef, vec in zip(sol[: len(a)], a):
            v = [x + coef * y for x, y in zip(v, vec)]
        out.append(tuple(v))
    if not out:
        return []
    R, piv = Matrix(field, out).rref()
    return [R.rows[i] for i in range(len(piv))]


def column_space(M: Matrix):
    R, piv = M.transpose().rref()
    return [R.rows[i] for i in range(len(piv))]


# ---------------------------------------------------------------------------
# characteristic polynomial, eigenspaces, Jordan-Chevalley


def char_poly(M: Matrix) -> Poly:
    """det(xI - M) via reduction to upper Hessenberg form; valid in any characteristic."""
    if not M.is_square:
        raise ShapeError("char_poly needs a square matrix")
    F = M.field
    n = M.nrows
    H = [list(r) for r in M.rows]
    # similarity transform to Hessenberg form
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if not H[i][m - 1].is_zero()), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for r in H:
                r[piv], r[m] = r[m], r[piv]
        inv = H[m][m - 1].inverse()
        for i in range(m + 1, n):
            u = H[i][m - 1] * inv
            if u.is_zero():
                continue
            H[i] = [a - u * b for a, b in zip(H[i], H[m])]
            for r in H:
                r[m] = r[m] + u * r[i]
    # recurrence on leading principal minors of xI - H
    x = Poly.x(F)
    p = [Poly.const(F, 1)]
    for k in range(n):
        pk = (x - H[k][k]) * p[k]
        t = F.one
        for i in range(k - 1, -1, -1):
            t = t * H[i + 1][i]
            pk = pk - p[i] * (t * H[i][k])
        p.append(pk)
    return p[n]


def min_poly(M: Matrix) -> Poly:
    """Minimal polynomial from the first linear dependency among I, M, M^2, ..."""
    F = M.field
    n = M.nrows
    powers = [Matrix.identity(F, n)]
    flat = [tuple(x for r in powers[0].rows for x in r)]
    while True:
        nxt = powers[-1] @ M
        v = tuple(x for r in nxt.rows for x in r)
        A = Matrix.from_columns(F, flat + [v])
        ns = A.nullspace()
        if ns:
            c = ns[0]
            return Poly(F, c).monic()
        powers.append(nxt)
        flat.append(v)


def eigenvalues(M: Matrix):
    """Sorted (eigenvalue, algebraic multiplicity) pairs; NonSplitCharPoly if char_poly does not split."""
    pairs, rest = roots(char_poly(M))
    if rest.degree > 0:
        raise NonSplitCharPoly(
            f"characteristic polynomial has a factor without roots in {M.field.name()}",
            factor=rest,
            nonlinear_factor=rest.to_json(),
        )
    return pairs


def eigen_split(M: Matrix):
    """Generalized eigenspaces: list of (eigenvalue, basis of ker (M - λ)^mult)."""
    F = M.field
    n = M.nrows
    out = []
    for lam, mult in eigenvalues(M):
        shifted = M - Matrix.identity(F, n).scale(lam)
        out.append((lam, tuple(tuple(v) for v in (shifted ** mult).nullspace())))
    return out


def eigenspace(M: Matrix, lam):
    F = M.field
    return (M - Matrix.identity(F, M.nrows).scale(lam)).nullspace()


def jordan_chevalley(M: Matrix):
    """Multiplicative Jordan-Chevalley decomposition M = S U = U S.

    S comes from Newton's iteration S <- S - P(S) P'(S)^{-1} with P the
    radical of the characteristic polynomial, so no eigenvalues are needed.
    """
    if not M.is_square:
        raise ShapeError("jordan_chevalley needs a square matrix")
    if not M.is_invertible():
        raise SingularMatrix("jordan_chevalley needs an invertible matrix")
    P = radical(char_poly(M))
    dP = P.derivative()
    S = M
    for _ in range(M.nrows + 2):
        r = P.eval_matrix(S)
        if r.is_zero():
            break
        S = S - r @ dP.eval_matrix(S).inverse()
    else:  # pragma: no cover - Newton converges in O(log n) steps
        raise AssertionError("Jordan-Chevalley iteration did not converge")
    U = S.inverse() @ M
    return S, U


def is_semisimple(M: Matrix) -> bool:
    m = min_poly(M)
    return gcd(m, m.derivative()).degree == 0


def jordan_type(M: Matrix, lam):
    """Block sizes (descending) of the Jordan form of M at eigenvalue lam."""
    F = M.field
    n = M.nrows
    A = M - Matrix.identity(F, n).scale(lam)
    ranks = [n]
    P = Matrix.identity(F, n)
    while True:
        P = P @ A
        r = P.rank()
        ranks.append(r)
        if r == ranks[-2]:
            break
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(ge), 0, -1):
        exact = ge[k - 1] - (ge[k] if k < len(ge) else 0)
        sizes += [k] * exact
    return tuple(sizes)

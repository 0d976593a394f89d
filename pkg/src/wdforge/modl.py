"""Finite subgroups of GL2(F_{l^k}) and the image conditions used by automorphy lifting.

Group elements are enumerated exactly.  Internally each field element is
encoded as a discrete logarithm (with Zech tables for addition) so that the
closure and the all-pairs cocycle system stay cheap; every result is handed
back as a :class:`~wdforge.matrix.Matrix`.

Cohomology is computed over F_l after expanding F_{l^k} coordinates, so the
linear algebra runs on integer numpy arrays modulo l.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EqualCharacteristic,
    GroupTooLarge,
    InvalidInput,
    SingularMatrix,
    SplittingFieldTooLarge,
    ZeroEigenvalue,
)
from .fields import FieldElement, FiniteField, is_prime
from .matrix import Matrix, intersect
from .poly import Poly, roots

DEFAULT_CAP = 200_000
H1_CAP = 2_000
MAX_SPLITTING_DEGREE = 12


# ---------------------------------------------------------------------------
# fast arithmetic on 2x2 matrices over F_q


def _factor(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class _LogField:
    """F_q via discrete logs: code e stands for g**e, code q-1 for zero."""

    def __init__(self, F: FiniteField):
        self.F = F
        q = F.order
        self.q = q
        self.Z = Z = q - 1
        one = F.one
        primes = _factor(q - 1)
        for g in F.elements():
            if g.is_zero():
                continue
            if all(g ** ((q - 1) // p) != one for p in primes):
                break
        exp = []
        x = one
        for _ in range(q - 1):
            exp.append(x.rep)
            x = x * g
        self.exp = exp
        self.log = {rep: e for e, rep in enumerate(exp)}
        self.zech = [self.log.get((one + FieldElement(F, exp[n])).rep, Z) for n in range(q - 1)]
        self.half = (q - 1) // 2 if q % 2 else 0

    def code(self, x: FieldElement) -> int:
        return self.Z if x.is_zero() else self.log[self.F(x).rep]

    def element(self, c: int) -> FieldElement:
        return self.F.zero if c == self.Z else FieldElement(self.F, self.exp[c])

    def mul(self, a, b):
        Z = self.Z
        if a == Z or b == Z:
            return Z
        return (a + b) % Z

    def add(self, a, b):
        Z = self.Z
        if a == Z:
            return b
        if b == Z:
            return a
        z = self.zech[(b - a) % Z]
        return Z if z == Z else (a + z) % Z

    def mat_mul(self, x, y):
        mul, add = self.mul, self.add
        a, b, c, d = x
        e, f, g, h = y
        return (
            add(mul(a, e), mul(b, g)),
            add(mul(a, f), mul(b, h)),
            add(mul(c, e), mul(d, g)),
            add(mul(c, f), mul(d, h)),
        )

    def encode(self, M: Matrix):
        return tuple(self.code(x) for r in M.rows for x in r)

    def decode(self, code) -> Matrix:
        a, b, c, d = (self.element(x) for x in code)
        return Matrix._raw(self.F, ((a, b), (c, d)))

    @property
    def identity(self):
        return (0, self.Z, self.Z, 0)


# ---------------------------------------------------------------------------


class MatGroup:
    """Subgroup of GL2(F_{l^k}) given by generators; the closure is computed lazily."""

    def __init__(self, l: int, k: int, generators, cap: int = DEFAULT_CAP, field: FiniteField | None = None):
        if not is_prime(l) or l < 5:
            raise InvalidInput(f"l must be a prime >= 5, got {l}")
        self.l = l
        self.k = k
        self.field = field if field is not None else FiniteField(l, k)
        if (self.field.l, self.field.k) != (l, k):
            raise InvalidInput("field does not match (l, k)")
        gens = [g if isinstance(g, Matrix) else Matrix(self.field, g) for g in generators]
        if not gens:
            gens = [Matrix.identity(self.field, 2)]
        for g in gens:
            if g.field != self.field or (g.nrows, g.ncols) != (2, 2):
                raise InvalidInput("generators must be 2x2 matrices over the group's field")
            if not g.is_invertible():
                raise SingularMatrix("generator is not invertible")
        self.generators = tuple(gens)
        self.cap = cap
        self._lf = None
        self._closure = None

    @property
    def lf(self) -> _LogField:
        if self._lf is None:
            self._lf = _LogField(self.field)
        return self._lf

    def _gen_codes(self):
        codes = {self.lf.encode(g): g for g in self.generators}
        return [c for c, _ in sorted(codes.items(), key=lambda t: _matrix_key(t[1]))]

    def closure_codes(self):
        if self._closure is None:
            self._closure = _bfs(self.lf, self._gen_codes(), self.cap)
        return self._closure

    def order(self) -> int:
        return len(self.closure_codes())

    def conjugate(self, P: Matrix) -> "MatGroup":
        Pi = P.inverse()
        return MatGroup(self.l, self.k, [P @ g @ Pi for g in self.generators], self.cap, self.field)


def _matrix_key(M: Matrix):
    return tuple(x.sort_key() for r in M.rows for x in r)


def _bfs(lf: _LogField, gens, cap):
    start = lf.identity
    order = [start]
    index = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = lf.mat_mul(s, x)
            if y not in index:
                if len(order) >= cap:
                    raise GroupTooLarge(f"group closure exceeds cap {cap}", cap=cap)
                index[y] = len(order)
                order.append(y)
                queue.append(y)
    return order


def close_group(G: MatGroup):
    """Elements of the generated group, in BFS order from the identity."""
    lf = G.lf
    return [lf.decode(c) for c in G.closure_codes()]


# ---------------------------------------------------------------------------
# the adjoint action on trace-zero matrices, basis e = E12, h = diag(1,-1), f = E21


def ad0_action(g: Matrix) -> Matrix:
    """Matrix of X -> g X g^-1 on trace-zero 2x2 matrices in the basis (e, h, f)."""
    if (g.nrows, g.ncols) != (2, 2):
        raise InvalidInput("ad0_action expects a 2x2 matrix")
    F = g.field
    if g.det().is_zero():
        raise SingularMatrix("ad0_action needs an invertible matrix")
    gi = g.inverse()
    z, o = F.zero, F.one
    basis = (
        Matrix._raw(F, ((z, o), (z, z))),
        Matrix._raw(F, ((o, z), (z, -o))),
        Matrix._raw(F, ((z, z), (o, z))),
    )
    cols = []
    for X in basis:
        Y = g @ X @ gi
        cols.append((Y[0, 1], Y[0, 0], Y[1, 0]))
    return Matrix.from_columns(F, cols)


def _expand(M: Matrix):
    """F_l-matrix of an F_{l^k}-linear map, each entry replaced by its k x k block."""
    F = M.field
    k = F.k
    out = np.zeros((M.nrows * k, M.ncols * k), dtype=np.int64)
    for i, r in enumerate(M.rows):
        for j, x in enumerate(r):
            if not x.is_zero():
                out[i * k:(i + 1) * k, j * k:(j + 1) * k] = F.mult_matrix(x)
    return out


# ---------------------------------------------------------------------------
# linear algebra modulo l


def _rref_mod(A, l):
    A = np.array(A, dtype=np.int64) % l
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, l)) % l
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % l
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rank_mod(A, l) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(_rref_mod(A, l)[1])


def _nullspace_mod(A, l):
    """Columns spanning {x : A x = 0 mod l}."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, piv = _rref_mod(A, l) if A.shape[0] else (np.zeros((0, cols), dtype=np.int64), [])
    free = [c for c in range(cols) if c not in set(piv)]
    N = np.zeros((cols, len(free)), dtype=np.int64)
    for t, fc in enumerate(free):
        N[fc, t] = 1
        for i, pc in enumerate(piv):
            N[pc, t] = (-R[i, fc]) % l
    return N


# ---------------------------------------------------------------------------
# H^0 and H^1 of ad^0


@dataclass
class CohomologyReport:
    order: int
    h0: int
    h0_all_elements: int
    h1: int
    h1_relations: int
    z1_pairs: int
    b1_pairs: int
    z1_relations: int
    b1_relations: int
    h0_basis: list = field(default_factory=list)

    @property
    def methods_agree(self) -> bool:
        return self.h0 == self.h0_all_elements and self.h1 == self.h1_relations

    def to_json(self):
        return {
            "order": self.order,
            "h0": self.h0,
            "h1": self.h1,
            "h0_generators": self.h0,
            "h0_all_elements": self.h0_all_elements,
            "h1_all_pairs": self.h1,
            "h1_generator_relations": self.h1_relations,
            "z1_all_pairs": self.z1_pairs,
            "b1_all_pairs": self.b1_pairs,
            "z1_generator_relations": self.z1_relations,
            "b1_generator_relations": self.b1_relations,
            "methods_agree": self.methods_agree,
            "h0_basis": self.h0_basis,
        }


def _expanded_ad0(G: MatGroup, codes):
    lf = G.lf
    return [_expand(ad0_action(lf.decode(c))) for c in codes]


def _z1_all_pairs(G: MatGroup, codes, A, threshold: int = 64) -> int:
    """dim_{F_l} of solutions f: H -> ad0 of f(gh) = f(g) + g f(h) over every pair (g, h).

    Sparse elimination (fully reduced pivot rows over the free columns) until
    few free columns remain, then dense verification of the remaining pairs
    against the explicit solution space, shrinking it whenever a pair fails.
    """
    l = G.l
    lf = G.lf
    n = len(codes)
    D = A[0].shape[0]
    index = {c: i for i, c in enumerate(codes)}
    piv = {}
    occ = {}

    def reduce(row):
        out = {}
        for c, v in row.items():
            pr = piv.get(c)
            if pr is None:
                out[c] = (out.get(c, 0) + v) % l
            else:
                for c2, v2 in pr.items():
                    if c2 != c:
                        out[c2] = (out.get(c2, 0) - v * v2) % l
        return {c: v for c, v in out.items() if v}

    def insert(row):
        p = max(row)
        inv = pow(row[p], -1, l)
        row = {c: (v * inv) % l for c, v in row.items()}
        for qc in occ.pop(p, ()):
            R = piv[qc]
            a = R.pop(p)
            for c2, v2 in row.items():
                if c2 == p:
                    continue
                nv = (R.get(c2, 0) - a * v2) % l
                if nv:
                    R[c2] = nv
                    occ.setdefault(c2, set()).add(qc)
                else:
                    R.pop(c2, None)
                    s = occ.get(c2)
                    if s is not None:
                        s.discard(qc)
        piv[p] = row
        for c2 in row:
            if c2 != p:
                occ.setdefault(c2, set()).add(p)

    total = n * D
    i = 0
    while i < n:
        g = codes[i]
        Ag = A[i]
        for j, h in enumerate(codes):
            t = index[lf.mat_mul(g, h)]
            for r in range(D):
                row = {}
                row[t * D + r] = row.get(t * D + r, 0) + 1
                row[i * D + r] = row.get(i * D + r, 0) - 1
                for s in range(D):
                    a = int(Ag[r, s])
                    if a:
                        row[j * D + s] = row.get(j * D + s, 0) - a
                row = reduce({c: v % l for c, v in row.items() if v % l})
                if row:
                    insert(row)
        i += 1
        if total - len(piv) <= threshold:
            break
    free = [c for c in range(total) if c not in piv]
    if i == n:
        return len(free)
    # dense phase: columns of Esol span the candidate solution space
    fidx = {c: t for t, c in enumerate(free)}
    Esol = np.zeros((total, len(free)), dtype=np.int64)
    for c in free:
        Esol[c, fidx[c]] = 1
    for c, row in piv.items():
        for c2, v in row.items():
            if c2 != c:
                Esol[c, fidx[c2]] = (-v) % l
    while i < n and Esol.shape[1]:
        g = codes[i]
        prod = np.array([index[lf.mat_mul(g, h)] for h in codes])
        E3 = Esol.reshape(n, D, -1)
        R = (E3[prod] - E3[i][None, :, :] - np.einsum("rs,jsm->jrm", A[i], E3)) % l
        R = R.reshape(n * D, -1)
        if R.any():
            Esol = (Esol @ _nullspace_mod(R, l)) % l
        i += 1
    return Esol.shape[1]


def _z1_generator_relations(G: MatGroup, codes, A) -> int:
    """dim_{F_l} of cocycles parametrised by their values on generators.

    Values on all elements follow by f(s x) = f(s) + s f(x) along a BFS tree;
    each non-tree edge of the Cayley graph gives a linear relation.
    """
    l = G.l
    lf = G.lf
    D = A[0].shape[0]
    index = {c: i for i, c in enumerate(codes)}
    gens = G._gen_codes()
    m = D * len(gens)
    gen_idx = [index[s] for s in gens]
    T = {index[lf.identity]: np.zeros((D, m), dtype=np.int64)}
    rels = []
    queue = deque([index[lf.identity]])
    while queue:
        xi = queue.popleft()
        x = codes[xi]
        for a, s in enumerate(gens):
            yi = index[lf.mat_mul(s, x)]
            val = A[gen_idx[a]] @ T[xi]
            val[:, a * D:(a + 1) * D] += np.eye(D, dtype=np.int64)
            val %= l
            if yi not in T:
                T[yi] = val
                queue.append(yi)
            else:
                rels.append((T[yi] - val) % l)
    if not rels:
        return m
    return m - _rank_mod(np.vstack(rels), l)


def _common_fixed(mats, l):
    D = mats[0].shape[0]
    stacked = np.vstack([M - np.eye(D, dtype=np.int64) for M in mats]) % l
    return _nullspace_mod(stacked, l)


def cohomology_report(G: MatGroup, h1_cap: int = H1_CAP) -> CohomologyReport:
    codes = G.closure_codes()
    n = len(codes)
    if n > h1_cap:
        raise GroupTooLarge(f"|H| = {n} exceeds the H^1 cap {h1_cap}", cap=h1_cap)
    l, k = G.l, G.k
    A = _expanded_ad0(G, codes)
    index = {c: i for i, c in enumerate(codes)}
    gen_A = [A[index[c]] for c in G._gen_codes()]

    fixed_gen = _common_fixed(gen_A, l)
    fixed_all = _common_fixed(A, l)
    h0_gen = fixed_gen.shape[1]
    h0_all = fixed_all.shape[1]
    D = A[0].shape[0]
    b1_gen = _rank_mod(np.vstack([M - np.eye(D, dtype=np.int64) for M in gen_A]), l)
    b1_all = _rank_mod(np.vstack([M - np.eye(D, dtype=np.int64) for M in A]), l)

    z1_pairs = _z1_all_pairs(G, codes, A)
    z1_rel = _z1_generator_relations(G, codes, A)
    for v in (h0_gen, h0_all, z1_pairs, z1_rel, b1_all, b1_gen):
        assert v % k == 0, "F_l-dimension of an F_{l^k}-space must be divisible by k"
    if b1_all > z1_pairs or b1_gen > z1_rel:  # pragma: no cover
        raise AssertionError("coboundaries not contained in cocycles")
    basis = _fixed_basis_json(G, fixed_gen)
    return CohomologyReport(
        order=n,
        h0=h0_gen // k,
        h0_all_elements=h0_all // k,
        h1=(z1_pairs - b1_all) // k,
        h1_relations=(z1_rel - b1_gen) // k,
        z1_pairs=z1_pairs // k,
        b1_pairs=b1_all // k,
        z1_relations=z1_rel // k,
        b1_relations=b1_gen // k,
        h0_basis=basis,
    )


def _fixed_basis_json(G, N):
    """F_{l^k}-basis of the fixed space, read off from the F_l-expanded null space."""
    F = G.field
    k = G.k
    if N.shape[1] == 0:
        return []
    g = F.gen if k > 1 else F.one
    powers = [g**i for i in range(k)]
    vecs = []
    for t in range(N.shape[1]):
        col = N[:, t]
        v = []
        for i in range(3):
            acc = F.zero
            for j in range(k):
                acc = acc + powers[j] * int(col[i * k + j])
            v.append(acc)
        vecs.append(tuple(v))
    R, piv = Matrix(F, vecs).rref()
    return [[x.to_json() for x in R.rows[i]] for i in range(len(piv))]


def h0_h1_ad0(G: MatGroup, h1_cap: int = H1_CAP):
    """(dim H^0(H, ad0), dim H^1(H, ad0)) over F_{l^k}."""
    rep = cohomology_report(G, h1_cap)
    if not rep.methods_agree:  # pragma: no cover
        raise AssertionError(f"cohomology methods disagree: {rep.to_json()}")
    return rep.h0, rep.h1


# ---------------------------------------------------------------------------
# enormous image


def _element_order(lf, x):
    one = lf.identity
    y = x
    n = 1
    while y != one:
        y = lf.mat_mul(y, x)
        n += 1
    return n


def _code_pow(lf, x, e):
    result = lf.identity
    base = x
    while e:
        if e & 1:
            result = lf.mat_mul(result, base)
        base = lf.mat_mul(base, base)
        e >>= 1
    return result


def l_prime_subgroup_order(G: MatGroup) -> int:
    """Order of the subgroup generated by the l'-parts of all elements."""
    lf = G.lf
    l = G.l
    codes = G.closure_codes()
    sub = {lf.identity}
    gens = []
    for x in codes:
        o = _element_order(lf, x)
        lp = 1
        while o % l == 0:
            o //= l
            lp *= l
        # exponent e = 0 mod l-part, 1 mod l'-part
        e = (lp * pow(lp, -1, o)) % (lp * o) if o > 1 else 0
        y = _code_pow(lf, x, e)
        if y not in sub:
            gens.append(y)
            sub = set(_bfs(lf, gens, G.cap))
    return len(sub)


def _splitting_field(G: MatGroup):
    F = G.field
    need = 1
    for g in G.generators:
        x = Poly.x(F)
        cp = x * x - x * g.trace() + g.det()
        if roots(cp)[1].degree > 0:
            need = 2
    if F.k * need > MAX_SPLITTING_DEGREE:
        raise SplittingFieldTooLarge(f"splitting field degree {F.k * need} exceeds {MAX_SPLITTING_DEGREE}")
    return F.extension(need)


def _to_field(M: Matrix, K) -> Matrix:
    return Matrix._raw(K, tuple(tuple(K(x) for x in r) for r in M.rows))


def _eigvals(M: Matrix):
    from .matrix import char_poly

    pairs, rest = roots(char_poly(M))
    if rest.degree > 0:  # pragma: no cover - the splitting field is chosen to prevent this
        raise SplittingFieldTooLarge("characteristic polynomial does not split in the chosen extension")
    return [r for r, _ in pairs]


def _common_eigenspaces(mats, K, dim):
    """Nonzero joint eigenspaces of commuting-or-not matrices: list of (eigenvalue tuple, basis)."""
    spaces = [((), [tuple(K.one if i == j else K.zero for j in range(dim)) for i in range(dim)])]
    for M in mats:
        nxt = []
        for lam in _eigvals(M):
            kernel = (M - Matrix.identity(K, dim).scale(lam)).nullspace()
            for chars, V in spaces:
                W = intersect(V, kernel, K, dim)
                if W:
                    nxt.append((chars + (lam,), W))
        spaces = nxt
    return spaces


def _invariant_line_2d(gens_K, K):
    nonscalar = [g for g in gens_K if not g.is_scalar()]
    if not nonscalar:
        return (K.one, K.zero)
    g0 = nonscalar[0]
    for lam in _eigvals(g0):
        for v in (g0 - Matrix.identity(K, 2).scale(lam)).nullspace():
            if all(Matrix(K, [v, g.apply(v)]).rank() == 1 for g in gens_K):
                return v
    return None


def _commutant_dim(gens):
    """Dimension of {X : X g = g X for all generators} over the base field."""
    F = gens[0].field
    rows = []
    for g in gens:
        for i in range(2):
            for j in range(2):
                # (Xg - gX)_{ij} as a linear form in X = (x00, x01, x10, x11)
                coeff = [F.zero] * 4
                for t in range(2):
                    coeff[i * 2 + t] = coeff[i * 2 + t] + g[t, j]
                    coeff[t * 2 + j] = coeff[t * 2 + j] - g[i, t]
                rows.append(coeff)
    return 4 - Matrix(F, rows).rank()


def _regular_semisimple(g: Matrix) -> bool:
    tr, det = g.trace(), g.det()
    return not (tr * tr - det * 4).is_zero()


@dataclass
class EnormousReport:
    order: int
    absolutely_irreducible: bool
    no_l_power_quotient: bool
    h0_zero: bool
    h1_zero: bool
    simple_submodule_condition: bool
    witnesses: dict
    cohomology: CohomologyReport
    splitting_field: dict

    @property
    def verdict(self) -> bool:
        return (
            self.absolutely_irreducible
            and self.no_l_power_quotient
            and self.h0_zero
            and self.h1_zero
            and self.simple_submodule_condition
        )

    def to_json(self):
        return {
            "order": self.order,
            "absolutely_irreducible": self.absolutely_irreducible,
            "no_l_power_quotient": self.no_l_power_quotient,
            "h0_zero": self.h0_zero,
            "h1_zero": self.h1_zero,
            "simple_submodule_condition": self.simple_submodule_condition,
            "enormous": self.verdict,
            "witnesses": self.witnesses,
            "cohomology": self.cohomology.to_json(),
            "splitting_field": self.splitting_field,
        }


def _vec_json(v):
    return [x.to_json() for x in v]


def simple_submodules(G: MatGroup, K=None):
    """Simple submodules of ad0 over a splitting field K, as (kind, basis).

    Lines inside one joint eigenspace share a character, so each joint
    eigenspace is reported once through its first basis vector.
    """
    K = K or _splitting_field(G)
    ads = [_to_field(ad0_action(g), K) for g in G.generators]
    lines = _common_eigenspaces(ads, K, 3)
    duals = _common_eigenspaces([a.transpose() for a in ads], K, 3)
    out = [("line", [V[0]]) for _, V in lines]
    for _, U in duals:
        if len(U) != 1:
            continue
        plane = Matrix(K, [U[0]]).nullspace()
        if not any(intersect(V, plane, K, 3) for _, V in lines):
            out.append(("plane", plane))
    if not lines and not duals:
        out.append(("whole", [tuple(K.one if i == j else K.zero for j in range(3)) for i in range(3)]))
    return out


def is_enormous(G: MatGroup, h1_cap: int = H1_CAP) -> EnormousReport:
    coh = cohomology_report(G, h1_cap)
    if not coh.methods_agree:  # pragma: no cover
        raise AssertionError(f"cohomology methods disagree: {coh.to_json()}")
    K = _splitting_field(G)
    witnesses = {}

    gens_K = [_to_field(g, K) for g in G.generators]
    line = _invariant_line_2d(gens_K, K)
    comm = _commutant_dim(list(G.generators))
    abs_irr = line is None and comm == 1
    witnesses["invariant_line"] = None if line is None else _vec_json(line)
    witnesses["commutant_dim"] = comm

    sub_order = l_prime_subgroup_order(G)
    witnesses["l_power_quotient_order"] = coh.order // sub_order

    witnesses["fixed_vectors"] = coh.h0_basis

    elements = close_group(G)
    regular = [g for g in elements if _regular_semisimple(g)]
    regular_ads = [_to_field(ad0_action(g), K) for g in regular]
    ident = Matrix.identity(K, 3)
    checks = []
    ok_all = True
    for kind, basis in simple_submodules(G, K):
        witness = None
        for g, A in zip(regular, regular_ads):
            images = [(A - ident).apply(v) for v in basis]
            if Matrix.from_columns(K, images).rank() < len(basis):
                witness = g
                break
        ok_all = ok_all and witness is not None
        checks.append(
            {
                "kind": kind,
                "basis": [_vec_json(v) for v in basis],
                "regular_semisimple_witness": None if witness is None else witness.to_json(),
            }
        )
    witnesses["simple_submodules"] = checks
    failing = next((c for c in checks if c["regular_semisimple_witness"] is None), None)
    witnesses["failing_submodule"] = failing
    return EnormousReport(
        order=coh.order,
        absolutely_irreducible=abs_irr,
        no_l_power_quotient=sub_order == coh.order,
        h0_zero=coh.h0 == 0,
        h1_zero=coh.h1 == 0,
        simple_submodule_condition=ok_all,
        witnesses=witnesses,
        cohomology=coh,
        splitting_field=K.descriptor(),
    )


# ---------------------------------------------------------------------------
# decomposed genericity and the scalar element condition


REASON_ONE = "ratio = 1"
REASON_P = "ratio = p"
REASON_P_INV = "ratio = p⁻¹"
REASON_NOT_SPLIT = "p does not split completely"


@dataclass
class DecGenReport:
    p: int
    l: int
    verdict: bool
    failures: list

    def to_json(self):
        return {"p": self.p, "l": self.l, "decomposed_generic": self.verdict, "failures": self.failures}


def is_decomposed_generic_at(p: int, l: int, places, splits_completely: bool, field: FiniteField | None = None):
    """Check a certificate prime p: split completely, and at each place alpha/beta avoids 1, p, 1/p."""
    if p == l:
        raise EqualCharacteristic(f"p = l = {p}")
    if not is_prime(p) or not is_prime(l):
        raise InvalidInput("p and l must be prime")
    F = field if field is not None else FiniteField(l, 1)
    failures = []
    if not splits_completely:
        failures.append({"place": None, "reason": REASON_NOT_SPLIT})
    pm = F(p)
    for idx, (alpha, beta) in enumerate(places):
        a, b = F(alpha), F(beta)
        if a.is_zero() or b.is_zero():
            raise ZeroEigenvalue(f"zero eigenvalue at place {idx}")
        ratio = a / b
        for target, reason in ((F.one, REASON_ONE), (pm, REASON_P), (pm.inverse(), REASON_P_INV)):
            if ratio == target:
                failures.append({"place": idx, "reason": reason, "ratio": ratio.to_json()})
                break
    return DecGenReport(p, l, not failures, failures)


def exists_scalar_outside_cyclotomic(elements, field: FiniteField | None = None) -> bool:
    """Some (h, c) with h scalar and cyclotomic value c != 1."""
    for h, c in elements:
        if not isinstance(h, Matrix):
            h = Matrix(field, h)
        cc = h.field(c)
        if cc.is_zero():
            raise InvalidInput("cyclotomic value must be nonzero")
        if h.det().is_zero():
            raise SingularMatrix("element is not invertible")
        if cc != h.field.one and h.is_scalar():
            return True
    return False

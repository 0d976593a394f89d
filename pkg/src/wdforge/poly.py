"""Univariate polynomials over a wdforge field.

Root finding is field specific: Cantor-Zassenhaus over finite fields, integer
factorisation (sympy) over Q, and Trager's norm method over number fields.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

from .errors import InvalidInput
from .fields import FieldElement, FiniteField, NumberField, Rationals


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        c = [field(x) for x in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        other = _as_poly(self.field, other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return Poly(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(self.field, other))

    def __rsub__(self, other):
        return _as_poly(self.field, other) - self

    def __mul__(self, other):
        other = _as_poly(self.field, other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(self.field, other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dv = len(other.coeffs)
        inv = other.lc().inverse()
        q = [self.field.zero] * max(len(r) - dv + 1, 0)
        while len(r) >= dv:
            c = r[-1] * inv
            shift = len(r) - dv
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                r[shift + i] = r[shift + i] - c * b
            r.pop()
            while r and r[-1].is_zero():
                r.pop()
        return Poly(self.field, q), Poly(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = self.field.zero if not isinstance(x, FieldElement) else x.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def eval_matrix(self, M):
        """Horner evaluation at a square :class:`~wdforge.matrix.Matrix`."""
        from .matrix import Matrix

        acc = Matrix.zeros(M.field, M.nrows, M.nrows)
        ident = Matrix.identity(M.field, M.nrows)
        for c in reversed(self.coeffs):
            acc = acc @ M + ident.scale(c)
        return acc

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        terms = [f"({c.to_json()})*x^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(terms) or "0"


def _as_poly(field, x):
    if isinstance(x, Poly):
        return x
    return Poly.const(field, x)


def gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.const(base.field, 1) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def squarefree_factorization(f: Poly):
    """Pairs (g, m) with f = lc * prod g**m, each g squarefree and pairwise coprime."""
    F = f.field
    f = f.monic()
    if f.degree < 1:
        return []
    if F.characteristic == 0:
        return _yun(f)
    return _sff_finite(f)


def _yun(f):
    out = []
    a0 = gcd(f, f.derivative())
    b = f // a0
    c = f.derivative() // a0
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def _sff_finite(f):
    F = f.field
    p = F.characteristic
    out = {}
    one = Poly.const(F, 1)
    c = gcd(f, f.derivative())
    w = f // c
    i = 1
    while w != one:
        y = gcd(w, c)
        fac = w // y
        if fac.degree > 0:
            out[i] = out.get(i, one) * fac
        w = y
        c = c // y
        i += 1
    if c != one:
        # c is a p-th power: take p-th roots of its coefficients
        root = Poly(F, [F.pth_root(c.coeffs[j]) for j in range(0, len(c.coeffs), p)])
        for g, m in _sff_finite(root):
            out[m * p] = out.get(m * p, one) * g
    return [(g.monic(), m) for m, g in sorted(out.items())]


def radical(f: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of f."""
    r = Poly.const(f.field, 1)
    for g, _ in squarefree_factorization(f):
        r = r * g
    return r


def is_squarefree(f: Poly) -> bool:
    return all(m == 1 for _, m in squarefree_factorization(f))


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over a finite field: gcd(f, x^(q^i) - x) = 1 for i <= deg/2."""
    F = f.field
    if not isinstance(F, FiniteField):
        raise InvalidInput("is_irreducible is implemented for finite fields only")
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    x = Poly.x(F)
    h = x
    for _ in range(n // 2):
        h = powmod(h, F.order, f)
        if gcd(f, h - x).degree > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# roots


def roots(f: Poly):
    """Roots of f in its field with multiplicity.

    Returns ``(pairs, cofactor)`` where pairs is a sorted list of (root, mult)
    and cofactor is the monic part of f having no roots in the field.
    """
    F = f.field
    if f.degree < 1:
        return [], f.monic()
    f = f.monic()
    found = {}
    rest = Poly.const(F, 1)
    for g, m in squarefree_factorization(f):
        lin = _squarefree_roots(g)
        for r in lin:
            found[r] = found.get(r, 0) + m
        linear_part = Poly.const(F, 1)
        for r in lin:
            linear_part = linear_part * Poly(F, [-r, 1])
        cof = g // linear_part
        for _ in range(m):
            rest = rest * cof
    pairs = sorted(found.items(), key=lambda t: t[0].sort_key())
    return pairs, rest


def _squarefree_roots(g: Poly):
    F = g.field
    if g.degree < 1:
        return []
    if g.degree == 1:
        return [-g.monic().coeffs[0]]
    if isinstance(F, FiniteField):
        return _roots_finite(g)
    if isinstance(F, Rationals):
        return rational_roots(g)
    if isinstance(F, NumberField):
        return _roots_number_field(g)
    raise InvalidInput(f"no root finder for {F}")  # pragma: no cover


def _roots_finite(g):
    F = g.field
    x = Poly.x(F)
    g = gcd(g, powmod(x, F.order, g) - x)
    out = []
    _cz_split(g, out)
    return sorted(out, key=lambda r: r.sort_key())


def _cz_split(g, out):
    """Equal-degree (degree 1) splitting by a deterministic sweep over a in F.

    Odd characteristic uses (x + a)^((q-1)/2) - 1, characteristic 2 the trace of a x.
    """
    F = g.field
    if g.degree == 0:
        return
    if g.degree == 1:
        out.append(-g.monic().coeffs[0])
        return
    x = Poly.x(F)
    for a in F.elements():
        if F.l == 2:
            # Tr(a x) is 0 or 1 on each root and separates any two roots for some a
            t = Poly(F, [F.zero, a])
            h = t
            acc = t
            for _ in range(F.k - 1):
                h = (h * h) % g
                acc = acc + h
            cand = acc
        else:
            cand = powmod(x + Poly.const(F, a), (F.order - 1) // 2, g) - Poly.const(F, 1)
        d = gcd(g, cand)
        if 0 < d.degree < g.degree:
            _cz_split(d, out)
            _cz_split(g // d, out)
            return
    raise AssertionError("Cantor-Zassenhaus failed to split")  # pragma: no cover


def _integer_coeffs(coeffs):
    den = lcm(*[Fraction(c).denominator for c in coeffs]) if coeffs else 1
    return [int(Fraction(c) * den) for c in coeffs]


def rational_roots(g: Poly):
    """Distinct rational roots of a polynomial over Q."""
    import sympy

    if g.degree < 1:
        return []
    if g.degree == 2:
        return _rational_quadratic_roots(g)
    x = sympy.Symbol("x")
    ints = _integer_coeffs([c.rep for c in g.coeffs])
    expr = sum(c * x**i for i, c in enumerate(ints))
    _, factors = sympy.factor_list(expr, x)
    out = []
    for fac, _ in factors:
        p = sympy.Poly(fac, x)
        if p.degree() == 1:
            a, b = p.all_coeffs()
            out.append(g.field(Fraction(int(-b), int(a))))
    return sorted(set(out), key=lambda r: r.sort_key())


def _rational_quadratic_roots(g: Poly):
    b, c = (x.rep for x in g.monic().coeffs[1::-1])
    # x^2 + b x + c: roots (-b +- sqrt(b^2 - 4c)) / 2
    disc = b * b - 4 * c
    if disc < 0:
        return []
    rn, rd = isqrt(disc.numerator), isqrt(disc.denominator)
    if rn * rn != disc.numerator or rd * rd != disc.denominator:
        return []
    r = Fraction(rn, rd)
    F = g.field
    return sorted({F((-b + r) / 2), F((-b - r) / 2)}, key=lambda t: t.sort_key())


def _conjugate_quadratic(c: FieldElement) -> FieldElement:
    K = c.field
    u, v = c.rep
    return K((u - v * K.minpoly[1], -v))


def _roots_number_field(g):
    """Trager: factor the norm of g(x - s*theta) over Q and pull linear factors back by gcd."""
    import sympy

    K = g.field
    x, y = sympy.symbols("x y")
    m = sum(sympy.Rational(c.numerator, c.denominator) * y**i for i, c in enumerate(K.minpoly))
    theta = K.gen
    for s in range(0, 20):
        shifted = g.coeffs  # coefficients of g(x) in K; build g(x - s*theta)
        gx = Poly(K, [0])
        shift = Poly(K, [-(theta * s), 1])
        for c in reversed(shifted):
            gx = gx * shift + c
        if K.degree == 2:
            # the norm is g times its Galois conjugate (theta -> -a1 - theta)
            conj = Poly(K, [_conjugate_quadratic(c) for c in gx.coeffs])
            nq = [c.rep[0] for c in (gx * conj).coeffs]
            norm = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(nq)], x)
        else:
            expr = 0
            for i, c in enumerate(gx.coeffs):
                cy = sum(sympy.Rational(r.numerator, r.denominator) * y**j for j, r in enumerate(c.rep))
                expr += cy * x**i
            norm = sympy.Poly(sympy.resultant(m, expr, y), x)
        if sympy.degree(sympy.gcd(norm, norm.diff(x)), x) > 0:
            continue
        _, factors = sympy.factor_list(norm.as_expr(), x)
        out = []
        for fac, _ in factors:
            fq = sympy.Poly(fac, x)
            qcoeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
                       for c in reversed(fq.all_coeffs())]
            h = gcd(gx, Poly(K, qcoeffs))
            if h.degree == 1:
                out.append(-h.coeffs[0] - theta * s)
        return sorted(set(out), key=lambda r: r.sort_key())
    raise AssertionError("no squarefree norm shift found")  # pragma: no cover

"""Exact computable fields: the rationals, simple number fields and finite fields.

Every field hands out :class:`FieldElement` values whose representative is
canonical, so element equality is plain equality of representatives.

>>> K = NumberField([-2, 0, 1])
>>> r = K.gen
>>> r * r == K(2)
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

from .errors import (
    FieldMismatch,
    InvalidInput,
    ReduciblePolynomial,
    UnsupportedField,
    UnverifiedIrreducibility,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def parse_fraction(value) -> Fraction:
    """Read an int, Fraction or decimal string such as ``"-3/7"``."""
    if isinstance(value, bool):
        raise InvalidInput(f"not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad fraction string {value!r}") from exc
    raise InvalidInput(f"not a rational number: {value!r}")


def fraction_to_json(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# raw polynomial helpers on coefficient lists (low degree first)


def _trim(c, zero):
    c = list(c)
    while c and c[-1] == zero:
        c.pop()
    return c


def _as_fraction(x):
    return x if type(x) is Fraction else Fraction(x)


def _mulmod_raw(a, b, modulus, reduce):
    """Product of residues a*b modulo a monic ``modulus`` (coefficients reduced by ``reduce``)."""
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1) if m else []
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                prod[i + j] += x * y
    for top in range(len(prod) - 1, m - 1, -1):
        c = prod[top]
        if not c:
            continue
        prod[top] = 0
        for i in range(m):
            prod[top - m + i] -= c * modulus[i]
    return tuple(reduce(x) for x in prod[:m]) if m else ()


def _ext_gcd_inverse(a, modulus, inv, reduce):
    """Inverse of residue ``a`` modulo ``modulus`` by the extended Euclidean algorithm.

    Coefficients live in a field where ``inv`` inverts and ``reduce`` canonicalises.
    """
    m = len(modulus) - 1

    def divmod_(u, v):
        u = list(u)
        q = [0] * max(len(u) - len(v) + 1, 1)
        lc = inv(v[-1])
        while len(u) >= len(v) and u:
            c = reduce(u[-1] * lc)
            shift = len(u) - len(v)
            q[shift] = c
            for i, y in enumerate(v):
                u[shift + i] = reduce(u[shift + i] - c * y)
            u = _trim(u, 0)
        return _trim(q, 0), u

    def sub_mul(x, y, qq):
        out = list(x) + [0] * max(0, len(y) + len(qq) - len(x))
        for i, a_ in enumerate(qq):
            for j, b_ in enumerate(y):
                out[i + j] = reduce(out[i + j] - a_ * b_)
        return _trim(out, 0)

    r0, r1 = list(modulus), _trim(a, 0)
    s0, s1 = [], [1]
    while r1:
        qq, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub_mul(s0, s1, qq)
    # r0 is a nonzero constant when a is a unit
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c = inv(r0[0])
    out = [reduce(x * c) for x in s0] + [0] * m
    return tuple(out[:m])


# ---------------------------------------------------------------------------


class Field:
    """Common interface; subclasses implement the ``_``-prefixed rep operations."""

    characteristic: int
    degree: int

    def __init__(self):
        self._embeddings = {}

    # -- element construction
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return self._coerce_element(value)
        return FieldElement(self, self._rep_from(value))

    def _coerce_element(self, x):
        if x.field == self:
            return x if x.field is self else FieldElement(self, x.rep)
        src = x.field
        if isinstance(src, Rationals) and self.characteristic == 0:
            return self(x.rep)
        if isinstance(src, FiniteField) and isinstance(self, FiniteField):
            if src.l == self.l and src.k == 1:
                return self(x.rep[0])
        for key, image in self._embeddings.items():
            if key == src:
                acc = self.zero
                for c in reversed(x.rep):
                    acc = acc * image + self(c)
                return acc
        raise FieldMismatch(f"cannot coerce element of {src} into {self}")

    def register_embedding(self, src: "Field", gen_image: "FieldElement"):
        """Record that ``src.gen`` maps to ``gen_image`` in this field."""
        self._embeddings[src] = gen_image

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def from_json(self, value):
        return self(value)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.name()


class Rationals(Field):
    characteristic = 0
    degree = 1
    kind = "Q"

    def _key(self):
        return ("Q",)

    def name(self):
        return "QQ"

    def _rep_from(self, value):
        if isinstance(value, (list, tuple)):
            if len(value) != 1:
                raise InvalidInput(f"rational expects a scalar, got {value!r}")
            value = value[0]
        return parse_fraction(value)

    _add = staticmethod(lambda a, b: a + b)
    _sub = staticmethod(lambda a, b: a - b)
    _mul = staticmethod(lambda a, b: a * b)
    _neg = staticmethod(lambda a: -a)

    @staticmethod
    def _inv(a):
        return 1 / a

    @staticmethod
    def _is_zero(a):
        return a == 0

    def rep_to_json(self, rep):
        return fraction_to_json(rep)

    def descriptor(self):
        return {"type": "Q"}

    def sort_key(self, rep):
        return (rep,)


class NumberField(Field):
    """Q[x]/(minpoly) for a monic irreducible rational polynomial."""

    characteristic = 0
    kind = "Qext"

    def __init__(self, minpoly, trusted: bool = False, check: bool = True):
        super().__init__()
        coeffs = tuple(parse_fraction(c) for c in minpoly)
        coeffs = tuple(_trim(coeffs, 0))
        if len(coeffs) < 3:
            raise InvalidInput("number field minimal polynomial must have degree >= 2")
        if coeffs[-1] != 1:
            raise InvalidInput("minimal polynomial must be monic")
        self.minpoly = coeffs
        self.degree = len(coeffs) - 1
        self.trusted = trusted
        if check:
            _check_rational_irreducible(coeffs, trusted)

    def _key(self):
        return ("Qext", self.minpoly)

    def name(self):
        return "Q[x]/(" + ",".join(fraction_to_json(c) for c in self.minpoly) + ")"

    def _rep_from(self, value):
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                raise InvalidInput(f"too many coefficients for degree-{self.degree} field")
            c = [parse_fraction(v) for v in value]
            return tuple(c + [Fraction(0)] * (self.degree - len(c)))
        return (parse_fraction(value),) + (Fraction(0),) * (self.degree - 1)

    @property
    def gen(self):
        return FieldElement(self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.degree - 2))

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        return _mulmod_raw(a, b, self.minpoly, _as_fraction)

    def _inv(self, a):
        return _ext_gcd_inverse(a, self.minpoly, lambda x: 1 / Fraction(x), _as_fraction)

    @staticmethod
    def _is_zero(a):
        return not any(a)

    def rep_to_json(self, rep):
        return [fraction_to_json(c) for c in rep]

    def descriptor(self):
        d = {"type": "Qext", "minpoly": [fraction_to_json(c) for c in self.minpoly]}
        if self.trusted:
            d["trusted"] = True
        return d

    def sort_key(self, rep):
        return rep


class FiniteField(Field):
    """F_l[x]/(minpoly) with minpoly monic irreducible of degree k (k=1 uses x)."""

    kind = "GF"

    def __init__(self, l: int, k: int = 1, minpoly=None, check: bool = True):
        super().__init__()
        if not is_prime(l):
            raise InvalidInput(f"characteristic {l} is not prime")
        if k < 1:
            raise InvalidInput("finite field degree must be >= 1")
        self.l = l
        self.k = k
        self.characteristic = l
        self.degree = k
        self.order = l**k
        if k == 1:
            minpoly = [0, 1]
        elif minpoly is None:
            minpoly = first_irreducible(l, k)
        coeffs = tuple(int(c) % l for c in minpoly)
        if len(coeffs) != k + 1 or coeffs[-1] != 1:
            raise InvalidInput(f"minpoly must be monic of degree {k} over F_{l}")
        self.minpoly = coeffs
        if check and k > 1 and not _is_irreducible_mod_l(coeffs, l):
            raise ReduciblePolynomial(f"{list(coeffs)} is reducible over F_{l}")

    def _key(self):
        return ("GF", self.l, self.k, self.minpoly)

    def name(self):
        return f"GF({self.l}^{self.k})" if self.k > 1 else f"GF({self.l})"

    def _rep_from(self, value):
        l = self.l
        if isinstance(value, (list, tuple)):
            if len(value) > self.k:
                raise InvalidInput(f"too many coefficients for GF({l}^{self.k})")
            c = [_int_mod(v, l) for v in value]
            return tuple(c + [0] * (self.k - len(c)))
        return (_int_mod(value, l),) + (0,) * (self.k - 1)

    @property
    def gen(self):
        if self.k == 1:
            return self(-self.minpoly[0])
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def _add(self, a, b):
        l = self.l
        return tuple((x + y) % l for x, y in zip(a, b))

    def _sub(self, a, b):
        l = self.l
        return tuple((x - y) % l for x, y in zip(a, b))

    def _neg(self, a):
        l = self.l
        return tuple(-x % l for x in a)

    def _mul(self, a, b):
        if self.k == 1:
            return ((a[0] * b[0]) % self.l,)
        l = self.l
        return _mulmod_raw(a, b, self.minpoly, lambda x: x % l)

    def _inv(self, a):
        if self.k == 1:
            return (pow(a[0], -1, self.l),)
        l = self.l
        return _ext_gcd_inverse(a, self.minpoly, lambda x: pow(x, -1, l), lambda x: x % l)

    @staticmethod
    def _is_zero(a):
        return not any(a)

    def rep_to_json(self, rep):
        return rep[0] if self.k == 1 else list(rep)

    def descriptor(self):
        return {"type": "GF", "l": self.l, "k": self.k, "minpoly": list(self.minpoly)}

    def sort_key(self, rep):
        return rep

    def elements(self):
        """All field elements, in lexicographic order of representatives."""
        from itertools import product

        for digits in product(range(self.l), repeat=self.k):
            yield FieldElement(self, tuple(reversed(digits)))

    def mult_matrix(self, x: "FieldElement"):
        """k-by-k integer matrix (over F_l) of multiplication by ``x`` in the power basis."""
        cols = []
        basis_el = self.one
        g = self.gen if self.k > 1 else self.one
        for _ in range(self.k):
            cols.append((x * basis_el).rep)
            basis_el = basis_el * g
        return [[cols[j][i] for j in range(self.k)] for i in range(self.k)]

    def pth_root(self, x: "FieldElement"):
        return x ** (self.l ** (self.k - 1))

    def extension(self, m: int) -> "FiniteField":
        """The degree-``m`` extension, with an embedding of this field registered."""
        if m == 1:
            return self
        big = FiniteField(self.l, self.k * m)
        if self.k == 1:
            return big
        from .poly import Poly, roots

        mp = Poly(big, [big(c) for c in self.minpoly])
        rts = roots(mp)[0]
        big.register_embedding(self, rts[0][0])
        return big


@total_ordering
class FieldElement:
    __slots__ = ("field", "rep")

    def __init__(self, field: Field, rep):
        self.field = field
        self.rep = rep

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.rep
            return self.field(other).rep
        return self.field(other).rep

    def __add__(self, other):
        return FieldElement(self.field, self.field._add(self.rep, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field._sub(self.rep, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field._sub(self._other(other), self.rep))

    def __mul__(self, other):
        return FieldElement(self.field, self.field._mul(self.rep, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.rep))

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero in " + self.field.name())
        return FieldElement(self.field, self.field._inv(self.rep))

    def __truediv__(self, other):
        o = FieldElement(self.field, self._other(other))
        return self * o.inverse()

    def __rtruediv__(self, other):
        return FieldElement(self.field, self._other(other)) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.field._is_zero(self.rep)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        try:
            return self.rep == self.field(other).rep
        except (InvalidInput, FieldMismatch):
            return NotImplemented

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if isinstance(self.field, Rationals):
            return hash(self.rep)
        return hash((self.field._key(), self.rep))

    def sort_key(self):
        return self.field.sort_key(self.rep)

    def to_json(self):
        return self.field.rep_to_json(self.rep)

    def __repr__(self):
        return f"{self.field.name()}({self.to_json()})"


def _int_mod(value, l):
    if isinstance(value, FieldElement):
        value = value.rep[0]
    if isinstance(value, str):
        f = parse_fraction(value)
        return f.numerator * pow(f.denominator, -1, l) % l
    if isinstance(value, Fraction):
        return value.numerator * pow(value.denominator, -1, l) % l
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"not an integer mod {l}: {value!r}")
    return value % l


QQ = Rationals()


def GF(l: int, k: int = 1, minpoly=None) -> FiniteField:
    return FiniteField(l, k, minpoly)


# ---------------------------------------------------------------------------
# irreducibility certificates


def _is_irreducible_mod_l(coeffs, l):
    from .poly import Poly, is_irreducible

    F = FiniteField(l, 1)
    return is_irreducible(Poly(F, [F(c) for c in coeffs]))


def first_irreducible(l: int, k: int):
    """Lexicographically first monic irreducible polynomial of degree k over F_l."""
    from itertools import product

    for digits in product(range(l), repeat=k):
        coeffs = tuple(reversed(digits)) + (1,)
        if coeffs[0] == 0:
            continue
        if _is_irreducible_mod_l(coeffs, l):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _check_rational_irreducible(coeffs, trusted):
    deg = len(coeffs) - 1
    from .poly import Poly, rational_roots

    if rational_roots(Poly(QQ, [QQ(c) for c in coeffs])):
        raise ReduciblePolynomial(f"{[fraction_to_json(c) for c in coeffs]} has a rational root")
    if deg > 3 and not trusted:
        raise UnverifiedIrreducibility(
            f"degree {deg} > 3: irreducibility over Q cannot be certified; pass trusted=True"
        )


def adjoin_root(base: Field, poly, trusted: bool = False) -> Field:
    """Extend ``base`` by a root of the monic irreducible ``poly`` (coefficients low degree first).

    The returned field carries ``adjoined``, the root of ``poly``.
    """
    coeffs = [base(c) for c in poly]
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if len(coeffs) < 3:
        raise InvalidInput("adjoin_root needs a polynomial of degree >= 2")
    if coeffs[-1] != base.one:
        raise InvalidInput("adjoin_root needs a monic polynomial")
    if isinstance(base, Rationals):
        K = NumberField([c.rep for c in coeffs], trusted=trusted)
        K.adjoined = K.gen
        return K
    if isinstance(base, FiniteField):
        from .poly import Poly, is_irreducible, roots

        p = Poly(base, coeffs)
        if not is_irreducible(p):
            raise ReduciblePolynomial(f"polynomial is reducible over {base.name()}")
        m = p.degree
        if base.k == 1:
            K = FiniteField(base.l, m, [c.rep[0] for c in coeffs])
            K.adjoined = K.gen
            return K
        K = base.extension(m)
        pk = Poly(K, [K(c) for c in coeffs])
        K.adjoined = roots(pk)[0][0][0]
        return K
    raise UnsupportedField("adjoin_root over a number field (towers) is not supported")


def field_from_descriptor(d) -> Field:
    if not isinstance(d, dict) or "type" not in d:
        raise InvalidInput(f"bad field descriptor {d!r}")
    t = d["type"]
    if t == "Q":
        return QQ
    if t == "Qext":
        return NumberField(d["minpoly"], trusted=bool(d.get("trusted", False)))
    if t == "GF":
        try:
            return FiniteField(int(d["l"]), int(d.get("k", 1)), d.get("minpoly"))
        except KeyError as exc:
            raise InvalidInput("GF descriptor needs 'l'") from exc
    raise InvalidInput(f"unknown field type {t!r}")

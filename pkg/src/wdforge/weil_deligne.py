"""Weil-Deligne representations with unramified inertia.

Such a representation is a pair (F, N): F the action of geometric Frobenius
and N nilpotent, subject to N F = q F N.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import MixedParameters, NotFrobeniusSemisimple, ValidationFailed, WrongRank
from .fields import Field, FieldElement
from .matrix import Matrix, eigenspace, eigenvalues, is_semisimple, jordan_chevalley, jordan_type


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(p for p in range(2, q + 1) if q % p == 0)
    while q % p == 0:
        q //= p
    return q == 1


def _wd_violations(q, E, d, F, N):
    report = []
    if not isinstance(q, int) or not _is_prime_power(q):
        report.append(f"q={q} is not a prime power")
    if E.characteristic != 0:
        report.append("coefficient field E must have characteristic 0")
    for name, A in (("F", F), ("N", N)):
        if A.field != E:
            report.append(f"{name} is not over E")
        if (A.nrows, A.ncols) != (d, d):
            report.append(f"{name} is {A.nrows}x{A.ncols}, expected {d}x{d}")
    if report:
        return report
    if not F.is_invertible():
        report.append("F is not invertible")
    if not N.is_nilpotent():
        report.append("N is not nilpotent")
    if N @ F != (F @ N).scale(q):
        report.append("commutation N*F = q*F*N fails")
    return report


@dataclass(frozen=True)
class WDRep:
    q: int
    E: Field
    d: int
    F: Matrix
    N: Matrix

    def __post_init__(self):
        report = _wd_violations(self.q, self.E, self.d, self.F, self.N)
        if report:
            raise ValidationFailed(report)

    def conjugate(self, P: Matrix) -> "WDRep":
        Pi = P.inverse()
        return WDRep(self.q, self.E, self.d, P @ self.F @ Pi, P @ self.N @ Pi)


def validate_wd(q, E, F, N) -> WDRep:
    return WDRep(q, E, F.nrows, F, N)


@dataclass(frozen=True, order=False)
class Segment:
    """Unramified character value c at the top of a string of length n."""

    c: FieldElement
    n: int

    def __post_init__(self):
        if self.c.is_zero():
            raise ValueError("segment character value must be nonzero")

    def sort_key(self):
        return (-self.n, self.c.sort_key())

    def to_json(self):
        return {"c": self.c.to_json(), "n": self.n}


def sp(n: int, c, q: int, E: Field) -> WDRep:
    """Special representation: F = diag(c, c/q, ..., c/q^(n-1)), N e_i = e_(i+1)."""
    if n < 1:
        raise ValueError("segment length must be >= 1")
    c = E(c)
    if c.is_zero():
        raise ValueError("character value must be nonzero")
    F = Matrix.diag(E, [c / E(q) ** i for i in range(n)])
    z, o = E.zero, E.one
    N = Matrix(E, [[o if i == j + 1 else z for j in range(n)] for i in range(n)])
    return WDRep(q, E, n, F, N)


def _same_params(a: WDRep, b: WDRep):
    if a.q != b.q or a.E != b.E:
        raise MixedParameters(f"q/E mismatch: ({a.q}, {a.E}) vs ({b.q}, {b.E})")


def direct_sum(a: WDRep, b: WDRep) -> WDRep:
    _same_params(a, b)
    return WDRep(a.q, a.E, a.d + b.d, Matrix.block_diag(a.F, b.F), Matrix.block_diag(a.N, b.N))


def twist_unramified(a: WDRep, c) -> WDRep:
    c = a.E(c)
    if c.is_zero():
        raise ValueError("twisting character value must be nonzero")
    return WDRep(a.q, a.E, a.d, a.F.scale(c), a.N)


def frobenius_semisimplify(w: WDRep) -> WDRep:
    S, _ = jordan_chevalley(w.F)
    if w.N @ S != (S @ w.N).scale(w.q):  # pragma: no cover - guaranteed by theory, checked anyway
        raise AssertionError("semisimple part of F broke N S = q S N")
    return WDRep(w.q, w.E, w.d, S, w.N)


def semisimplify(w: WDRep) -> WDRep:
    S, _ = jordan_chevalley(w.F)
    return WDRep(w.q, w.E, w.d, S, Matrix.zeros(w.E, w.d))




def segments(w: WDRep):
    """Decompose a Frobenius-semisimple (F, N) into segments, sorted by (length desc, c).

    With r(a, m) = rank of N^m on the a-eigenspace (= number of segments
    containing both a and a/q^m), the number of segments topped at a of length
    at least n is r(a, n-1) - r(aq, n).
    """
    if not is_semisimple(w.F):
        raise NotFrobeniusSemisimple("apply frobenius_semisimplify first")
    E, q = w.E, w.E(w.q)
    spaces = {lam: eigenspace(w.F, lam) for lam, _ in eigenvalues(w.F)}
    # N maps the a-eigenspace into the a/q-eigenspace
    for lam, basis in spaces.items():
        target = lam / q
        for v in basis:
            nv = w.N.apply(v)
            if any(not x.is_zero() for x in nv):
                if w.F.apply(nv) != tuple(target * x for x in nv):
                    raise AssertionError("N does not lower Frobenius eigenvalues by q")

    powers = [Matrix.identity(E, w.d)]
    for _ in range(w.d + 1):
        powers.append(powers[-1] @ w.N)

    def r(a, m):
        basis = spaces.get(a)
        if not basis:
            return 0
        return Matrix(E, [powers[m].apply(v) for v in basis]).rank()

    out = []
    for a in spaces:
        ge = [r(a, n - 1) - r(a * q, n) for n in range(1, w.d + 2)]
        for n in range(1, w.d + 1):
            out += [Segment(a, n)] * (ge[n - 1] - ge[n])
    out.sort(key=Segment.sort_key)
    if sum(s.n for s in out) != w.d:  # pragma: no cover
        raise AssertionError("segment lengths do not sum to the dimension")
    return out


def from_segments(segs, q: int, E: Field) -> WDRep:
    it = iter(segs)
    first = next(it)
    w = sp(first.n, first.c, q, E)
    for s in it:
        w = direct_sum(w, sp(s.n, s.c, q, E))
    return w


def _frobenius_jordan_types(w: WDRep):
    return sorted(
        ((lam.sort_key(), jordan_type(w.F, lam)) for lam, _ in eigenvalues(w.F)),
    )


def is_isomorphic(a: WDRep, b: WDRep, strict: bool = False) -> bool:
    """Isomorphism of Frobenius-semisimplifications; ``strict`` also compares Jordan types of F."""
    _same_params(a, b)
    if a.d != b.d:
        return False
    sa = Counter(segments(frobenius_semisimplify(a)))
    sb = Counter(segments(frobenius_semisimplify(b)))
    if sa != sb:
        return False
    if strict:
        return _frobenius_jordan_types(a) == _frobenius_jordan_types(b)
    return True


def is_generic_parameter(w: WDRep) -> bool:
    """For d = 2: N != 0, or the Frobenius eigenvalue ratio avoids q and 1/q."""
    if w.d != 2:
        raise WrongRank(f"genericity test needs dimension 2, got {w.d}")
    eig = eigenvalues(w.F)
    if not w.N.is_zero():
        return True
    if len(eig) == 1:
        return True  # ratio 1
    (a, _), (b, _) = eig
    q = w.E(w.q)
    ratio = a / b
    return ratio != q and ratio != q.inverse()


def nilpotent_ranks(N: Matrix):
    ranks = []
    P = N
    for _ in range(N.nrows):
        ranks.append(P.rank())
        P = P @ N
    return ranks


def monodromy_dominates(a: WDRep, b: WDRep) -> bool:
    """rank(N_a^i) <= rank(N_b^i) for all i >= 1 (closure order of nilpotent orbits)."""
    _same_params(a, b)
    if a.d != b.d:
        raise MixedParameters(f"dimension mismatch: {a.d} vs {b.d}")
    return all(x <= y for x, y in zip(nilpotent_ranks(a.N), nilpotent_ranks(b.N)))

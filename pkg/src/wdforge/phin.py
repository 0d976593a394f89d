"""Semistable (phi, N)-modules over an unramified base, filtrations and L-invariants.

A module of rank d over K0 (x) E, with K0 unramified of degree f over Q_l,
is stored in its tau-decomposed form: ``phi[i]`` maps the i-th component to
the (i+1 mod f)-th one and ``n[i]`` acts on the i-th component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InvalidInput,
    NoValuationData,
    NonSplitCharPoly,
    NotMonodromyModule,
    UnsupportedBase,
    UnsupportedRank,
    ValidationFailed,
    WrongRank,
)
from .fields import Field, FieldElement, NumberField, Rationals, is_prime
from .matrix import Matrix, column_space, contains, eigenspace, eigenvalues, same_span, span_rank


def _commutation_ok(n_next: Matrix, phi: Matrix, n_cur: Matrix, l: int) -> bool:
    return n_next @ phi == (phi @ n_cur).scale(l)


@dataclass(frozen=True)
class PhiNModule:
    l: int
    f: int
    d: int
    E: Field
    phi: tuple
    n: tuple

    def __post_init__(self):
        report = _phin_violations(self.l, self.f, self.d, self.E, self.phi, self.n)
        if report:
            raise ValidationFailed(report)

    def composite(self, tau: int = 0) -> Matrix:
        """phi^f restricted to the tau component: Phi[tau-1] ... Phi[tau+1] Phi[tau]."""
        F = self.phi[tau]
        for j in range(1, self.f):
            F = self.phi[(tau + j) % self.f] @ F
        return F

    def transport(self, P):
        """Same structure in a new basis; ``P[i]`` is the change of basis on component i."""
        Pinv = [p.inverse() for p in P]
        f = self.f
        phi = tuple(P[(i + 1) % f] @ self.phi[i] @ Pinv[i] for i in range(f))
        n = tuple(P[i] @ self.n[i] @ Pinv[i] for i in range(f))
        return PhiNModule(self.l, f, self.d, self.E, phi, n)


def _phin_violations(l, f, d, E, phi, n):
    report = []
    if not is_prime(l):
        report.append(f"l={l} is not prime")
    if f < 1:
        report.append("f must be >= 1")
    if E.characteristic != 0:
        report.append("coefficient field E must have characteristic 0")
    if len(phi) != f or len(n) != f:
        report.append(f"expected {f} phi and {f} N matrices, got {len(phi)} and {len(n)}")
        return report
    for i, (p, m) in enumerate(zip(phi, n)):
        for name, A in (("phi", p), ("N", m)):
            if A.field != E:
                report.append(f"{name}[{i}] is not over E")
            if (A.nrows, A.ncols) != (d, d):
                report.append(f"{name}[{i}] is {A.nrows}x{A.ncols}, expected {d}x{d}")
    if report:
        return report
    for i in range(f):
        if not phi[i].is_invertible():
            report.append(f"phi[{i}] is not invertible")
        if not n[i].is_nilpotent():
            report.append(f"N[{i}] is not nilpotent")
    for i in range(f):
        if not _commutation_ok(n[(i + 1) % f], phi[i], n[i], l):
            report.append(f"commutation N[{(i + 1) % f}]*phi[{i}] = l*phi[{i}]*N[{i}] fails at index {i}")
    return report


def validate_phin(l, f, E, phi, n, d=None) -> PhiNModule:
    """Build a :class:`PhiNModule`, raising ValidationFailed with every violated invariant."""
    phi = tuple(phi)
    n = tuple(n)
    if d is None:
        d = phi[0].nrows if phi else 0
    return PhiNModule(l, f, d, E, phi, n)


# ---------------------------------------------------------------------------
# filtrations


@dataclass(frozen=True)
class FilStep:
    jump: int
    basis: tuple


@dataclass(frozen=True)
class FilteredPhiNModule:
    module: PhiNModule
    filtration: tuple  # per tau: tuple of FilStep with increasing jumps
    valuation: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        report = _filtration_violations(self.module, self.filtration)
        if report:
            raise ValidationFailed(report)

    @property
    def d(self):
        return self.module.d

    @property
    def f(self):
        return self.module.f

    @property
    def l(self):
        return self.module.l

    @property
    def E(self):
        return self.module.E

    def fil(self, tau: int, j: int):
        """Basis of Fil^j on the tau component."""
        steps = self.filtration[tau]
        if j <= steps[0].jump:
            return steps[0].basis
        for s in steps:
            if s.jump >= j:
                return s.basis
        return ()

    def transport(self, P):
        mod = self.module.transport(P)
        filt = tuple(
            tuple(FilStep(s.jump, tuple(P[t].apply(v) for v in s.basis)) for s in steps)
            for t, steps in enumerate(self.filtration)
        )
        return FilteredPhiNModule(mod, filt, self.valuation)


def _filtration_violations(module, filtration):
    report = []
    d, E = module.d, module.E
    if len(filtration) != module.f:
        return [f"expected a filtration for each of the {module.f} components"]
    for t, steps in enumerate(filtration):
        if not steps:
            report.append(f"filtration at tau={t} is empty")
            continue
        jumps = [s.jump for s in steps]
        if any(a >= b for a, b in zip(jumps, jumps[1:])):
            report.append(f"filtration jumps at tau={t} must be strictly increasing")
        dims = []
        for s in steps:
            if any(len(v) != d for v in s.basis):
                report.append(f"filtration vector of wrong length at tau={t}, jump={s.jump}")
                dims = None
                break
            r = span_rank(s.basis, E)
            if r != len(s.basis):
                report.append(f"basis of Fil^{s.jump} at tau={t} is not linearly independent")
            dims.append(r)
        if dims is None:
            continue
        if dims[0] != d:
            report.append(f"lowest filtration step at tau={t} must be the whole space (dim {d})")
        if dims[-1] != 0:
            report.append(f"highest filtration step at tau={t} must be zero (separated)")
        if any(a <= b for a, b in zip(dims, dims[1:])):
            report.append(f"filtration dimensions at tau={t} must strictly decrease")
        for a, b in zip(steps, steps[1:]):
            if b.basis and not contains(a.basis, b.basis, E):
                report.append(f"Fil^{b.jump} is not contained in Fil^{a.jump} at tau={t}")
    return report


def hodge_tate_weights(D: FilteredPhiNModule, tau: int):
    """Jump j repeated dim Fil^j - dim Fil^(j+1) times, ascending."""
    steps = D.filtration[tau]
    out = []
    for a, b in zip(steps, steps[1:]):
        out += [a.jump] * (len(a.basis) - len(b.basis))
    return out


def is_weight_zero_type(D: FilteredPhiNModule) -> bool:
    """Every tau-labelled weight multiset equals {0, 1}."""
    if D.d != 2:
        raise WrongRank(f"weight-{{0,1}} test needs rank 2, got {D.d}")
    return all(hodge_tate_weights(D, t) == [0, 1] for t in range(D.f))


# ---------------------------------------------------------------------------
# valuations and weak admissibility


class Valuation:
    """l-adic valuation on E normalised by v(l) = 1.

    Over a number field only the valuation of the generator is known, so an
    element is valued when the ultrametric minimum over its monomials is
    attained exactly once.
    """

    def __init__(self, l: int, E: Field, generator=None):
        self.l = l
        self.E = E
        self.generator = None if generator is None else Fraction(generator)
        if isinstance(E, NumberField) and self.generator is None:
            raise NoValuationData("number-field coefficients need the valuation of the generator")

    def _vq(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ValueError("valuation of zero")
        v = 0
        num, den = x.numerator, x.denominator
        while num % self.l == 0:
            num //= self.l
            v += 1
        while den % self.l == 0:
            den //= self.l
            v -= 1
        return Fraction(v)

    def __call__(self, x: FieldElement) -> Fraction:
        if isinstance(self.E, Rationals):
            return self._vq(x.rep)
        terms = [self._vq(c) + i * self.generator for i, c in enumerate(x.rep) if c != 0]
        if not terms:
            raise ValueError("valuation of zero")
        lo = min(terms)
        if terms.count(lo) > 1:
            raise NoValuationData(f"valuation of {x.to_json()} is not determined by the generator's")
        return lo


@dataclass
class WAReport:
    t_N: Fraction
    t_H: Fraction
    subobjects: list
    verdict: bool

    def to_json(self):
        from .fields import fraction_to_json

        return {
            "t_N": fraction_to_json(self.t_N),
            "t_H": fraction_to_json(self.t_H),
            "subobjects": self.subobjects,
            "weakly_admissible": self.verdict,
        }


def _valuation_for(D: FilteredPhiNModule, valuation=None):
    if isinstance(valuation, Valuation):
        return valuation
    data = valuation if valuation is not None else D.valuation
    gen = None
    if data is not None:
        gen = data.get("generator")
    return Valuation(D.l, D.E, gen)


def _line_height(D, tau, v):
    """Largest recorded jump whose filtration step contains the line spanned by v."""
    best = None
    for s in D.filtration[tau]:
        if s.basis and contains(s.basis, [v], D.E):
            best = s.jump
    return best


def is_weakly_admissible(D: FilteredPhiNModule, valuation=None) -> WAReport:
    """Newton/Hodge comparison for rank <= 2.

    t_N = v(det phi^f)/f, t_H = (sum of all jumps)/f, and every (phi, N)-stable
    rank-one sub-object must satisfy t_H(sub) <= t_N(sub).
    """
    if D.d > 2:
        raise UnsupportedRank(f"weak admissibility is implemented for rank <= 2, got {D.d}")
    v = _valuation_for(D, valuation)
    f = D.f
    F0 = D.module.composite(0)
    t_N = v(F0.det()) / f
    t_H = Fraction(sum(sum(hodge_tate_weights(D, t)) for t in range(f)), f)
    subs = []
    if D.d == 2:
        for line, lam in _stable_lines(D, F0):
            images = _transport_line(D, line)
            h = sum(_line_height(D, t, w) for t, w in enumerate(images))
            sub_tN = v(lam) / f
            sub_tH = Fraction(h, f)
            subs.append(
                {
                    "line": [x.to_json() for x in line],
                    "eigenvalue": lam.to_json(),
                    "t_N": _fj(sub_tN),
                    "t_H": _fj(sub_tH),
                    "ok": sub_tH <= sub_tN,
                }
            )
    verdict = t_N == t_H and all(s["ok"] for s in subs)
    return WAReport(t_N, t_H, subs, verdict)


def _fj(x):
    from .fields import fraction_to_json

    return fraction_to_json(x)


def _transport_line(D, line):
    out = [tuple(line)]
    for i in range(D.f - 1):
        out.append(D.module.phi[i].apply(out[-1]))
    return out


def _stable_lines(D, F0):
    """Rank-one (phi, N)-stable sub-objects, given by their tau_0 line and phi^f-eigenvalue.

    When phi^f is scalar every line is stable; the inequality then only needs
    the lines that meet some one-dimensional filtration step plus one generic line.
    """
    E = D.E
    N0 = D.module.n[0]
    if not N0.is_zero():
        line = N0.nullspace()[0]
        lam = _eigenvalue_on(F0, line)
        return [(line, lam)]
    try:
        eig = eigenvalues(F0)
    except NonSplitCharPoly:
        eig = [(lam, 1) for lam in _roots_only(F0)]
    out = []
    for lam, _ in eig:
        space = eigenspace(F0, lam)
        if len(space) == 1:
            out.append((space[0], lam))
            continue
        candidates = []
        back = Matrix.identity(E, D.d)
        for t in range(D.f):
            for s in D.filtration[t]:
                if len(s.basis) == 1:
                    cand = back.inverse().apply(s.basis[0])
                    if not any(same_span([cand], [c], E) for c in candidates):
                        candidates.append(cand)
            back = D.module.phi[t] @ back
        c = 0
        while True:
            generic = (E.one, E(c))
            if not any(same_span([generic], [x], E) for x in candidates):
                break
            c += 1
        for cand in candidates + [generic]:
            out.append((cand, lam))
    return out


def _roots_only(F0):
    from .matrix import char_poly
    from .poly import roots

    return [r for r, _ in roots(char_poly(F0))[0]]


def _eigenvalue_on(M: Matrix, v):
    w = M.apply(v)
    i = next(i for i, x in enumerate(v) if not x.is_zero())
    return w[i] / v[i]


# ---------------------------------------------------------------------------
# monodromy modules and the Fontaine-Mazur L-invariant


@dataclass
class MonodromyReport:
    n_nonzero: bool
    j0: int | None
    fil_differs_from_image: bool

    @property
    def verdict(self) -> bool:
        return self.n_nonzero and self.j0 is not None and self.fil_differs_from_image

    def to_json(self):
        return {
            "n_nonzero": self.n_nonzero,
            "j0": self.j0,
            "fil_differs_from_image": self.fil_differs_from_image,
            "monodromy_module": self.verdict,
        }


def _check_two_dim_qp(D):
    if D.f != 1:
        raise UnsupportedBase("monodromy modules and L-invariants are implemented for f = 1 only")
    if D.d != 2:
        raise WrongRank(f"monodromy modules have rank 2, got {D.d}")


def is_monodromy_module(D: FilteredPhiNModule) -> MonodromyReport:
    _check_two_dim_qp(D)
    N = D.module.n[0]
    n_nonzero = not N.is_zero()
    step = next((s for s in D.filtration[0] if len(s.basis) == 1), None)
    j0 = None if step is None else step.jump
    differs = False
    if step is not None:
        differs = not same_span(column_space(N), step.basis, D.E)
    return MonodromyReport(n_nonzero, j0, differs)


@dataclass(frozen=True)
class LInvariantResult:
    value: FieldElement
    alpha: FieldElement
    j0: int

    def to_json(self):
        return {"L": self.value.to_json(), "alpha": self.alpha.to_json(), "j0": self.j0}


def l_invariant(D: FilteredPhiNModule, eigenvector=None) -> LInvariantResult:
    """The scalar L with x - L*Nx spanning Fil^{j0}, x a phi-eigenvector not killed by N.

    ``eigenvector`` overrides the choice of x (any nonzero multiple gives the same L).
    """
    rep = is_monodromy_module(D)
    if not rep.verdict:
        raise NotMonodromyModule("input is not a two-dimensional monodromy module", **rep.to_json())
    E = D.E
    phi = D.module.phi[0]
    N = D.module.n[0]
    y = N.nullspace()[0]
    beta = _eigenvalue_on(phi, y)
    alpha = beta * D.l
    if eigenvector is None:
        xs = eigenspace(phi, alpha)
        if not xs:
            raise NonSplitCharPoly("phi has no eigenvector for l*beta")  # pragma: no cover
        x = xs[0]
    else:
        x = tuple(E(c) for c in eigenvector)
        if phi.apply(x) != tuple(alpha * c for c in x):
            raise InvalidInput("supplied vector is not a phi-eigenvector for l*beta")
    nx = N.apply(x)
    v = D.fil(0, rep.j0)[0]
    a, b = Matrix.from_columns(E, [x, nx]).inverse().apply(v)
    return LInvariantResult(-b / a, alpha, rep.j0)

"""Seeded random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from wdforge.fields import QQ, FiniteField, NumberField
from wdforge.matrix import Matrix
from wdforge.phin import FilStep, FilteredPhiNModule, PhiNModule
from wdforge.weil_deligne import Segment, from_segments

QSQRT2 = NumberField([-2, 0, 1])
GF5 = FiniteField(5)
GF25 = FiniteField(5, 2)
FIELDS = {"Q": QQ, "Q(sqrt2)": QSQRT2, "GF5": GF5, "GF25": GF25}


def rand_elt(rng: random.Random, E, nonzero=False):
    while True:
        if E is QQ or E == QQ:
            x = E(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
        elif isinstance(E, NumberField):
            x = E([Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(E.degree)])
        else:
            x = E([rng.randrange(E.l) for _ in range(E.k)])
        if not nonzero or not x.is_zero():
            return x


def rand_matrix(rng, E, n, m=None):
    m = n if m is None else m
    return Matrix(E, [[rand_elt(rng, E) for _ in range(m)] for _ in range(n)])


def rand_invertible(rng, E, n):
    while True:
        M = rand_matrix(rng, E, n)
        if M.is_invertible():
            return M


def rand_small_invertible(rng, E, n):
    """Unimodular-ish integer change of basis keeping rationals short."""
    while True:
        M = Matrix(E, [[E(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        if M.is_invertible():
            return M


def rand_jordan_like(rng, E, n):
    """P J P^-1 with J block upper triangular with repeated diagonal values."""
    vals = [rand_elt(rng, E, nonzero=True) for _ in range(rng.randint(1, n))]
    diag = [rng.choice(vals) for _ in range(n)]
    diag.sort(key=lambda x: x.sort_key())
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(diag[i])
            elif j == i + 1 and diag[i] == diag[j]:
                row.append(E(rng.randint(0, 1)))
            else:
                row.append(E.zero)
        rows.append(row)
    J = Matrix(E, rows)
    P = rand_small_invertible(rng, E, n)
    return P @ J @ P.inverse()


def rand_segments(rng, E, d, pool=None):
    segs = []
    left = d
    while left:
        n = rng.randint(1, left)
        c = rng.choice(pool) if pool else rand_elt(rng, E, nonzero=True)
        segs.append(Segment(E(c), n))
        left -= n
    return segs


def rand_wd(rng, E, q, d, basis_change=True):
    segs = rand_segments(rng, E, d, pool=[E(x) for x in (1, 2, -1, 3, Fraction(1, 2), q, q * q)])
    w = from_segments(segs, q, E)
    if basis_change:
        w = w.conjugate(rand_small_invertible(rng, E, d))
    return w, segs


def propagate_phin(rng, E, l, f, F, N):
    """(phi, N)-module whose tau = 0 composite is F and N[0] = N.

    phi[0..f-2] are random; phi[f-1] closes the cycle and N[i+1] = l phi[i] N[i] phi[i]^-1.
    """
    d = F.nrows
    phis = [rand_small_invertible(rng, E, d) for _ in range(f - 1)]
    C = Matrix.identity(E, d)
    for p in phis:
        C = p @ C
    phis.append(F @ C.inverse())
    ns = [N]
    for i in range(f - 1):
        ns.append((phis[i] @ ns[i] @ phis[i].inverse()).scale(l))
    return PhiNModule(l, f, d, E, tuple(phis), tuple(ns))


def rand_phin(rng, E=QQ, max_d=4):
    l = rng.choice([2, 3, 5])
    f = rng.choice([1, 2, 3])
    d = rng.randint(1, max_d)
    w, _ = rand_wd(rng, E, l**f, d)
    return propagate_phin(rng, E, l, f, w.F, w.N)


def monodromy_module(E, l, beta, L, j0=1, P=None):
    """phi = diag(l beta, beta), N e1 = e2, Fil^{j0} = span(e1 - L e2); optionally moved by P."""
    beta = E(beta)
    phi = Matrix.diag(E, [beta * l, beta])
    N = Matrix(E, [[0, 0], [1, 0]])
    mod = PhiNModule(l, 1, 2, E, (phi,), (N,))
    full = ((E.one, E.zero), (E.zero, E.one))
    filt = ((FilStep(0, full), FilStep(j0, ((E.one, -E(L)),)), FilStep(j0 + 1, ())),)
    D = FilteredPhiNModule(mod, filt)
    return D.transport([P]) if P is not None else D

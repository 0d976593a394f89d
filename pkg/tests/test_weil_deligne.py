import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import QSQRT2, rand_small_invertible, rand_wd
from wdforge.errors import MixedParameters, NotFrobeniusSemisimple, ValidationFailed, WrongRank
from wdforge.fields import QQ, FiniteField
from wdforge.matrix import Matrix, eigen_split
from wdforge.weil_deligne import (
    Segment,
    WDRep,
    direct_sum,
    frobenius_semisimplify,
    from_segments,
    is_generic_parameter,
    is_isomorphic,
    monodromy_dominates,
    nilpotent_ranks,
    segments,
    semisimplify,
    sp,
    twist_unramified,
    validate_wd,
)

N21 = Matrix(QQ, [[0, 0], [1, 0]])
Z2 = Matrix.zeros(QQ, 2)


def seg(c, n, E=QQ):
    return Segment(E(c), n)


def test_validate_special_example():
    F = Matrix.diag(QQ, [1, Fraction(1, 5)])
    assert N21 @ F == (F @ N21).scale(5)
    w = validate_wd(5, QQ, F, N21)
    assert w.d == 2


@pytest.mark.parametrize(
    "q, F, N, needle",
    [
        (5, Matrix.identity(QQ, 2), N21, "commutation"),
        (5, Matrix.diag(QQ, [1, 0]), Z2, "invertible"),
        (6, Matrix.identity(QQ, 2), Z2, "prime power"),
        (5, Matrix.identity(QQ, 2), Matrix.identity(QQ, 2), "nilpotent"),
    ],
)
def test_validate_rejects(q, F, N, needle):
    with pytest.raises(ValidationFailed) as exc:
        validate_wd(q, QQ, F, N)
    assert any(needle in v for v in exc.value.report)


def test_validate_rejects_positive_characteristic():
    F5 = FiniteField(5)
    with pytest.raises(ValidationFailed):
        validate_wd(5, F5, Matrix.identity(F5, 2), Matrix.zeros(F5, 2))


def test_special_constructor():
    w = sp(2, 1, 5, QQ)
    assert w.F == Matrix.diag(QQ, [1, Fraction(1, 5)]) and w.N == N21
    one = sp(1, 7, 3, QQ)
    assert one.F == Matrix(QQ, [[7]]) and one.N.is_zero()
    w3 = sp(3, 2, 4, QQ)
    assert w3.F == Matrix.diag(QQ, [2, Fraction(1, 2), Fraction(1, 8)])
    assert nilpotent_ranks(w3.N) == [2, 1, 0]
    with pytest.raises(ValueError):
        sp(0, 1, 5, QQ)
    with pytest.raises(ValueError):
        sp(2, 0, 5, QQ)


def test_direct_sum_and_twist():
    w = direct_sum(sp(1, 2, 5, QQ), sp(1, 3, 5, QQ))
    assert w.F == Matrix.diag(QQ, [2, 3]) and w.N.is_zero()
    t = twist_unramified(sp(2, 1, 5, QQ), 3)
    assert t.F == Matrix.diag(QQ, [3, Fraction(3, 5)]) and t.N == N21
    assert segments(t) == [seg(3, 2)]
    with pytest.raises(MixedParameters):
        direct_sum(sp(1, 1, 5, QQ), sp(1, 1, 25, QQ))
    with pytest.raises(MixedParameters):
        direct_sum(sp(1, 1, 5, QQ), sp(1, 1, 5, QSQRT2))
    with pytest.raises(ValueError):
        twist_unramified(sp(1, 1, 5, QQ), 0)


def test_frobenius_semisimplify_unipotent():
    w = WDRep(5, QQ, 2, Matrix(QQ, [[1, 1], [0, 1]]), Z2)
    assert frobenius_semisimplify(w).F == Matrix.identity(QQ, 2)
    s = sp(2, 1, 5, QQ)
    assert frobenius_semisimplify(s) == s


def test_frobenius_semisimplify_blockwise():
    F = Matrix.block_diag(Matrix.diag(QQ, [2, 3]), Matrix(QQ, [[7, 1], [0, 7]]))
    rng = random.Random(4)
    P = rand_small_invertible(rng, QQ, 4)
    w = WDRep(5, QQ, 4, F, Matrix.zeros(QQ, 4)).conjugate(P)
    S = frobenius_semisimplify(w).F
    # oracle: S acts as lambda on each generalised eigenspace of F
    for lam, basis in eigen_split(w.F):
        for v in basis:
            assert S.apply(v) == tuple(lam * x for x in v)
    assert S == P @ Matrix.diag(QQ, [2, 3, 7, 7]) @ P.inverse()


def test_semisimplify():
    s = semisimplify(sp(2, 1, 5, QQ))
    assert s.F == Matrix.diag(QQ, [1, Fraction(1, 5)]) and s.N.is_zero()
    w = WDRep(5, QQ, 2, Matrix.diag(QQ, [2, 3]), Z2)
    assert semisimplify(w) == w


def test_segments_examples():
    assert segments(sp(2, 1, 5, QQ)) == [seg(1, 2)]
    assert Counter(segments(WDRep(5, QQ, 2, Matrix.diag(QQ, [2, 3]), Z2))) == Counter([seg(2, 1), seg(3, 1)])
    F = Matrix.diag(QQ, [1, Fraction(1, 5), 3])
    N = Matrix(QQ, [[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    assert Counter(segments(WDRep(5, QQ, 3, F, N))) == Counter([seg(1, 2), seg(3, 1)])


def test_segments_with_overlapping_strings():
    # sp(3, 1) + sp(1, 1/5) + sp(2, 1/5): eigenvalue 1/5 is shared by three strings
    segs = [seg(1, 3), seg(Fraction(1, 5), 1), seg(Fraction(1, 5), 2)]
    w = from_segments(segs, 5, QQ).conjugate(rand_small_invertible(random.Random(2), QQ, 6))
    assert Counter(segments(w)) == Counter(segs)


def test_segments_requires_semisimple_frobenius():
    w = WDRep(5, QQ, 2, Matrix(QQ, [[1, 1], [0, 1]]), Z2)
    with pytest.raises(NotFrobeniusSemisimple):
        segments(w)


def test_segment_objects():
    with pytest.raises(ValueError):
        Segment(QQ(0), 1)
    assert seg(2, 1).to_json() == {"c": "2", "n": 1}


def test_is_isomorphic_examples():
    a = sp(2, 1, 5, QQ)
    b = WDRep(5, QQ, 2, Matrix.diag(QQ, [1, Fraction(1, 5)]), N21.scale(2))
    P = Matrix.diag(QQ, [1, 2])
    assert P @ a.N @ P.inverse() == b.N and P @ a.F @ P.inverse() == b.F
    assert is_isomorphic(a, b)
    c = WDRep(5, QQ, 2, Matrix.diag(QQ, [1, Fraction(1, 5)]), Z2)
    assert not is_isomorphic(a, c)
    assert not is_isomorphic(sp(1, 1, 5, QQ), a)


def test_strict_isomorphism_sees_frobenius_jordan_type():
    u = WDRep(5, QQ, 2, Matrix(QQ, [[1, 1], [0, 1]]), Z2)
    i = WDRep(5, QQ, 2, Matrix.identity(QQ, 2), Z2)
    assert is_isomorphic(u, i)
    assert not is_isomorphic(u, i, strict=True)
    assert is_isomorphic(u, u.conjugate(Matrix(QQ, [[1, 2], [3, 4]])), strict=True)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), d=st.integers(1, 4), q=st.sampled_from([2, 3, 4, 5]))
def test_isomorphism_is_conjugation_invariant_equivalence(seed, d, q):
    rng = random.Random(seed)
    a, segs = rand_wd(rng, QQ, q, d)
    b = a.conjugate(rand_small_invertible(rng, QQ, d))
    c = b.conjugate(rand_small_invertible(rng, QQ, d))
    assert is_isomorphic(a, a)
    assert is_isomorphic(a, b) and is_isomorphic(b, a)
    assert is_isomorphic(b, c) and is_isomorphic(a, c)
    assert Counter(segments(frobenius_semisimplify(b))) == Counter(segs)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), d=st.integers(1, 4))
def test_semisimplifications_are_idempotent(seed, d):
    rng = random.Random(seed)
    w, _ = rand_wd(rng, QSQRT2, 3, d)
    f = frobenius_semisimplify(w)
    s = semisimplify(w)
    assert frobenius_semisimplify(f) == f and semisimplify(s) == s
    assert semisimplify(f) == s
    assert f.N == w.N


def test_generic_parameter_examples():
    assert is_generic_parameter(WDRep(5, QQ, 2, Matrix.diag(QQ, [1, 5]), Z2)) is False
    assert is_generic_parameter(WDRep(5, QQ, 2, Matrix.diag(QQ, [5, 1]), Z2)) is False
    assert is_generic_parameter(sp(2, 1, 5, QQ)) is True
    assert is_generic_parameter(WDRep(5, QQ, 2, Matrix.diag(QQ, [1, 2]), Z2)) is True
    assert is_generic_parameter(WDRep(5, QQ, 2, Matrix.identity(QQ, 2), Z2)) is True
    with pytest.raises(WrongRank):
        is_generic_parameter(sp(3, 1, 5, QQ))


def test_monodromy_dominates_examples():
    zero = WDRep(5, QQ, 2, Matrix.diag(QQ, [1, Fraction(1, 5)]), Z2)
    st_ = sp(2, 1, 5, QQ)
    assert monodromy_dominates(zero, st_)
    assert not monodromy_dominates(st_, zero)
    assert monodromy_dominates(st_, st_)
    with pytest.raises(MixedParameters):
        monodromy_dominates(st_, sp(3, 1, 5, QQ))


def test_conjugate_preserves_validity():
    w = sp(3, 2, 4, QQ)
    P = Matrix(QQ, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    c = w.conjugate(P)
    assert c.N @ c.F == (c.F @ c.N).scale(4)
    assert segments(c) == [seg(2, 3)]

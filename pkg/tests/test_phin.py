import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import QSQRT2, monodromy_module, propagate_phin, rand_phin, rand_small_invertible
from wdforge.errors import (
    InvalidInput,
    NoValuationData,
    NotMonodromyModule,
    UnsupportedBase,
    UnsupportedRank,
    ValidationFailed,
    WrongRank,
)
from wdforge.fields import QQ
from wdforge.matrix import Matrix
from wdforge.phin import (
    FilStep,
    FilteredPhiNModule,
    PhiNModule,
    Valuation,
    hodge_tate_weights,
    is_monodromy_module,
    is_weakly_admissible,
    is_weight_zero_type,
    l_invariant,
    validate_phin,
)

N21 = Matrix(QQ, [[0, 0], [1, 0]])


def _vecs(E, *rows):
    return tuple(tuple(E(x) for x in r) for r in rows)


def _filtered(module, per_tau):
    """per_tau: list of [(jump, [vectors...]), ...] for each component."""
    E = module.E
    filt = tuple(tuple(FilStep(j, _vecs(E, *b)) for j, b in steps) for steps in per_tau)
    return FilteredPhiNModule(module, filt)


def _two_dim(E=QQ, phi=(5, 1), N=N21, l=5):
    return PhiNModule(l, 1, 2, E, (Matrix.diag(E, [E(x) for x in phi]),), (N,))


# -- validation ----------------------------------------------------------------


def test_validate_example_module():
    phi = Matrix.diag(QQ, [5, 1])
    assert N21 @ phi == (phi @ N21).scale(5)
    D = validate_phin(5, 1, QQ, [phi], [N21])
    assert D.d == 2 and D.composite() == phi


def test_validate_reports_commutation_failure():
    with pytest.raises(ValidationFailed) as exc:
        validate_phin(5, 1, QQ, [Matrix.identity(QQ, 2)], [N21])
    assert any("commutation" in v for v in exc.value.report)


def test_validate_reports_non_nilpotent():
    with pytest.raises(ValidationFailed) as exc:
        validate_phin(5, 1, QQ, [Matrix.identity(QQ, 2)], [Matrix.identity(QQ, 2)])
    assert any("nilpotent" in v for v in exc.value.report)


def test_validate_collects_several_violations():
    from wdforge.fields import FiniteField

    F5 = FiniteField(5)
    with pytest.raises(ValidationFailed) as exc:
        validate_phin(6, 1, F5, [Matrix.identity(F5, 2)], [Matrix.zeros(F5, 2)])
    text = " ".join(exc.value.report)
    assert "not prime" in text and "characteristic 0" in text


def test_validate_wrong_counts():
    with pytest.raises(ValidationFailed):
        validate_phin(5, 2, QQ, [Matrix.identity(QQ, 2)], [Matrix.zeros(QQ, 2)])


def test_transport_preserves_validity_and_composite_class():
    rng = random.Random(3)
    for _ in range(20):
        D = rand_phin(rng)
        P = [rand_small_invertible(rng, QQ, D.d) for _ in range(D.f)]
        M = D.transport(P)
        assert M.composite(0) == P[0] @ D.composite(0) @ P[0].inverse()


# -- filtrations and Hodge-Tate weights --------------------------------------------


def test_filtration_weights_zero_one():
    D = monodromy_module(QQ, 5, 1, 3)
    assert hodge_tate_weights(D, 0) == [0, 1]
    assert is_weight_zero_type(D)


def test_trivial_filtration():
    mod = _two_dim()
    D = _filtered(mod, [[(0, [(1, 0), (0, 1)]), (1, [])]])
    assert hodge_tate_weights(D, 0) == [0, 0]
    assert not is_weight_zero_type(D)


def test_weights_from_successive_drops():
    mod = PhiNModule(3, 1, 3, QQ, (Matrix.identity(QQ, 3),), (Matrix.zeros(QQ, 3),))
    D = _filtered(mod, [[(-1, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]), (0, [(1, 0, 0), (0, 1, 0)]), (2, [(1, 0, 0)]), (3, [])]])
    assert hodge_tate_weights(D, 0) == [-1, 0, 2]
    with pytest.raises(WrongRank):
        is_weight_zero_type(D)
    assert D.fil(0, 1) == _vecs(QQ, (1, 0, 0))
    assert D.fil(0, -5) == D.filtration[0][0].basis
    assert D.fil(0, 9) == ()


def test_weight_zero_type_needs_every_component():
    E = QQ
    phi = (Matrix.identity(E, 2), Matrix.identity(E, 2))
    mod = PhiNModule(3, 2, 2, E, phi, (Matrix.zeros(E, 2),) * 2)
    good = [(0, [(1, 0), (0, 1)]), (1, [(1, 0)]), (2, [])]
    bad = [(0, [(1, 0), (0, 1)]), (2, [(1, 0)]), (3, [])]
    assert is_weight_zero_type(_filtered(mod, [good, good]))
    D = _filtered(mod, [good, bad])
    assert hodge_tate_weights(D, 1) == [0, 2]
    assert not is_weight_zero_type(D)


@pytest.mark.parametrize(
    "steps, needle",
    [
        ([(0, [(1, 0)]), (1, [])], "whole space"),
        ([(0, [(1, 0), (0, 1)]), (1, [(1, 0)])], "separated"),
        ([(0, [(1, 0), (0, 1)]), (0, [(1, 0)]), (1, [])], "strictly increasing"),
        ([(0, [(1, 0), (0, 1)]), (1, [(1, 0), (2, 0)]), (2, [])], "independent"),
        ([(0, [(1, 0), (0, 1)]), (1, [(1, 0, 0)]), (2, [])], "wrong length"),
    ],
)
def test_bad_filtrations_rejected(steps, needle):
    with pytest.raises(ValidationFailed) as exc:
        _filtered(_two_dim(), [steps])
    assert any(needle in v for v in exc.value.report)


# -- weak admissibility ------------------------------------------------------------


def test_weak_admissibility_worked_example():
    rep = is_weakly_admissible(monodromy_module(QQ, 5, 1, 3))
    assert (rep.t_N, rep.t_H) == (1, 1)
    assert [s["line"] for s in rep.subobjects] == [["0", "1"]]
    assert rep.subobjects[0]["t_N"] == "0" and rep.subobjects[0]["t_H"] == "0"
    assert rep.verdict
    assert rep.to_json()["weakly_admissible"] is True


def test_weak_admissibility_wrong_total_weight():
    rep = is_weakly_admissible(monodromy_module(QQ, 5, 1, 3, j0=3))
    assert rep.t_H == 3 and rep.t_N == 1 and not rep.verdict


def test_weak_admissibility_trivial_module():
    mod = PhiNModule(5, 1, 2, QQ, (Matrix.identity(QQ, 2),), (Matrix.zeros(QQ, 2),))
    D = _filtered(mod, [[(0, [(1, 0), (0, 1)]), (1, [])]])
    rep = is_weakly_admissible(D)
    assert rep.t_N == 0 and rep.t_H == 0 and rep.verdict
    assert all(s["t_H"] == "0" for s in rep.subobjects)


def test_weak_admissibility_catches_destabilising_line():
    # crystalline diag(5, 1) with Fil^1 equal to the unit-root line e2: that line has t_N = 0 < t_H = 1
    mod = _two_dim(N=Matrix.zeros(QQ, 2))
    D = _filtered(mod, [[(0, [(1, 0), (0, 1)]), (1, [(0, 1)]), (2, [])]])
    rep = is_weakly_admissible(D)
    assert rep.t_N == rep.t_H == 1
    bad = [s for s in rep.subobjects if not s["ok"]]
    assert [s["line"] for s in bad] == [["0", "1"]]
    assert not rep.verdict
    # generic Fil^1 is fine
    D2 = _filtered(mod, [[(0, [(1, 0), (0, 1)]), (1, [(1, 1)]), (2, [])]])
    assert is_weakly_admissible(D2).verdict


def test_weak_admissibility_scalar_frobenius_uses_filtration_line():
    mod = PhiNModule(5, 1, 2, QQ, (Matrix.diag(QQ, [5, 5]),), (Matrix.zeros(QQ, 2),))
    D = _filtered(mod, [[(0, [(1, 0), (0, 1)]), (2, [(1, 1)]), (3, [])]])
    rep = is_weakly_admissible(D)
    assert rep.t_N == 2 and rep.t_H == 2
    assert any(s["line"] == ["1", "1"] and not s["ok"] for s in rep.subobjects)
    assert not rep.verdict


def test_weak_admissibility_rank_one_and_rank_limit():
    mod = PhiNModule(3, 1, 1, QQ, (Matrix(QQ, [[9]]),), (Matrix.zeros(QQ, 1),))
    D = _filtered(mod, [[(2, [(1,)]), (3, [])]])
    assert is_weakly_admissible(D).verdict
    mod3 = PhiNModule(3, 1, 3, QQ, (Matrix.identity(QQ, 3),), (Matrix.zeros(QQ, 3),))
    D3 = _filtered(mod3, [[(0, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]), (1, [])]])
    with pytest.raises(UnsupportedRank):
        is_weakly_admissible(D3)


def test_weak_admissibility_is_basis_independent():
    rng = random.Random(17)
    for _ in range(30):
        D = monodromy_module(QQ, rng.choice([2, 3, 5]), rng.choice([1, 2, -1]), rng.randint(-4, 4), rng.randint(1, 3))
        moved = D.transport([rand_small_invertible(rng, QQ, 2)])
        a, b = is_weakly_admissible(D), is_weakly_admissible(moved)
        assert (a.t_N, a.t_H, a.verdict) == (b.t_N, b.t_H, b.verdict)


def test_valuation_on_quadratic_field():
    v = Valuation(2, QSQRT2, generator=Fraction(1, 2))
    assert v(QSQRT2([0, 1])) == Fraction(1, 2)
    assert v(QSQRT2([4, 0])) == 2
    assert v(QSQRT2([1, 1])) == 0
    assert v(QSQRT2([2, 2])) == 1
    # sqrt2 is a unit at 3, so 1 + sqrt2 has two monomials of valuation 0
    with pytest.raises(NoValuationData):
        Valuation(3, QSQRT2, generator=0)(QSQRT2([1, 1]))
    with pytest.raises(NoValuationData):
        Valuation(3, QSQRT2)
    assert Valuation(5, QQ)(QQ(Fraction(50, 3))) == 2


def test_number_field_module_needs_valuation_data():
    D = monodromy_module(QSQRT2, 2, 1, QSQRT2.gen)
    with pytest.raises(NoValuationData):
        is_weakly_admissible(D)
    rep = is_weakly_admissible(D, valuation={"generator": "1/2"})
    assert rep.t_N == 1 and rep.t_H == 1 and rep.verdict


# -- monodromy modules and L-invariants ---------------------------------------------


def test_monodromy_module_example():
    rep = is_monodromy_module(monodromy_module(QQ, 5, 1, 3))
    assert rep.verdict and rep.j0 == 1 and rep.n_nonzero and rep.fil_differs_from_image


def test_monodromy_module_filtration_equal_to_image():
    mod = _two_dim()
    D = _filtered(mod, [[(0, [(1, 0), (0, 1)]), (1, [(0, 1)]), (2, [])]])
    rep = is_monodromy_module(D)
    assert rep.n_nonzero and rep.j0 == 1 and not rep.fil_differs_from_image
    assert not rep.verdict
    with pytest.raises(NotMonodromyModule):
        l_invariant(D)


def test_monodromy_module_zero_n():
    mod = _two_dim(N=Matrix.zeros(QQ, 2))
    D = _filtered(mod, [[(0, [(1, 0), (0, 1)]), (1, [(1, -3)]), (2, [])]])
    rep = is_monodromy_module(D)
    assert not rep.n_nonzero and not rep.verdict


def test_monodromy_module_without_one_dimensional_step():
    D = _filtered(_two_dim(), [[(0, [(1, 0), (0, 1)]), (1, [])]])
    rep = is_monodromy_module(D)
    assert rep.j0 is None and not rep.verdict
    assert rep.to_json()["monodromy_module"] is False


def test_l_invariant_example():
    res = l_invariant(monodromy_module(QQ, 5, 1, 3))
    assert res.value == QQ(3) and res.alpha == QQ(5) and res.j0 == 1
    assert res.to_json() == {"L": "3", "alpha": "5", "j0": 1}


def test_l_invariant_zero_when_filtration_is_eigenline():
    assert l_invariant(monodromy_module(QQ, 5, 1, 0)).value == QQ(0)


def test_l_invariant_independent_of_eigenvector_scaling():
    D = monodromy_module(QQ, 5, 1, 3)
    for c in (1, -2, Fraction(7, 3)):
        assert l_invariant(D, eigenvector=[c, 0]).value == QQ(3)
    with pytest.raises(InvalidInput):
        l_invariant(D, eigenvector=[0, 1])


def test_l_invariant_rejects_other_shapes():
    mod = propagate_phin(random.Random(1), QQ, 5, 2, Matrix.diag(QQ, [25, 1]), N21)
    full = [(0, [(1, 0), (0, 1)]), (1, [(1, -3)]), (2, [])]
    with pytest.raises(UnsupportedBase):
        l_invariant(_filtered(mod, [full, full]))
    mod1 = PhiNModule(5, 1, 1, QQ, (Matrix(QQ, [[1]]),), (Matrix.zeros(QQ, 1),))
    with pytest.raises(WrongRank):
        is_monodromy_module(_filtered(mod1, [[(0, [(1,)]), (1, [])]]))


@settings(max_examples=60, deadline=None)
@given(
    l=st.sampled_from([2, 3, 5, 7]),
    beta=st.sampled_from([1, -1, 2, Fraction(1, 3)]),
    num=st.integers(-20, 20),
    den=st.integers(1, 5),
    j0=st.integers(1, 4),
    seed=st.integers(0, 10**6),
)
def test_l_invariant_recovers_parameter_in_any_basis(l, beta, num, den, j0, seed):
    rng = random.Random(seed)
    L = Fraction(num, den)
    P = rand_small_invertible(rng, QQ, 2)
    D = monodromy_module(QQ, l, beta, L, j0, P=P)
    res = l_invariant(D)
    assert res.value == QQ(L)
    assert res.alpha == QQ(beta) * l
    assert res.j0 == j0
    # alpha is l times the eigenvalue on ker N
    y = D.module.n[0].nullspace()[0]
    image = D.module.phi[0].apply(y)
    i = next(i for i, x in enumerate(y) if not x.is_zero())
    assert res.alpha == (image[i] / y[i]) * l


def test_l_invariant_over_quadratic_field():
    L = QSQRT2([1, -1])
    rng = random.Random(9)
    D = monodromy_module(QSQRT2, 3, QSQRT2.gen, L, P=rand_small_invertible(rng, QSQRT2, 2))
    assert l_invariant(D).value == L


def test_propagated_modules_are_valid():
    rng = random.Random(12)
    for _ in range(30):
        f = rng.choice([1, 2, 3])
        F = Matrix.diag(QQ, [QQ(2) ** f, QQ(1)])
        N = Matrix(QQ, [[0, 0], [1, 0]])
        D = propagate_phin(rng, QQ, 2, f, F, N)
        assert D.composite(0) == F

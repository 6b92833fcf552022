from random import Random

import pytest

from quatpoly import (
    CentralPoly,
    LeftIdeal,
    NotCommuting,
    QI,
    QJ,
    QK,
    Quaternion,
    Verdict,
    ZeroCoordinate,
    characteristic_ideal,
    in_V,
    in_Vc,
    interpolate_vanishing,
    maximal_ideal_gens,
    orbit_closure,
    suffix_conjugate,
)
from quatpoly.exprio import parse_poly
from quatpoly.fuzzing import (
    rand_commuting_point,
    rand_point,
    rand_poly,
    rand_quaternion,
    rand_saturating_point,
)


def _ideal(*texts, n):
    return LeftIdeal(tuple(parse_poly(t, n) for t in texts))


def test_suffix_conjugate_examples():
    assert suffix_conjugate((QI, QJ), 1) == (QI, -QJ)
    assert suffix_conjugate((Quaternion(5), QJ), 1) == (Quaternion(5), QJ)
    assert suffix_conjugate((QI, Quaternion(3, 2, 0, 0)), 1) == (QI, Quaternion(3, 2, 0, 0))
    with pytest.raises(ZeroCoordinate):
        suffix_conjugate((Quaternion.zero(), QJ), 1)
    with pytest.raises(ValueError):
        suffix_conjugate((QI, QJ), 2)


def test_orbit_examples():
    result = orbit_closure((QI, QJ))
    assert result.saturated
    assert sorted(tuple(q.key() for q in p) for p in result.points) == sorted(
        tuple(q.key() for q in p) for p in [(QI, QJ), (QI, -QJ)]
    )

    commuting = orbit_closure((QI, Quaternion(3, 2, 0, 0)))
    assert commuting.saturated and len(commuting.points) == 1

    bigger = orbit_closure((QI, QJ, QK), max_depth=10, max_points=1000)
    assert bigger.saturated
    # closure property: re-applying every move stays inside the set
    keys = {tuple(q.key() for q in p) for p in bigger.points}
    for p in bigger.points:
        for i in range(1, len(p)):
            if p[i - 1].is_zero():
                continue
            image = suffix_conjugate(p, i)
            assert tuple(q.key() for q in image) in keys


def test_orbit_budget_exhaustion():
    # conjugation by 2+i rotates by an irrational angle: the orbit never closes
    p = (Quaternion(2, 1, 0, 0), QJ)
    result = orbit_closure(p, max_depth=6, max_points=4096)
    assert not result.saturated
    assert len(result.points) == 7  # one new point per depth level


def test_in_V_examples():
    I = _ideal("x1^2+1", "x2^2+1", n=2)
    assert in_V(I, (QI, QJ)) is Verdict.YES
    assert in_V(I, (QI, Quaternion(1))) is Verdict.NO
    I1 = _ideal("x1-i", n=1)
    assert in_V(I1, (QJ,)) is Verdict.NO
    assert in_V(I1, (QI,)) is Verdict.YES


def test_in_V_unknown_on_budget():
    p = (Quaternion(2, 1, 0, 0), QJ)
    assert in_V(characteristic_ideal(p), p) is Verdict.UNKNOWN


def test_in_Vc_examples():
    I = _ideal("x1^2+1", "x2^2+1", n=2)
    assert in_Vc(I, (QJ, -QJ))
    assert not in_Vc(I, (QI, QJ))  # noncommuting
    assert not in_Vc(I, (QJ, Quaternion(1)))  # generator nonzero


def test_maximal_ideal_examples():
    p = (QI, Quaternion(3, 2, 0, 0))
    I = maximal_ideal_gens(p)
    assert [str(g) for g in I.gens] == ["x1 - i", "x2 - 3 - 2i"]
    assert in_Vc(I, p)
    assert maximal_ideal_gens((Quaternion.zero(), Quaternion.zero())).gens == (
        parse_poly("x1", 2),
        parse_poly("x2", 2),
    )
    with pytest.raises(NotCommuting):
        maximal_ideal_gens((QI, QJ))


def test_maximal_ideal_left_multiples_vanish():
    rng = Random(501)
    for _ in range(40):
        n = rng.randint(1, 3)
        p = rand_commuting_point(rng, n)
        I = maximal_ideal_gens(p)
        for g in I.gens:
            for _ in range(5):
                h = rand_poly(rng, n, 3, 4)
                assert (h * g).evaluate(p).is_zero()


def test_characteristic_ideal_examples():
    I = characteristic_ideal((QI, QJ))
    assert I.gens == (parse_poly("x1^2+1", 2), parse_poly("x2^2+1", 2))
    I2 = characteristic_ideal((Quaternion(2),))
    assert I2.gens == (parse_poly("x1^2-4*x1+4", 1),)
    assert in_V(I2, (Quaternion(2),)) is Verdict.YES
    I3 = characteristic_ideal((Quaternion(1, 1, 0, 0),))
    assert I3.gens == (parse_poly("x1^2-2*x1+2", 1),)
    assert I3.gens[0].evaluate((Quaternion(1, 0, 1, 0),)).is_zero()


def test_characteristic_ideal_accepts_whole_conjugacy_class():
    rng = Random(502)
    for _ in range(25):
        n = rng.randint(2, 4)
        p = rand_saturating_point(rng, n, axis_aligned=True)
        I = characteristic_ideal(p)
        assert in_V(I, p) is Verdict.YES
        for q in orbit_closure(p).points:
            assert in_V(I, q) is Verdict.YES


def test_shift_identity_random():
    # (x_i f)(p) = f(suffix_conjugate(p, i)) * p_i, exactly
    rng = Random(503)
    for _ in range(300):
        n = rng.randint(2, 4)
        f = rand_poly(rng, n, 4, 5)
        p = rand_point(rng, n, nonzero=True)
        i = rng.randint(1, n - 1)
        lhs = (CentralPoly.variable(n, i) * f).evaluate(p)
        rhs = f.evaluate(suffix_conjugate(p, i)) * p[i - 1]
        assert lhs == rhs


def test_monomial_multiple_evaluation_matches_orbit_replay():
    """Brute-force check of the closure characterization: evaluating x^K * g
    equals evaluating g at the replayed conjugated point times the
    accumulated right factor."""
    rng = Random(504)
    for _ in range(120):
        n = rng.randint(2, 3)
        g = rand_poly(rng, n, 3, 4)
        p = rand_point(rng, n, nonzero=True)
        exps = tuple(rng.randint(0, 2) for _ in range(n))
        mono = CentralPoly.monomial(Quaternion.one(), exps)
        direct = (mono * g).evaluate(p)
        # replay: peel variables left to right, conjugating suffixes
        current = p
        factor = Quaternion.one()
        for i in range(1, n + 1):
            for _ in range(exps[i - 1]):
                factor = current[i - 1] * factor
                if i < n:
                    current = suffix_conjugate(current, i)
        assert direct == g.evaluate(current) * factor


def test_ideal_membership_follows_from_closure_vanishing():
    # if the generators vanish on a saturated closure, every left multiple
    # vanishes at the base point
    rng = Random(505)
    for _ in range(40):
        n = rng.randint(2, 3)
        p = rand_saturating_point(rng, n)
        I = characteristic_ideal(p)
        assert in_V(I, p) is Verdict.YES
        for g in I.gens:
            for _ in range(5):
                h = rand_poly(rng, n, 2, 3)
                assert (h * g).evaluate(p).is_zero()


def test_interpolate_examples():
    f = interpolate_vanishing([(QI,), (QJ,)], 2)
    assert f == parse_poly("x1^2+1", 1)

    assert interpolate_vanishing([], 0, arity=2) == parse_poly("1", 2)

    g = interpolate_vanishing([(QI, QI), (QI, -QI)], 4)
    assert g is not None and not g.is_zero()
    assert g.evaluate((QI, QI)).is_zero()
    assert g.evaluate((QI, -QI)).is_zero()


def test_interpolate_none_when_only_zero_fits():
    # one point, bound 0: constants vanishing at it must be zero
    assert interpolate_vanishing([(QI,)], 0) is None


def test_interpolate_residuals_random():
    rng = Random(506)
    for _ in range(30):
        n = rng.randint(1, 2)
        pts = [rand_point(rng, n) for _ in range(rng.randint(1, 3))]
        f = interpolate_vanishing(pts, 2)
        if f is None:
            continue
        assert not f.is_zero()
        for p in pts:
            assert f.evaluate(p).is_zero()


def test_left_ideal_validation():
    with pytest.raises(ValueError):
        LeftIdeal(())
    with pytest.raises(ValueError):
        LeftIdeal((CentralPoly.zero(1),))

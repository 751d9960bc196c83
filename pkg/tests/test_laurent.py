import random

import pytest

from alcove_kl.laurent import LaurentPoly


V = LaurentPoly.gen()
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


def rand_poly(rng, width=4, span=5, size=8):
    return LaurentPoly.from_dict(
        {rng.randint(-span, span): rng.randint(-size, size) for _ in range(width)}
    )


def test_additive_identity():
    f = LaurentPoly.from_dict({2: 3, -1: 4})
    assert f + ZERO == f
    assert f - f == ZERO
    assert not ZERO


def test_square_of_v_plus_vinv():
    f = V + V.bar()
    assert f * f == LaurentPoly.from_dict({2: 1, 0: 2, -2: 1})


def test_mul_commutes_on_samples():
    rng = random.Random(7)
    for _ in range(50):
        f, g = rand_poly(rng), rand_poly(rng)
        assert f * g == g * f


def test_ring_axioms_on_samples():
    rng = random.Random(11)
    for _ in range(50):
        f, g, h = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)


def test_bar_basics():
    assert V.bar() == LaurentPoly.gen(-1)
    f = V + V.bar()
    assert f.bar() == f


def test_bar_is_ring_involution_on_samples():
    rng = random.Random(13)
    for _ in range(50):
        f, g = rand_poly(rng), rand_poly(rng)
        assert f.bar().bar() == f
        assert (f * g).bar() == f.bar() * g.bar()
        assert (f + g).bar() == f.bar() + g.bar()


def test_eval_and_coeff():
    assert LaurentPoly.gen(5).eval_at_one() == 1
    f = ONE + 2 * V
    assert f.coeff(1) == 2
    assert f.coeff(7) == 0
    rng = random.Random(17)
    for _ in range(20):
        f, g = rand_poly(rng), rand_poly(rng)
        assert (f + g).eval_at_one() == f.eval_at_one() + g.eval_at_one()


def test_int_interop_and_pow():
    assert (V + 1) - 1 == V
    assert 3 * V == V + V + V
    assert (V + 1) ** 2 == V * V + 2 * V + 1
    assert V**0 == ONE
    with pytest.raises(ValueError):
        V ** (-1)


def test_positive_v_predicate():
    assert (V + V * V).in_positive_v()
    assert not ONE.in_positive_v()
    assert ZERO.in_positive_v()


def test_json_round_trip():
    f = LaurentPoly.from_dict({-2: 1, 0: 2, 3: -7})
    assert LaurentPoly.from_json(f.to_json()) == f
    assert f.to_json() == {"-2": 1, "0": 2, "3": -7}


def test_str():
    assert str(ZERO) == "0"
    assert str(V + V.bar()) == "v^-1 + v"
    assert str(ONE - V) == "1 - v"

import random
from fractions import Fraction

import pytest

from thetaplanes.numfield import NotIrreducible, NumberField, is_irreducible_over_q


def test_irreducibility_check():
    assert is_irreducible_over_q([-1, 1, 1])  # u^2 + u - 1
    assert is_irreducible_over_q([1, 0, 0, 0, 1])  # u^4 + 1: no mod-p witness exists
    assert not is_irreducible_over_q([-1, 0, 1])  # (u-1)(u+1)
    assert not is_irreducible_over_q([1, 2, 1])  # (u+1)^2


def test_construction_rejects_reducible():
    with pytest.raises(NotIrreducible):
        NumberField([-1, 0, 1])


def test_non_monic_defining_poly():
    # 23 u^8 + ... style fields are accepted; quick sanity on a small one
    K = NumberField([1, 3, 2, 5])  # 5u^3 + 2u^2 + 3u + 1
    u = K.gen()
    assert (5 * u**3 + 2 * u**2 + 3 * u + 1).is_zero()


def test_field_axioms_on_random_triples():
    K = NumberField([-1, 1, 1])
    rng = random.Random(5)

    def rnd():
        return K.element([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(2)])

    for _ in range(60):
        a, b, c = rnd(), rnd(), rnd()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert (a * a.inverse()) == K.one()


def test_golden_ratio_relation():
    # u^2 + u - 1 = 0, so u = (-1 + sqrt 5)/2 satisfies u^2 = 1 - u
    K = NumberField([-1, 1, 1])
    u = K.gen()
    assert u * u == K.one() - u


def test_json_roundtrip():
    K = NumberField([16, 0, 0, 1])  # u^3 + 16
    K2 = NumberField.from_json(K.to_json())
    assert K == K2

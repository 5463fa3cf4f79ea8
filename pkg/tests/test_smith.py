import random
from fractions import Fraction

from mfcat import QQ, PrimeField
from mfcat import smith
from mfcat import univariate as uni


F = Fraction


def c(*vals):
    # low-to-high coefficient list
    return [F(v) for v in vals]


def test_already_diagonal():
    m = [[c(0, 1), []], [[], c(0, 0, 1)]]  # diag(z, z^2)
    d = smith.smith_normal_form(QQ, m)
    assert d.check(m)
    assert d.diagonal == [c(0, 1), c(0, 0, 1)]


def test_divisibility_enforced():
    # diag(z^2, z) must reorganize into diag(z, z^2)
    m = [[c(0, 0, 1), []], [[], c(0, 1)]]
    d = smith.smith_normal_form(QQ, m)
    assert d.check(m)
    assert d.diagonal == [c(0, 1), c(0, 0, 1)]


def test_unit_entry_collapses():
    # [[z^2, 1], [0, z]]: entry gcd 1, determinant z^3
    m = [[c(0, 0, 1), c(1)], [[], c(0, 1)]]
    d = smith.smith_normal_form(QQ, m)
    assert d.check(m)
    assert d.diagonal[0] == [F(1)]
    assert d.diagonal[1] == c(0, 0, 0, 1)


def test_entry_gcd_nontrivial():
    # [[z^2, z], [0, z]]: entry gcd z, determinant z^3
    m = [[c(0, 0, 1), c(0, 1)], [[], c(0, 1)]]
    d = smith.smith_normal_form(QQ, m)
    assert d.check(m)
    assert d.diagonal == [c(0, 1), c(0, 0, 1)]


def test_zero_and_rectangular():
    m = [[[], []], [[], []]]
    d = smith.smith_normal_form(QQ, m)
    assert d.check(m)
    assert d.diagonal == [[], []]
    rect = [[c(0, 1), c(1), c(0, 0, 1)]]
    d2 = smith.smith_normal_form(QQ, rect)
    assert d2.check(rect)
    assert d2.diagonal == [[F(1)]]


def _random_coeffs(rng, maxdeg):
    return uni.trim(QQ, [F(rng.randrange(-3, 4)) for _ in range(maxdeg + 1)])


def test_randomized_decomposition_property():
    rng = random.Random(20260821)
    for _ in range(30):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        m = [[_random_coeffs(rng, rng.randrange(0, 3)) for _ in range(cols)] for _ in range(rows)]
        d = smith.smith_normal_form(QQ, m)
        assert d.check(m)
        # invariant factors are monic and each divides the next
        for a, b in zip(d.diagonal, d.diagonal[1:]):
            if uni.is_zero(a):
                assert uni.is_zero(b)
            else:
                assert a[-1] == 1
                assert uni.divides(QQ, a, b)


def test_randomized_prime_field():
    f = PrimeField(5)
    rng = random.Random(9)
    for _ in range(20):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        m = [
            [
                uni.trim(f, [rng.randrange(5) for _ in range(rng.randrange(1, 4))])
                for _ in range(cols)
            ]
            for _ in range(rows)
        ]
        d = smith.smith_normal_form(f, m)
        assert d.check(m)

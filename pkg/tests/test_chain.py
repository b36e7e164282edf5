from math import comb

import pytest

from ramseytower.chain import LevelChain, PowerOfTwo, parse_size
from ramseytower.errors import ResourceLimit


def test_tower_sizes_are_exact(chain42):
    assert chain42.size(2) == 6
    assert chain42.size(3) == 64
    assert chain42.size(4) == 2**64
    assert chain42.size(5) == PowerOfTwo(2**64)
    assert str(chain42.size(6)) == "2^(2^18446744073709551616)"


@pytest.mark.parametrize("m,t", [(4, 2), (9, 3), (5, 1), (12, 6)])
def test_first_level_is_binomial(m, t):
    chain = LevelChain(m, t)
    assert chain.size(2) == comb(m, t)
    assert chain.size(3) == 2 ** comb(m, t)


def test_consecutive_levels_double_exponentially(chain93):
    for level in range(2, 5):
        lower, upper = chain93.size(level), chain93.size(level + 1)
        if isinstance(upper, int):
            assert upper == 2**lower
        else:
            assert upper.exponent == lower


def test_power_of_two_compares_with_ints():
    big = PowerOfTwo(5000)
    assert 2**4999 < big
    assert 2**5000 == big
    assert 2**5000 + 1 > big
    assert 17 <= big
    assert PowerOfTwo(PowerOfTwo(64)) > big


def test_parse_size_roundtrip(chain42):
    for level in range(2, 7):
        n = chain42.size(level)
        assert parse_size(str(n)) == n


def test_dense_only_under_budget(chain42):
    assert chain42.dense_ok(3)
    assert chain42.dense_ok(4)
    assert not chain42.dense_ok(5)
    assert not LevelChain(4, 2, dense_budget=32).dense_ok(4)


def test_guards():
    with pytest.raises(ValueError):
        LevelChain(3, 3)
    with pytest.raises(ResourceLimit):
        LevelChain(4, 2, max_level=4).size(5)

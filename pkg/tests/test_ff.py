import random

import pytest

from cyclodes import ff


def test_pow_mod_examples():
    assert ff.pow_mod(2, 12, 13) == 1      # Fermat
    assert ff.pow_mod(5, 0, 13) == 1       # empty product
    assert ff.pow_mod(2, 4, 13) == 3


def test_pow_mod_rejects_bad_inputs():
    with pytest.raises(ValueError):
        ff.pow_mod(13, 2, 13)
    with pytest.raises(ValueError):
        ff.pow_mod(2, -1, 13)


def test_pow_mod_matches_builtin():
    rng = random.Random(7)
    for _ in range(200):
        q = rng.choice([13, 29, 101, 997])
        a, e = rng.randrange(q), rng.randrange(5000)
        assert ff.pow_mod(a, e, q) == pow(a, e, q)


def test_is_prime_examples():
    assert ff.is_prime(13)
    assert not ff.is_prime(85)  # 5 * 17
    assert ff.is_prime(229)


def test_is_prime_matches_trial_division():
    def trial(n):
        if n < 2:
            return False
        return all(n % d for d in range(2, int(n ** 0.5) + 1))
    for n in range(2000):
        assert ff.is_prime(n) == trial(n), n


def test_find_primitive_root_examples():
    assert ff.find_primitive_root(13) == 2
    assert ff.find_primitive_root(3) == 2
    assert ff.find_primitive_root(37) == 2


def test_find_primitive_root_rejects_composites():
    with pytest.raises(ValueError):
        ff.find_primitive_root(15)
    with pytest.raises(ValueError):
        ff.find_primitive_root(1 << 21)


def test_primitive_root_order_property():
    for q in (13, 29, 109, 997):
        g = ff.find_primitive_root(q)
        assert ff.multiplicative_order(g, q) == q - 1
        for p in set(ff._prime_factors(q - 1)):
            assert pow(g, (q - 1) // p, q) != 1


def test_index_table_examples():
    t = ff.build_index_table(13, 2)
    assert t(3) == 4      # 2**4 = 16 = 3 (mod 13)
    assert t(1) == 0
    assert t(12) == 6     # 2**6 = 64 = 12 (mod 13)
    assert t(2) == 1


def test_index_table_is_exact_log():
    for q in (13, 101, 9973):
        g = ff.find_primitive_root(q)
        t = ff.build_index_table(q, g)
        seen = set()
        for a in range(1, q):
            assert pow(g, t.ind[a], q) == a
            seen.add(t.ind[a])
        assert seen == set(range(q - 1))


def test_index_table_rejects_non_generator():
    with pytest.raises(ValueError):
        ff.build_index_table(13, 4)   # order 6
    with pytest.raises(ValueError):
        ff.build_index_table(13, 1)
    with pytest.raises(ValueError):
        ff.build_index_table(13, 0)


def test_index_of_zero_is_undefined():
    t = ff.build_index_table(13, 2)
    with pytest.raises(ValueError):
        t(0)
    with pytest.raises(ValueError):
        t(13)

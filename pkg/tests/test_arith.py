from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from oracles import order_by_iteration, phi_by_count
from splitkit.arith import (
    cyclic_subgroup,
    decompose_unit_group_pq,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    lcm,
    mul_order,
    unit_decompositions,
)
from splitkit.errors import ValidationError


@pytest.mark.parametrize(
    "n, expected",
    [(1, ()), (2, ((2, 1),)), (12, ((2, 2), (3, 1))), (1333, ((31, 1), (43, 1))),
     (2**10 * 3**4 * 101, ((2, 10), (3, 4), (101, 1)))],
)
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(min_value=1, max_value=10**7))
def test_factorize_invariants(n):
    fac = factorize(n)
    primes = [p for p, _ in fac]
    assert primes == sorted(set(primes))
    assert all(is_prime(p) and e >= 1 for p, e in fac)
    assert prod(p**e for p, e in fac) == n


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 4), (1333, 1260)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


def test_euler_phi_matches_count():
    for n in range(1, 10**4 + 1):
        assert euler_phi(n) == phi_by_count(n), n


def test_euler_phi_rejects_zero():
    with pytest.raises(ValueError):
        euler_phi(0)


@pytest.mark.parametrize(
    "g, n, expected",
    [(1, 7, 1), (6, 43, 3), (45, 31, 15), (45, 43, 14), (45, 1333, 210), (6, 1333, 6), (3, 7, 6)],
)
def test_mul_order_examples(g, n, expected):
    assert mul_order(g, n) == expected


def test_mul_order_matches_iteration():
    for n in range(2, 1001):
        for g in range(1, n):
            if gcd(g, n) == 1:
                k = mul_order(g, n)
                assert pow(g, k, n) == 1
                assert k == order_by_iteration(g, n), (g, n)


def test_mul_order_rejects_non_unit():
    with pytest.raises(ValueError):
        mul_order(6, 12)


def test_divisors_and_lcm():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert lcm(1, 2, 3, 4) == 12
    assert lcm() == 1


def test_lemma_d1_d2_property():
    # for g of maximal order in Z_mn^*, the defects d1, d2 are coprime and d1*d2 | d
    for m in range(2, 251):
        for n in range(2, 500 // m + 1):
            if gcd(m, n) != 1:
                continue
            pm, pn = euler_phi(m), euler_phi(n)
            d = gcd(pm, pn)
            target = pm * pn // d
            for g in range(1, m * n):
                if gcd(g, m * n) != 1 or mul_order(g, m * n) != target:
                    continue
                d1 = pm // mul_order(g, m)
                d2 = pn // mul_order(g, n)
                assert d % (d1 * d2) == 0 and gcd(d1, d2) == 1, (m, n, g)


def test_decompose_pinned_worked_example():
    dec = decompose_unit_group_pq(31, 43, pin=(6, 45))
    assert (dec.d, dec.d1, dec.d2) == (6, 2, 3)
    assert dec.order_g == 210


def test_decompose_z6():
    dec = decompose_unit_group_pq(2, 3)
    assert (dec.d, dec.x, dec.g) == (1, 1, 5)


def test_decompose_3_7_pin():
    dec = decompose_unit_group_pq(3, 7, pin=(13, 2))
    assert (dec.d, dec.d1, dec.d2) == (2, 1, 2)


@pytest.mark.parametrize(
    "pin, fragment",
    [((2, 45), "ord_pq(x) = d"), ((6, 2), "ord_pq(g)"), ((31, 45), "not a unit")],
)
def test_decompose_bad_pin_names_invariant(pin, fragment):
    with pytest.raises(ValidationError) as info:
        decompose_unit_group_pq(31, 43, pin=pin)
    assert fragment in str(info.value)


def test_decompose_rejects_non_primes():
    with pytest.raises(ValidationError):
        decompose_unit_group_pq(4, 7)
    with pytest.raises(ValidationError):
        decompose_unit_group_pq(5, 5)


def _primes(limit):
    return [p for p in range(2, limit) if is_prime(p)]


@pytest.mark.parametrize("p, q", [(p, q) for p in _primes(30) for q in _primes(30) if p < q])
def test_decomposition_is_direct(p, q):
    dec = decompose_unit_group_pq(p, q)
    X, Gg = cyclic_subgroup(dec.x, p * q), cyclic_subgroup(dec.g, p * q)
    assert X & Gg == {1}
    assert len(X) * len(Gg) == euler_phi(p * q)
    assert len({a * b % (p * q) for a in X for b in Gg}) == euler_phi(p * q)


def test_unit_decompositions_order_and_first():
    decs = list(unit_decompositions(3, 7))
    keys = [(d.g, d.x) for d in decs]
    assert keys == sorted(keys)
    assert decs[0] == decompose_unit_group_pq(3, 7)

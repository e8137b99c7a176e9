import pytest

from splitkit.errors import CeilingExceeded, SearchInconclusive
from splitkit.group import make_group, quotient, subgroup_closure
from splitkit.search import SearchConfig, enumerate_complete_splittings, split_exists
from splitkit.splitting import Certificate, analyze_structure, verify, verify_on


def test_split_exists_examples():
    S = split_exists({1, 2}, make_group([6]))
    assert S is not None and verify(Certificate(make_group([6]), (1, 2), S)).valid
    assert split_exists({1, 2, 4}, make_group([7]), [(0,)]) == ((1,), (3,))
    assert split_exists({1, 2, 3, 4}, make_group([12])) is None


def test_split_exists_divisibility_short_circuit():
    assert split_exists({1, 2}, make_group([7])) is None


def test_split_exists_on_quotient():
    G = make_group([12])
    # Z_12/<3> is Z_3, whose nonzero part {1, 2} is M*{1}
    Q = quotient(G, subgroup_closure([(3,)], G))
    T = split_exists((1, 2), Q, [Q.zero])
    assert T == ((1,),) and verify_on(Q, (1, 2), T, [Q.zero]).valid
    # Z_12/<4> is Z_4: three nonzero cosets cannot be tiled by pairs
    Q4 = quotient(G, subgroup_closure([(4,)], G))
    assert split_exists((1, 2), Q4, [Q4.zero]) is None


def test_split_exists_rejects_empty_m():
    with pytest.raises(ValueError):
        split_exists([], make_group([6]))


def test_budget_is_inconclusive_not_none():
    cfg = SearchConfig(time_budget=1e-9)
    with pytest.raises(SearchInconclusive):
        split_exists(range(1, 6), make_group([60]), cfg=cfg)


def test_config_validation():
    for bad in (dict(max_solutions=0), dict(time_budget=0), dict(ceiling=0)):
        with pytest.raises(ValueError):
            SearchConfig(**bad)


def test_ceiling_refusal():
    with pytest.raises(CeilingExceeded, match="ceiling"):
        list(enumerate_complete_splittings(make_group([65])))
    # an explicit ceiling lifts the refusal
    certs = enumerate_complete_splittings(make_group([67]), SearchConfig(ceiling=67, max_solutions=1))
    assert len(list(certs)) == 1


def test_enumerate_examples():
    z4 = list(enumerate_complete_splittings(make_group([4])))
    assert all(c.is_trivial for c in z4)
    z6 = list(enumerate_complete_splittings(make_group([6])))
    keys = {(c.M, c.S) for c in z6}
    assert ((1, 2), ((1,), (3,), (5,))) in keys
    assert all(analyze_structure(c).all_true for c in z6)
    trivial = list(enumerate_complete_splittings(make_group([])))
    assert [(c.M, c.S) for c in trivial] == [((1,), ((),))]


def test_enumeration_order_and_soundness():
    certs = list(enumerate_complete_splittings(make_group([12])))
    keys = [(len(c.M), c.M, c.S) for c in certs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(verify(c).valid for c in certs)


def test_max_solutions():
    certs = list(enumerate_complete_splittings(make_group([12]), SearchConfig(max_solutions=5)))
    assert len(certs) == 5


@pytest.mark.parametrize("factors", [(n,) for n in range(2, 17)] + [(2, 2), (2, 4), (2, 2, 2), (2, 6), (3, 3), (4, 4), (2, 8), (2, 2, 4)])
def test_pruned_matches_unpruned(factors):
    G = make_group(factors)
    cfg = SearchConfig(validate_pruning=True)
    pruned = {c.canonical_key() for c in enumerate_complete_splittings(G, cfg)}
    plain = {c.canonical_key() for c in enumerate_complete_splittings(G, SearchConfig(prune_with_structure=False))}
    assert pruned == plain


@pytest.mark.parametrize("n", [6, 10, 12, 15, 18, 20])
def test_split_exists_agrees_with_enumeration(n):
    G = make_group([n])
    for M in {c.M for c in enumerate_complete_splittings(G)}:
        assert split_exists(M, G) is not None

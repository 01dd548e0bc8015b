
import pytest

from hibound.alpha import SolverConfig, alpha_exact, alpha_naive
from hibound.bounds import ell_bound
from hibound.errors import InvalidParams
from hibound.hypergraph import (
    complete,
    complete_minus_one_edge,
    empty,
    is_independent,
    random_regular,
)

from conftest import random_instances


def alpha_bruteforce(h):
    """Scan all 2^n subsets as bit masks."""
    best = 0
    masks = [sum(1 << v for v in e) for e in h.edges]
    for s in range(1 << h.n):
        size = s.bit_count()
        if size > best and all(e & s != e for e in masks):
            best = size
    return best


def test_empty():
    r = alpha_exact(empty(7, 3))
    assert r.alpha == 7 and r.witness == frozenset(range(7)) and r.exhausted


def test_complete_6_3():
    r = alpha_exact(complete(6, 3))
    assert r.alpha == 2 and r.exhausted


def test_minus_one_edge_witness():
    h = complete_minus_one_edge(6, 3)
    assert alpha_bruteforce(h) == 3
    r = alpha_exact(h)
    assert r.alpha == 3
    assert r.witness == frozenset({0, 1, 2})


@pytest.mark.parametrize("k", range(2, 6))
def test_complete_alpha_is_k_minus_1(k):
    for n in range(k, 15):
        r = alpha_exact(complete(n, k))
        assert r.exhausted and r.alpha == k - 1


def test_matches_bruteforce_exhaustive(all_3uniform_on_5, all_graphs_on_5):
    for h in all_3uniform_on_5 + all_graphs_on_5:
        r = alpha_exact(h)
        assert r.alpha == alpha_bruteforce(h)
        assert is_independent(h, r.witness)


def test_matches_naive_random():
    for h in random_instances(400, 10, seed=3, ks=(2, 3, 4, 5)):
        r = alpha_exact(h)
        assert r.exhausted
        assert r.alpha == alpha_naive(h) == alpha_bruteforce(h)
        assert len(r.witness) == r.alpha
        assert is_independent(h, r.witness)


def test_ell_pruning_never_changes_alpha():
    for h in random_instances(300, 12, seed=9):
        plain = alpha_exact(h)
        pruned = alpha_exact(h, SolverConfig(use_ell_pruning=True))
        assert plain.alpha == pruned.alpha
        assert is_independent(h, pruned.witness)
        assert pruned.nodes_explored <= plain.nodes_explored + 2 * h.n + 2


def test_ell_pruning_fallback_when_seed_too_high(monkeypatch):
    # pretend the bound overshoots alpha; the solver must fall back to an unseeded search
    monkeypatch.setattr("hibound.bounds.ell_bound", lambda n, m, k: n)
    h = complete(6, 3)
    r = alpha_exact(h, SolverConfig(use_ell_pruning=True))
    assert r.alpha == 2 and r.exhausted


def test_budget_exhaustion_is_flagged():
    h = random_regular(12, 3, 5, seed=1)
    full = alpha_exact(h)
    r = alpha_exact(h, SolverConfig(node_budget=5))
    assert not r.exhausted
    assert r.alpha <= full.alpha
    assert is_independent(h, r.witness)


def test_bad_budget():
    with pytest.raises(InvalidParams):
        SolverConfig(node_budget=0)


def test_ell_below_alpha_regular():
    for n, k, d in [(6, 3, 7), (6, 4, 6), (9, 3, 5), (10, 2, 3)]:
        h = random_regular(n, k, d, seed=0)
        assert ell_bound(n, h.m, k) <= alpha_exact(h).alpha


def test_bigger_instance_completes():
    h = random_regular(24, 3, 6, seed=2)
    r = alpha_exact(h)
    assert r.exhausted and is_independent(h, r.witness)
    assert not any(is_independent(h, set(r.witness) | {v}) for v in range(24) if v not in r.witness)

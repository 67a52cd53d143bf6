import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharpbounds import (
    Graph,
    UndefinedInvariantError,
    complete,
    complete_bipartite,
    cycle,
    domination_number,
    forcing_closure,
    independence_number,
    independent_domination_number,
    matching_number,
    min_maximal_matching,
    path,
    petersen,
    standard_invariants,
    total_domination_number,
    vertex_cover_number,
    zero_forcing_number,
)

import oracles
from conftest import random_graph

SOLVER_ORACLE_PAIRS = [
    (independence_number, oracles.oracle_independence),
    (matching_number, oracles.oracle_matching),
    (domination_number, oracles.oracle_domination),
    (independent_domination_number, oracles.oracle_independent_domination),
    (min_maximal_matching, oracles.oracle_min_maximal_matching),
    (zero_forcing_number, oracles.oracle_zero_forcing),
    (vertex_cover_number, oracles.oracle_vertex_cover),
]


# ---------------------------------------------------------------------------
# Frozen values on named graphs
# ---------------------------------------------------------------------------

def test_independence_known_values():
    assert independence_number(complete(4)) == 1
    assert independence_number(complete(7)) == 1
    assert independence_number(cycle(5)) == 2
    assert independence_number(petersen()) == 4


def test_matching_known_values():
    assert matching_number(complete(1)) == 0
    assert matching_number(path(4)) == 2
    assert matching_number(petersen()) == 5


def test_domination_known_values():
    assert domination_number(complete(5)) == 1
    assert domination_number(cycle(6)) == 2
    assert domination_number(petersen()) == 3


def test_total_domination_known_values():
    assert total_domination_number(complete(2)) == 2
    assert total_domination_number(cycle(6)) == 4
    assert total_domination_number(petersen()) == 4


def test_total_domination_undefined_on_isolated():
    with pytest.raises(UndefinedInvariantError):
        total_domination_number(complete(1))
    with pytest.raises(UndefinedInvariantError):
        total_domination_number(Graph.from_edges(4, [(0, 1)]))


def test_independent_domination_known_values():
    assert independent_domination_number(complete(6)) == 1
    assert independent_domination_number(cycle(5)) == 2
    assert independent_domination_number(petersen()) == 3


def test_min_maximal_matching_known_values():
    assert min_maximal_matching(complete(1)) == 0
    assert min_maximal_matching(path(4)) == 1
    assert min_maximal_matching(cycle(6)) == 2


def test_zero_forcing_known_values():
    for n in (2, 5, 8):
        assert zero_forcing_number(path(n)) == 1
    for n in (2, 4, 6):
        assert zero_forcing_number(complete(n)) == n - 1
    assert zero_forcing_number(petersen()) == 5
    assert zero_forcing_number(complete_bipartite(3)) == 4


def test_vertex_cover_known_values():
    assert vertex_cover_number(complete(4)) == 3
    assert vertex_cover_number(cycle(5)) == 3
    assert vertex_cover_number(petersen()) == 6


def test_forcing_closure_examples():
    assert forcing_closure(path(3), {0}) == frozenset({0, 1, 2})
    assert forcing_closure(cycle(4), {0}) == frozenset({0})
    assert forcing_closure(complete(4), {0, 1}) == frozenset({0, 1})
    assert forcing_closure(path(3), set()) == frozenset()


def test_forcing_closure_rejects_bad_vertex():
    with pytest.raises(ValueError):
        forcing_closure(path(3), {5})


# ---------------------------------------------------------------------------
# Closure properties
# ---------------------------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(st.data())
def test_closure_monotone_and_idempotent(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    n = data.draw(st.integers(1, 7))
    g = random_graph(rng, n, 0.5)
    small = data.draw(st.sets(st.integers(0, n - 1)))
    extra = data.draw(st.sets(st.integers(0, n - 1)))
    big = small | extra
    closed_small = forcing_closure(g, small)
    closed_big = forcing_closure(g, big)
    assert closed_small <= closed_big
    assert forcing_closure(g, closed_small) == closed_small
    assert closed_small == oracles.oracle_closure(g, small)


# ---------------------------------------------------------------------------
# Solver equals oracle
# ---------------------------------------------------------------------------

def test_solvers_equal_oracles_on_named(named_suite):
    for g in named_suite:
        for solver, oracle in SOLVER_ORACLE_PAIRS:
            assert solver(g) == oracle(g), (g.label, solver.__name__)
        expected = oracles.oracle_total_domination(g)
        if expected is None:
            with pytest.raises(UndefinedInvariantError):
                total_domination_number(g)
        else:
            assert total_domination_number(g) == expected, g.label


def test_solvers_equal_oracles_on_random_sample(random_suite):
    # a fast subsample; the full 220-graph sweep runs in the acceptance suite
    for g in random_suite[:40]:
        for solver, oracle in SOLVER_ORACLE_PAIRS:
            assert solver(g) == oracle(g), (g.label, solver.__name__)


# ---------------------------------------------------------------------------
# Cross-solver identities
# ---------------------------------------------------------------------------

def test_classical_identities(named_suite, random_suite):
    registry = standard_invariants()
    for g in named_suite + list(random_suite)[:60]:
        n = g.order
        alpha = registry["independence_number"](g)
        beta = registry["vertex_cover_number"](g)
        mu = registry["matching_number"](g)
        mu_star = registry["min_maximal_matching"](g)
        gamma = registry["domination_number"](g)
        idom = registry["independent_domination_number"](g)
        assert alpha + beta == n
        assert gamma <= idom <= alpha
        assert mu_star <= mu
        assert mu <= beta <= 2 * mu
        try:
            gamma_t = registry["total_domination_number"](g)
        except UndefinedInvariantError:
            gamma_t = None
        if gamma_t is not None:
            assert gamma <= gamma_t <= 2 * gamma

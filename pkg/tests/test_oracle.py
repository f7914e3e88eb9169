import random

import pytest

from sympdeg.core import Representation, dim_vector, ext_dim, hom_dim, ranks_of
from sympdeg.errors import InstanceTooLarge
from sympdeg import oracle
from sympdeg.symdegen import EpsilonRep, SymmetricType


def _random_rep(rng, n):
    mult = {}
    for _ in range(rng.randint(1, 4)):
        i = rng.randint(1, n)
        j = rng.randint(i, n)
        mult[(i, j)] = mult.get((i, j), 0) + rng.randint(1, 2)
    return Representation(n, mult)


def test_exact_rank():
    assert oracle.exact_rank([[1, 2], [2, 4]]) == 1
    assert oracle.exact_rank([[1, 0], [0, 1]]) == 2
    assert oracle.exact_rank([]) == 0
    assert oracle.exact_rank([[0, 0, 0]]) == 0


def test_realize_matrices_shapes():
    rep = Representation(3, {(1, 2): 1, (2, 3): 2})
    real = oracle.realize_matrices(rep)
    assert [len(space) for space in real.spaces] == list(dim_vector(rep))
    # each map sends vertex v to v+1, so there are n-1 of them
    assert len(real.maps) == 2


def test_rank_oracle_matches_formula_exhaustive():
    segments = [(i, j) for i in range(1, 4) for j in range(i, 4)]
    for a in segments:
        for b in segments:
            rep = Representation(3, {a: 1} if a == b else {a: 1, b: 1})
            real = oracle.realize_matrices(rep)
            assert oracle.rank_seq_bruteforce(real) == ranks_of(rep)


def test_rank_oracle_matches_formula_random():
    rng = random.Random(11)
    for _ in range(40):
        rep = _random_rep(rng, rng.randint(1, 6))
        real = oracle.realize_matrices(rep)
        assert oracle.rank_seq_bruteforce(real) == ranks_of(rep)


def test_hom_ext_oracle_segment_pairs():
    """Formula vs matrix computation on every ordered pair of segments,
    small quivers."""
    for n in (2, 3):
        segments = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        for a in segments:
            for b in segments:
                ma = Representation(n, {a: 1})
                mb = Representation(n, {b: 1})
                assert hom_dim(ma, mb) == oracle.hom_dim_bruteforce(ma, mb)
                assert ext_dim(ma, mb) == oracle.ext_dim_bruteforce(ma, mb)


def test_hom_ext_oracle_random():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(2, 5)
        a, b = _random_rep(rng, n), _random_rep(rng, n)
        assert hom_dim(a, b) == oracle.hom_dim_bruteforce(a, b)
        assert ext_dim(a, b) == oracle.ext_dim_bruteforce(a, b)


def test_epsilon_form_realization():
    # the constructor runs its own compatibility checks; failure raises
    cases = [
        (SymmetricType(3, -1), {(1, 3): 2}),
        (SymmetricType(3, -1), {(1, 2): 1, (2, 3): 1, (2, 2): 2}),
        (SymmetricType(3, 1), {(2, 2): 1, (1, 3): 1}),
        (SymmetricType(4, 1), {(1, 2): 1, (3, 4): 1, (2, 3): 2}),
        (SymmetricType(4, -1), {(1, 4): 2, (2, 3): 2}),
        (SymmetricType(5, -1), {(1, 4): 1, (2, 5): 1, (3, 3): 2}),
    ]
    for sym, mult in cases:
        erep = EpsilonRep(Representation(sym.n, mult), sym)
        real, forms = oracle.realize_epsilon_form(erep)
        assert len(forms) == sym.n


def test_closure_enumerate_ordinary():
    rep = Representation(2, {(1, 2): 1})
    closure = oracle.closure_enumerate(rep, "ORDINARY")
    assert len(closure) == 2
    assert Representation(2, {(1, 1): 1, (2, 2): 1}) in closure
    assert rep in closure


def test_closure_enumerate_symmetric():
    rep = Representation(3, {(1, 3): 2})
    erep = EpsilonRep(rep, SymmetricType(3, -1))
    closure = oracle.closure_enumerate(erep, "SYMMETRIC")
    assert rep in closure
    for other in closure:
        assert dim_vector(other) == dim_vector(rep)


def test_closure_budget():
    rep = Representation(4, {(1, 4): 4})
    with pytest.raises(InstanceTooLarge):
        oracle.closure_enumerate(rep, "ORDINARY", max_total=3)

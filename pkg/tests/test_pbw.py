import itertools
import math

import pytest

from sympdeg.core import dim_vector
from sympdeg.coxeter import evaluate, is_reduced
from sympdeg.errors import Infeasible
from sympdeg.pbw import (
    CRootVector, FixedPoint, PbwSubset, build_Mi, canonical_root_keys,
    check_lemma_ui, dynkin_face_contains, dynkin_face_violations,
    ell_sequence, find_interior_point, fixed_point_chain, h_sequence,
    iprime, lagrangian_fixed_points, psi, sigma_i_map, theta, u_iprime_word,
    w_i_word, zero_root_vector,
)


def _all_subsets(n):
    for r in range(n):
        for combo in itertools.combinations(range(1, n), r):
            yield PbwSubset.make(n, combo)


def test_subset_validation():
    s = PbwSubset.make(3, [2, 1])
    assert s.i == (1, 2) and s.t == 2
    with pytest.raises(ValueError):
        PbwSubset.make(3, [3])
    with pytest.raises(ValueError):
        PbwSubset.make(0, [])


def test_build_module_anchor():
    s = PbwSubset.make(3, [1])
    erep, e = build_Mi(s)
    assert dict(erep.rep.mult) == {(1, 5): 4, (5, 5): 1, (1, 1): 1,
                                   (2, 5): 1, (1, 4): 1}
    assert dim_vector(erep.rep) == (6, 6, 6, 6, 6)
    assert e == (1, 2, 3, 4, 5)
    assert erep.sym.epsilon == -1 and erep.sym.split


def test_build_module_dims_constant():
    # the construction always fills every vertex to dimension 2n
    for n in range(1, 5):
        for s in _all_subsets(n):
            erep, _ = build_Mi(s)
            assert dim_vector(erep.rep) == (2 * n,) * (2 * n - 1)


def test_index_sequences_anchor():
    s = PbwSubset.make(3, [1])
    assert sigma_i_map(s) == (1, 3, 4)
    assert psi(s, (7, 8, 9)) == (7, 0, 8, 9)
    assert iprime(s) == (1, 4)
    assert ell_sequence(s) == (1, 3, 4, 6, 7, 8)
    assert h_sequence(s) == (0, 1, 1, 2, 2, 2)
    assert theta(s) == (1, 3, 4, 6, 7)


def test_index_sequences_empty_subset():
    s = PbwSubset.make(3, [])
    assert sigma_i_map(s) == (1, 2, 3)
    assert iprime(s) == ()
    assert ell_sequence(s) == (1, 2, 3, 4, 5, 6)
    assert h_sequence(s) == (0,) * 6
    assert psi(s, (4, 5, 6)) == (4, 5, 6)


def test_psi_wrong_length():
    with pytest.raises(ValueError):
        psi(PbwSubset.make(3, [1]), (1, 2))


def test_word_anchors():
    s = PbwSubset.make(3, [1])
    w = w_i_word(s)
    assert (w.kind, w.m) == ("C", 4)
    assert list(w.letters) == [4, 3, 4, 2, 3, 4, 1]
    assert evaluate(w).images == (-4, 1, -3, -2)
    u = u_iprime_word(s)
    assert (u.kind, u.m) == ("A", 8)
    assert list(u.letters) == [3, 4, 5, 6, 7, 2, 3, 4, 5, 2, 3, 4, 2, 3, 1]
    assert evaluate(u).images == (6, 1, 7, 5, 4, 2, 8, 3)


def test_word_anchor_empty_subset():
    s = PbwSubset.make(2, [])
    assert list(w_i_word(s).letters) == [2, 1, 2]
    assert evaluate(w_i_word(s)).images == (-2, -1)


def test_words_reduced():
    for n in range(1, 6):
        for s in _all_subsets(n):
            assert is_reduced(w_i_word(s))
            assert is_reduced(u_iprime_word(s))


def test_lemma_report_anchor():
    s = PbwSubset.make(3, [1])
    report = check_lemma_ui(s)
    rows = report["rows"]
    assert [r["clause"] for r in rows] == [1, 2, 1, 2, 1, 1]
    assert [r["predicted"] for r in rows if r["clause"] == 1] == \
        [(8,), (7,), (6,), (5,)]
    assert [r["actual"] for r in rows if r["clause"] == 1] == \
        [(6,), (5,), (8,), (3,)]
    # the first half of the j=2 prediction does hold
    assert rows[1]["predicted"][0] == rows[1]["actual"][0] == 1
    assert rows[1]["range_anomaly"] and rows[3]["range_anomaly"]
    assert report["summary"]["range_anomalies"] == 2
    assert report["summary"]["rows"] == 6


def test_lemma_report_deterministic_and_total():
    for n in range(1, 5):
        for s in _all_subsets(n):
            first = check_lemma_ui(s)
            second = check_lemma_ui(s)
            assert first == second
            assert len(first["rows"]) == 2 * n
            # every second-clause row is flagged: the high prediction
            # escapes the symbol range whenever h is positive there
            for row in first["rows"]:
                if row["clause"] == 2:
                    assert row["range_anomaly"]


def test_canonical_root_keys():
    assert len(canonical_root_keys(4)) == 16
    assert ("u", 2, 4) in canonical_root_keys(4)
    assert ("b", 1, 3) in canonical_root_keys(4)


def test_root_vector_validation():
    with pytest.raises(ValueError):
        CRootVector(2, {("u", 1, 1): 0})
    entries = {key: 0 for key in canonical_root_keys(2)}
    entries[("b", 9, 9)] = 0
    with pytest.raises(ValueError):
        CRootVector(2, entries)
    good = zero_root_vector(2)
    with pytest.raises(AttributeError):
        good.n = 3


def test_zero_vector_membership():
    for n in range(1, 5):
        for s in _all_subsets(n):
            z = zero_root_vector(n)
            assert dynkin_face_contains(s, z)
            assert dynkin_face_contains(s, z, strict=True) == (s.t == 0)


def test_interior_point_anchor_rank_two():
    d = find_interior_point(PbwSubset.make(2, [1]))
    assert d.d(("u", 1, 1)) == 0
    assert d.d(("u", 1, 2)) == -1
    assert d.d(("u", 2, 2)) == 0
    assert d.d(("b", 1, 1)) == -2


def test_interior_point_anchor_rank_three():
    d = find_interior_point(PbwSubset.make(3, [1]))
    assert d.d(("u", 2, 2)) == 0
    assert d.d(("u", 1, 2)) == -1
    assert d.d(("u", 2, 3)) == 0
    assert d.d(("u", 1, 1)) == 0


def test_interior_points_strict():
    for n in range(1, 5):
        for s in _all_subsets(n):
            d = find_interior_point(s)
            assert dynkin_face_contains(s, d, strict=True)
            assert not dynkin_face_violations(s, d, strict=True)


def test_violations_report():
    s = PbwSubset.make(3, [1])
    entries = dict(find_interior_point(s).items())
    entries[("u", 1, 3)] += 5
    bad = CRootVector(3, entries)
    rows = dynkin_face_violations(s, bad)
    assert rows
    for row in rows:
        assert row["family"] in {"bullet1", "bullet2", "bullet3",
                                 "b4", "b5", "b6"}
        assert row["lhs"] != row["rhs"] or row["relation"] != "=="
    assert not dynkin_face_contains(s, bad)


def test_mismatched_rank_rejected():
    with pytest.raises(ValueError):
        dynkin_face_contains(PbwSubset.make(3, [1]), zero_root_vector(2))


# --- fixed points -------------------------------------------------------------

def _brute_fixed_points(subset):
    """Independent enumeration: build raw subset chains over all 2n-1
    positions, constrained only by the degenerate inclusion steps, then
    filter by the pairing duality."""
    n = subset.n
    degenerate = set(iprime(subset))
    ground = range(1, 2 * n + 1)

    def extend(chains, v):
        out = []
        for chain in chains:
            prev = chain[-1] if chain else ()
            for cand in itertools.combinations(ground, v):
                src = set(prev) - ({v} if (v - 1) in degenerate else set())
                if src <= set(cand):
                    out.append(chain + (cand,))
        return out

    chains = [()]
    for v in range(1, 2 * n):
        chains = extend(chains, v)

    def dual(s):
        kill = {2 * n + 1 - j for j in s}
        return tuple(x for x in ground if x not in kill)

    result = set()
    for chain in chains:
        if all(chain[2 * n - k - 1] == dual(chain[k - 1])
               for k in range(1, n + 1)):
            result.add(chain[:n])
    return result


def test_fixed_point_counts_no_degeneration():
    for n in range(1, 5):
        points = lagrangian_fixed_points(PbwSubset.make(n, []))
        assert len(points) == 2 ** n * math.factorial(n)


def test_fixed_point_chain_duality():
    s = PbwSubset.make(2, [1])
    for fp in lagrangian_fixed_points(s):
        chain = fixed_point_chain(fp)
        assert len(chain) == 3
        assert chain[1] == fp.subsets[1]


def test_fixed_points_match_brute():
    for n in (1, 2, 3):
        for s in _all_subsets(n):
            got = {fp.subsets for fp in lagrangian_fixed_points(s)}
            want = _brute_fixed_points(s)
            assert got == want, (n, s.i)


def test_fixed_point_count_grows():
    base = len(lagrangian_fixed_points(PbwSubset.make(2, [])))
    degen = len(lagrangian_fixed_points(PbwSubset.make(2, [1])))
    assert base == 8 and degen == 10

import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedydct import catalog
from greedydct.errors import InfeasibleSequenceError
from greedydct.linalg import angle_between, exact_dct_matrix
from greedydct.search import (
    P1,
    P2,
    GreedySolver,
    PermutationSequence,
    build_search_space,
    derive_all,
    enumerate_sequences,
    greedy_solve,
)

C = exact_dct_matrix(8)


@pytest.fixture(scope="module")
def d1():
    return build_search_space(P1)


@pytest.fixture(scope="module")
def d1_solver(d1):
    return GreedySolver(C, d1)


def test_space_sizes(d1):
    assert d1.size == 6561
    assert build_search_space(P2).size == 390625
    one = build_search_space([1])
    assert one.size == 1
    assert one.vectors.tolist() == [[1] * 8]


def test_space_canonical_order(d1):
    # lexicographic over entries in declared order (0, 1, -1)
    expected = list(itertools.product(P1, repeat=8))
    assert [tuple(v) for v in d1.vectors] == expected
    assert not d1.nonzero[0] and d1.nonzero[1:].all()


def test_space_rejects_empty():
    with pytest.raises(ValueError):
        build_search_space([])


def test_sequence_counts():
    assert len(enumerate_sequences((1, 5))) == 720
    assert len(enumerate_sequences(())) == 40320
    (only,) = enumerate_sequences(range(1, 9))
    assert only.order == ()


def test_sequence_validation():
    with pytest.raises(ValueError):
        PermutationSequence((1, 2, 2, 3, 4, 5, 6, 7))
    with pytest.raises(ValueError):
        enumerate_sequences((0,))


def test_worked_orders(d1):
    forward = greedy_solve(C, PermutationSequence(tuple(range(1, 9))), d1)
    np.testing.assert_array_equal(forward, catalog.RDCT)
    backward = greedy_solve(C, PermutationSequence(tuple(range(8, 0, -1))), d1)
    np.testing.assert_array_equal(backward, catalog.T4)


def test_fixed_rows_are_trivial_patterns(d1_solver):
    seq = enumerate_sequences((1, 5))[0]
    t = d1_solver.solve(seq)
    assert t[0].tolist() == [1] * 8
    assert t[4].tolist() == [1, -1, -1, 1, 1, -1, -1, 1]


def test_ties_are_recorded(d1_solver):
    ties = []
    d1_solver.solve(PermutationSequence(tuple(range(1, 9))), ties)
    assert ties, "row 3 has two candidates at exactly the same angle"
    assert all(len(t.candidates) > 1 and t.chosen in t.candidates for t in ties)


def test_canonical_policy_resolves_to_earliest(d1):
    solver = GreedySolver(C, d1, "canonical")
    ties = []
    solver.solve(PermutationSequence(tuple(range(8, 0, -1))), ties)
    assert all(t.chosen == min(t.candidates) for t in ties)


def test_unknown_policy():
    with pytest.raises(ValueError):
        GreedySolver(C, build_search_space([1]), "random")


def check_greedy_invariants(t, seq, space):
    vecs = space.vectors.astype(np.int64)
    assert set(np.unique(t)) <= set(space.entry_set)
    assert np.all(np.any(t != 0, axis=1))
    g = t @ t.T
    assert np.array_equal(g, np.diag(np.diag(g)))
    # re-scan: no feasible vector is strictly closer to the DCT row than the chosen one
    placed = [r - 1 for r in seq.fixed_rows]
    for r in seq.order:
        k = r - 1
        feasible = np.all(vecs @ t[placed].T == 0, axis=1) & space.nonzero if placed else space.nonzero
        cos = (vecs[feasible] @ C[k]) / np.linalg.norm(vecs[feasible], axis=1)
        chosen = t[k] @ C[k] / np.linalg.norm(t[k])
        assert chosen >= cos.max() - 1e-12
        placed.append(k)


@given(st.permutations(range(1, 9)))
@settings(max_examples=40, deadline=None)
def test_greedy_invariants_full_orders(d1_solver, perm):
    seq = PermutationSequence(tuple(perm))
    t = d1_solver.solve(seq)
    check_greedy_invariants(t, seq, d1_solver.space)


@given(st.permutations([2, 3, 4, 6, 7, 8]))
@settings(max_examples=40, deadline=None)
def test_greedy_invariants_fixed(d1_solver, perm):
    seq = PermutationSequence(tuple(perm), (1, 5))
    check_greedy_invariants(d1_solver.solve(seq), seq, d1_solver.space)


def test_infeasible_sequence():
    solver = GreedySolver(C, build_search_space([1]))
    with pytest.raises(InfeasibleSequenceError) as err:
        solver.solve(PermutationSequence(tuple(range(1, 9))))
    assert err.value.row == 2


def test_derive_all_trivial():
    d = derive_all(build_search_space([1]), range(1, 9))
    assert len(d.results) == 1 and d.sequences == 1
    np.testing.assert_array_equal(d.results[0].matrix, catalog.sdct_matrix())


def test_derive_all_records_infeasible():
    d = derive_all(build_search_space([1]), (1, 2, 3, 4, 5, 6, 7))
    assert d.results == [] and len(d.infeasible) == 1


def test_derive_d1(d1):
    d = derive_all(d1)
    assert d.sequences == 720 and not d.infeasible
    assert [r.multiplicity for r in d.results] == [360, 360]
    mats = [r.matrix for r in d.results]
    np.testing.assert_array_equal(mats[0], catalog.RDCT)
    np.testing.assert_array_equal(mats[1], catalog.T4)
    for r in d.results:
        assert r.producing_orders == sorted(r.producing_orders)


def test_derive_d1_canonical_policy(d1):
    # strict earliest-candidate tie breaking cannot produce T4
    d = derive_all(d1, tie_policy="canonical")
    assert len(d.results) == 1
    np.testing.assert_array_equal(d.results[0].matrix, catalog.RDCT)


def test_derive_parallel_matches_serial(d1):
    a = derive_all(d1)
    b = derive_all(d1, workers=2)
    assert len(a.results) == len(b.results)
    for x, y in zip(a.results, b.results):
        np.testing.assert_array_equal(x.matrix, y.matrix)
        assert x.producing_orders == y.producing_orders


def test_checkpoint_resume(d1, tmp_path):
    ck = tmp_path / "ck.jsonl"
    full = derive_all(d1, checkpoint=ck)
    lines = ck.read_text().splitlines()
    assert len(lines) == 721
    # keep half the records plus a torn final line, as after a crash mid-write
    ck.write_text("\n".join(lines[:361]) + "\n" + lines[361][:10])
    resumed = derive_all(d1, checkpoint=ck)
    assert [r.matrix.tolist() for r in resumed.results] == [r.matrix.tolist() for r in full.results]
    assert [r.producing_orders for r in resumed.results] == [r.producing_orders for r in full.results]
    assert len(ck.read_text().splitlines()) == 721


def test_checkpoint_header_mismatch(d1, tmp_path):
    ck = tmp_path / "ck.jsonl"
    ck.write_text(json.dumps({"entry_set": [0, 1], "fixed": [1, 5], "tie_policy": "float"}) + "\n")
    with pytest.raises(ValueError):
        derive_all(d1, checkpoint=ck)


def test_solution_angles_beat_trivial_rows(d1):
    # every non-fixed row of the RDCT is at least as close to the DCT as its sign pattern
    for k in (1, 2, 3, 5, 6, 7):
        sign = np.sign(C[k])
        assert angle_between(catalog.RDCT[k], C[k]) <= angle_between(sign, C[k]) + 1e-12

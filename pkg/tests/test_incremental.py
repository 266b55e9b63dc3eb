"""Insert-only order: pinned examples, invariants, op-count budget."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csst import IncrementalPartialOrder, NodeId, PoError, PoErrorKind
from csst.sst import INF
from helpers import RefOrder

N = NodeId


def three_by_three_example():
    """Three chains of three events; four cross edges forming the running
    example used across the pinned tests (hand-checked answers)."""
    po = IncrementalPartialOrder(3, [3, 3, 3])
    edges = [
        (N(1, 0), N(2, 0)),
        (N(1, 2), N(0, 1)),
        (N(1, 1), N(2, 2)),
        (N(2, 2), N(1, 2)),
    ]
    for u, v in edges:
        po.insert_edge(u, v)
    return po, edges


def test_single_lookup_queries_on_running_example():
    po, _ = three_by_three_example()
    # The (1 -> 0) array ends up [inf, inf, 1].
    a10 = po.arrays[1 * 3 + 0]
    assert a10.value_at(0) == INF
    assert a10.value_at(1) == INF
    assert a10.value_at(2) == 1
    assert po.successor(N(1, 0), 2) == 0
    assert po.predecessor(N(0, 2), 1) == 2
    assert po.successor(N(1, 0), 1) == 0  # same chain: itself
    assert po.predecessor(N(0, 2), 0) == 2
    assert po.reachable(N(1, 0), N(0, 2))
    assert not po.reachable(N(0, 0), N(1, 0))


def test_insert_folds_transitive_consequences():
    # Four chains, three events each. After three prior edges, inserting
    # (1,1) -> (2,0) must create the long-range entry (0,1) ~> (3,2).
    po = IncrementalPartialOrder(4, [3, 3, 3, 3])
    po.insert_edge(N(0, 1), N(1, 0))
    po.insert_edge(N(1, 2), N(2, 1))
    po.insert_edge(N(2, 0), N(3, 2))
    assert po.successor(N(0, 1), 3) is None
    po.insert_edge(N(1, 1), N(2, 0))
    assert po.arrays[0 * 4 + 3].value_at(1) == 2
    assert po.reachable(N(0, 1), N(3, 2))
    assert po.successor(N(0, 1), 3) == 2
    assert po.predecessor(N(3, 2), 0) == 1


def test_reinsert_implied_edge_is_a_no_op():
    po, edges = three_by_three_example()
    before = [a.entries() if a else None for a in po.arrays]
    po.insert_edge(N(1, 0), N(2, 0))  # exact duplicate: already implied
    po.insert_edge(N(1, 1), N(2, 2))
    after = [a.entries() if a else None for a in po.arrays]
    assert before == after


def test_deletes_are_refused():
    po, edges = three_by_three_example()
    with pytest.raises(PoError) as e:
        po.delete_edge(N(1, 0), N(2, 0))
    assert e.value.kind == PoErrorKind.DELETE_UNSUPPORTED
    assert e.value.nodes == (N(1, 0), N(2, 0))


def test_validation_errors():
    po = IncrementalPartialOrder(2, [3, 3])
    with pytest.raises(PoError) as e:
        po.insert_edge(N(0, 3), N(1, 0))
    assert e.value.kind == PoErrorKind.OUT_OF_RANGE
    assert e.value.nodes[0] == N(0, 3)
    with pytest.raises(PoError) as e:
        po.insert_edge(N(0, 0), N(0, 1))
    assert e.value.kind == PoErrorKind.SAME_CHAIN_UPDATE
    with pytest.raises(PoError) as e:
        po.successor(N(0, 0), 5)
    assert e.value.kind == PoErrorKind.OUT_OF_RANGE


def test_cycle_guard():
    po = IncrementalPartialOrder(2, [2, 2], cycle_guard=True)
    po.insert_edge(N(0, 0), N(1, 0))
    with pytest.raises(PoError) as e:
        po.insert_edge(N(1, 1), N(0, 0))
    assert e.value.kind == PoErrorKind.CYCLE_DETECTED
    # Without the guard the same insert is accepted silently.
    po2 = IncrementalPartialOrder(2, [2, 2])
    po2.insert_edge(N(0, 0), N(1, 0))
    po2.insert_edge(N(1, 1), N(0, 0))


def test_grow_extends_a_chain():
    po = IncrementalPartialOrder(2, [2, 2])
    po.insert_edge(N(0, 1), N(1, 0))
    po.grow(0, 6)
    po.insert_edge(N(0, 4), N(1, 1))
    assert po.successor(N(0, 4), 1) == 1
    assert po.successor(N(0, 1), 1) == 0
    assert po.reachable(N(0, 0), N(1, 1))
    with pytest.raises(PoError):
        po.insert_edge(N(0, 6), N(1, 0))


class _CountingArray:
    def __init__(self, inner, box):
        self._inner = inner
        self._box = box

    def __getattr__(self, name):
        if name in ("update", "min_suffix", "argleq"):
            box = self._box
            fn = getattr(self._inner, name)

            def counted(*a):
                box[0] += 1
                return fn(*a)

            return counted
        return getattr(self._inner, name)


@settings(max_examples=60, deadline=None)
@given(
    k=st.integers(2, 6),
    data=st.data(),
)
def test_insert_cost_within_3k_squared(k, data):
    ell = 6
    box = [0]
    po = IncrementalPartialOrder(k, [ell] * k)
    po.arrays = [
        _CountingArray(a, box) if a is not None else None for a in po.arrays
    ]
    ref = RefOrder(k, [ell] * k)
    for _ in range(12):
        t1 = data.draw(st.integers(0, k - 1))
        t2 = data.draw(st.integers(0, k - 1))
        if t1 == t2:
            continue
        j1 = data.draw(st.integers(0, ell - 1))
        j2 = data.draw(st.integers(0, ell - 1))
        if ref.reachable((t2, j2), (t1, j1)):
            continue  # keep it a DAG
        if ((t1, j1, t2, j2)) in ref.edges:
            continue
        ref.insert_edge((t1, j1), (t2, j2))
        box[0] = 0
        po.insert_edge(N(t1, j1), N(t2, j2))
        assert box[0] <= 3 * k * k


def _random_dag_workload(data, k, max_len, n_edges, allow_grow=False):
    lengths = [data.draw(st.integers(1, max_len)) for _ in range(k)]
    ref = RefOrder(k, lengths)
    edges = []
    for _ in range(n_edges):
        t1 = data.draw(st.integers(0, k - 1))
        t2 = data.draw(st.integers(0, k - 1))
        if t1 == t2:
            continue
        j1 = data.draw(st.integers(0, ref.lengths[t1] - 1))
        j2 = data.draw(st.integers(0, ref.lengths[t2] - 1))
        if (t1, j1, t2, j2) in ref.edges:
            continue
        if ref.reachable((t2, j2), (t1, j1)):
            continue
        ref.insert_edge((t1, j1), (t2, j2))
        edges.append((t1, j1, t2, j2))
        if allow_grow and data.draw(st.booleans()) and data.draw(st.booleans()):
            t = data.draw(st.integers(0, k - 1))
            ref.grow(t, ref.lengths[t] + data.draw(st.integers(1, 3)))
    return ref, edges


def _assert_all_queries_agree(po, ref):
    k = ref.k
    for t1 in range(k):
        for j1 in range(ref.lengths[t1]):
            for t2 in range(k):
                u = N(t1, j1)
                assert po.successor(u, t2) == ref.successor((t1, j1), t2)
                assert po.predecessor(u, t2) == ref.predecessor((t1, j1), t2)
                for j2 in range(ref.lengths[t2]):
                    got = po.reachable(u, N(t2, j2))
                    assert got == ref.reachable((t1, j1), (t2, j2))


@settings(max_examples=80, deadline=None)
@given(k=st.integers(2, 4), data=st.data())
def test_agrees_with_naive_order(k, data):
    ref, edges = _random_dag_workload(data, k, max_len=6, n_edges=10)
    po = IncrementalPartialOrder(k, [1] * k)
    # Replay geometry through grow to exercise it alongside the inserts.
    for t in range(k):
        po.grow(t, ref.lengths[t])
    for t1, j1, t2, j2 in edges:
        po.insert_edge(N(t1, j1), N(t2, j2))
    _assert_all_queries_agree(po, ref)


@settings(max_examples=60, deadline=None)
@given(k=st.integers(2, 4), data=st.data(), seed=st.randoms(use_true_random=False))
def test_final_answers_independent_of_insert_order(k, data, seed):
    ref, edges = _random_dag_workload(data, k, max_len=5, n_edges=8)
    po1 = IncrementalPartialOrder(k, ref.lengths)
    for t1, j1, t2, j2 in edges:
        po1.insert_edge(N(t1, j1), N(t2, j2))
    shuffled = edges[:]
    seed.shuffle(shuffled)
    po2 = IncrementalPartialOrder(k, ref.lengths)
    for t1, j1, t2, j2 in shuffled:
        po2.insert_edge(N(t1, j1), N(t2, j2))
    for t1 in range(k):
        for j1 in range(ref.lengths[t1]):
            for t2 in range(k):
                u = N(t1, j1)
                assert po1.successor(u, t2) == po2.successor(u, t2)
                assert po1.predecessor(u, t2) == po2.predecessor(u, t2)

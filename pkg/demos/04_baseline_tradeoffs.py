"""Side-by-side with the baselines on one random insert-only workload:
watermark clocks answer queries in O(1) but pay heavily per insert, the
plain graph pays per query, dense trees pay in memory. Node counts and
rough per-op times for each."""

import random
import time

from csst import (
    DynamicPartialOrder,
    GraphPO,
    IncrementalPartialOrder,
    NodeId,
    PlainStPO,
    VectorClockPO,
)

K, ELL, N_EDGES, N_QUERIES = 6, 2000, 300, 2000


def build_workload(rng):
    probe = GraphPO(K, [ELL] * K)
    edges = []
    while len(edges) < N_EDGES:
        t1 = rng.randrange(K)
        t2 = rng.randrange(K - 1)
        if t2 >= t1:
            t2 += 1
        u = NodeId(t1, rng.randrange(ELL))
        v = NodeId(t2, rng.randrange(ELL))
        if probe.reachable(u, v) or probe.reachable(v, u):
            continue
        probe.insert_edge(u, v)
        edges.append((u, v))
    queries = []
    for _ in range(N_QUERIES):
        t1 = rng.randrange(K)
        t2 = rng.randrange(K - 1)
        if t2 >= t1:
            t2 += 1
        queries.append((NodeId(t1, rng.randrange(ELL)), NodeId(t2, rng.randrange(ELL))))
    return edges, queries


def main():
    rng = random.Random(404)
    edges, queries = build_workload(rng)
    print(f"{K} chains of {ELL}, {len(edges)} edges, {len(queries)} reachability queries\n")
    print(f"{'backend':<22}{'insert us':>10}{'query us':>10}{'tree nodes':>12}")
    builders = [
        ("sparse incremental", IncrementalPartialOrder),
        ("sparse dynamic", DynamicPartialOrder),
        ("watermark clocks", VectorClockPO),
        ("plain graph", GraphPO),
        ("dense trees", PlainStPO),
    ]
    for label, cls in builders:
        po = cls(K, [ELL] * K)
        t0 = time.perf_counter()
        for u, v in edges:
            po.insert_edge(u, v)
        t1 = time.perf_counter()
        for u, v in queries:
            po.reachable(u, v)
        t2 = time.perf_counter()
        nodes = po.node_count() if hasattr(po, "node_count") else "-"
        ins_us = (t1 - t0) / len(edges) * 1e6
        q_us = (t2 - t1) / len(queries) * 1e6
        print(f"{label:<22}{ins_us:>10.1f}{q_us:>10.1f}{nodes!s:>12}")
    print("\ndense trees allocate for every slot; sparse arrays only where edges land.")


if __name__ == "__main__":
    main()

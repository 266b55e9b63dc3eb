"""Reference order implementations the tree-based ones are raced against.

VectorClockPO   insert-only; per-event clock rows with lazy dense prefixes
GraphPO         fully dynamic; explicit adjacency + pruned BFS per query
PlainStPO       insert-only; the same closed-array scheme as the sparse
                version but on fully materialized dense segment trees

All three answer exactly the same queries as the tree-based orders; they
differ in cost, never in answers (the differential fuzzer enforces that).
"""

from __future__ import annotations

from bisect import bisect_left

from .core import (
    NodeId,
    PartialOrderBase,
    delete_unsupported,
    duplicate_edge,
    missing_edge,
)
from .sst import INF


class VectorClockPO(PartialOrderBase):
    """Vector clocks with a dense-prefix watermark per chain.

    Row (t, i) stores, per chain s, the largest index j with (s, j)
    reaching (t, i) (-1 when none). Rows exist only for the prefix
    [0, watermark); events past the watermark have no cross in-edges yet,
    so their implicit clock is the last materialized row plus their own
    chain entry. reachable() is then a single row lookup.

    insert_edge materializes BOTH endpoint chains up to the endpoint: the
    source event must own a row too, so that later clock growth below it
    re-propagates over its recorded out-edges.

    Edges cannot be deleted. Re-inserting an already-implied ordering
    changes no row (propagation stops on dominance immediately).
    """

    def __init__(self, k: int, lengths):
        super().__init__(k, lengths)
        self._rows: list[list[list[int]]] = [[] for _ in range(k)]
        # Recorded cross edges by source: _out[t][i] = [(t2, j2), ...]
        self._out: list[dict[int, list[tuple[int, int]]]] = [dict() for _ in range(k)]
        self.row_joins = 0  # counts row-merge operations (propagation work)

    # -- clock plumbing ------------------------------------------------------

    def _materialize(self, t: int, i: int) -> None:
        rows = self._rows[t]
        k = self.k
        while len(rows) <= i:
            j = len(rows)
            if j == 0:
                row = [-1] * k
            else:
                row = rows[j - 1].copy()
            row[t] = j
            rows.append(row)

    def _entry(self, t: int, i: int, s: int) -> int:
        """clock(t, i)[s] without materializing anything."""
        if s == t:
            return i
        rows = self._rows[t]
        if not rows:
            return -1
        if i < len(rows):
            return rows[i][s]
        return rows[-1][s]

    # -- updates ---------------------------------------------------------------

    def _insert_edge(self, u: NodeId, v: NodeId) -> None:
        t1, j1 = u
        t2, j2 = v
        self._materialize(t1, j1)
        self._materialize(t2, j2)
        outs = self._out[t1].setdefault(j1, [])
        if v not in outs:
            outs.append((t2, j2))
        src = self._rows[t1][j1]
        self._join_and_propagate(src, t2, j2)

    def _join_and_propagate(self, src_row: list[int], t: int, i: int) -> None:
        work = [(src_row, t, i)]
        rows = self._rows
        out = self._out
        k = self.k
        while work:
            src, t, i = work.pop()
            dst = rows[t][i]
            self.row_joins += 1
            changed = False
            for s in range(k):
                if src[s] > dst[s]:
                    dst[s] = src[s]
                    changed = True
            if not changed:
                continue  # dominance: nothing downstream can change either
            if i + 1 < len(rows[t]):
                work.append((dst, t, i + 1))
            hits = out[t].get(i)
            if hits:
                for t2, j2 in hits:
                    work.append((dst, t2, j2))

    def _delete_edge(self, u: NodeId, v: NodeId) -> None:
        raise delete_unsupported(u, v)

    # -- queries ---------------------------------------------------------------

    def reachable(self, u: NodeId, v: NodeId) -> bool:
        self._check_node(u)
        self._check_node(v)
        if u.chain == v.chain:
            return u.index <= v.index
        return self._entry(v.chain, v.index, u.chain) >= u.index

    def _successor(self, u: NodeId, t2: int):
        # clock(t2, j)[u.chain] is nondecreasing in j: binary-search the
        # materialized prefix for the first row dominating u.
        t1, j1 = u
        rows = self._rows[t2]
        if not rows or rows[-1][t1] < j1:
            return None
        return bisect_left(rows, j1, key=lambda row: row[t1])

    def _predecessor(self, u: NodeId, t1: int):
        r = self._entry(u.chain, u.index, t1)
        return None if r < 0 else r

    # -- introspection -----------------------------------------------------------

    def materialized_rows(self) -> int:
        return sum(len(r) for r in self._rows)


class GraphPO(PartialOrderBase):
    """Adjacency lists plus breadth-first search, one search per query.

    The search walks chain suffixes in covered runs: per chain it remembers
    the lowest index already expanded and never walks an index twice, which
    is the usual dominance pruning for chain DAGs.
    """

    def __init__(self, k: int, lengths):
        super().__init__(k, lengths)
        self._out: list[dict[int, list[tuple[int, int]]]] = [dict() for _ in range(k)]
        self._rev: list[dict[int, list[tuple[int, int]]]] = [dict() for _ in range(k)]

    def _insert_edge(self, u: NodeId, v: NodeId) -> None:
        t1, j1 = u
        t2, j2 = v
        outs = self._out[t1].setdefault(j1, [])
        if (t2, j2) in outs:
            raise duplicate_edge(u, v)
        outs.append((t2, j2))
        self._rev[t2].setdefault(j2, []).append((t1, j1))

    def _delete_edge(self, u: NodeId, v: NodeId) -> None:
        t1, j1 = u
        t2, j2 = v
        outs = self._out[t1].get(j1)
        if not outs or (t2, j2) not in outs:
            raise missing_edge(u, v)
        outs.remove((t2, j2))
        if not outs:
            del self._out[t1][j1]
        revs = self._rev[t2][j2]
        revs.remove((t1, j1))
        if not revs:
            del self._rev[t2][j2]

    # -- searches --------------------------------------------------------------

    def _flood_fwd(self, t0: int, i0: int, tt: int = -1, tj: int = -1):
        """covered[t] = least index of chain t reachable from (t0, i0).

        With tt >= 0, returns True as soon as (tt, <= tj) is reached,
        False after exhaustion; otherwise returns the covered list.
        """
        k = self.k
        covered = [INF] * k
        lengths = self.lengths
        out = self._out
        stack = [(t0, i0)]
        while stack:
            t, i = stack.pop()
            hi = covered[t]
            if i >= hi:
                continue
            covered[t] = i
            if tt >= 0 and t == tt and i <= tj:
                return True
            outs = out[t]
            end = lengths[t] if hi == INF else hi
            if outs:
                for j in range(i, end):
                    hits = outs.get(j)
                    if hits:
                        for t2, j2 in hits:
                            if j2 < covered[t2]:
                                stack.append((t2, j2))
        return False if tt >= 0 else covered

    def _flood_bwd(self, t0: int, i0: int):
        """covered[t] = greatest index of chain t reaching (t0, i0), or -1."""
        k = self.k
        covered = [-1] * k
        rev = self._rev
        stack = [(t0, i0)]
        while stack:
            t, i = stack.pop()
            lo = covered[t]
            if i <= lo:
                continue
            covered[t] = i
            revs = rev[t]
            if revs:
                for j in range(i, lo, -1):
                    hits = revs.get(j)
                    if hits:
                        for t1, j1 in hits:
                            if j1 > covered[t1]:
                                stack.append((t1, j1))
        return covered

    def reachable(self, u: NodeId, v: NodeId) -> bool:
        self._check_node(u)
        self._check_node(v)
        if u.chain == v.chain:
            return u.index <= v.index
        return self._flood_fwd(u.chain, u.index, v.chain, v.index)

    def _successor(self, u: NodeId, t2: int):
        r = self._flood_fwd(u.chain, u.index)[t2]
        return None if r == INF else r

    def _predecessor(self, u: NodeId, t1: int):
        r = self._flood_bwd(u.chain, u.index)[t1]
        return None if r < 0 else r


class PlainStPO(PartialOrderBase):
    """Transitively closed chain-pair arrays on dense segment trees.

    Same closure discipline as the sparse insert-only order, written
    independently on fully materialized trees (every index owns a leaf, all
    interior nodes exist up front). Answers are identical; the footprint is
    what differs, which node_count() exposes.
    """

    def __init__(self, k: int, lengths):
        super().__init__(k, lengths)
        self._span = [1] * k
        for t in range(k):
            while self._span[t] < max(lengths[t], 1):
                self._span[t] *= 2
        # trees[t1 * k + t2]: heap-layout min-tree of size 2 * span(t1).
        self.trees: list[list | None] = [
            [INF] * (2 * self._span[t1]) if t1 != t2 else None
            for t1 in range(k)
            for t2 in range(k)
        ]

    # -- dense tree primitives ---------------------------------------------------

    @staticmethod
    def _set(tree: list, span: int, i: int, v) -> None:
        n = span + i
        tree[n] = v
        n >>= 1
        while n:
            l = tree[2 * n]
            r = tree[2 * n + 1]
            m = l if l <= r else r
            if tree[n] == m:
                break
            tree[n] = m
            n >>= 1

    @staticmethod
    def _min_from(tree: list, span: int, i: int):
        res = INF
        lo = span + i
        hi = 2 * span
        while lo < hi:
            if lo & 1:
                if tree[lo] < res:
                    res = tree[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                if tree[hi] < res:
                    res = tree[hi]
            lo >>= 1
            hi >>= 1
        return res

    @staticmethod
    def _argleq(tree: list, span: int, v):
        if tree[1] > v:
            return None
        n = 1
        while n < span:
            r = 2 * n + 1
            n = r if tree[r] <= v else 2 * n
        return n - span

    # -- updates ---------------------------------------------------------------

    def _insert_edge(self, u: NodeId, v: NodeId) -> None:
        k = self.k
        t1, j1 = u
        t2, j2 = v
        trees = self.trees
        span = self._span
        preds = [0] * k
        succs = [0] * k
        for t in range(k):
            if t == t1:
                preds[t] = j1
            else:
                p = self._argleq(trees[t * k + t1], span[t], j1)
                preds[t] = -1 if p is None else p
            if t == t2:
                succs[t] = j2
            else:
                succs[t] = self._min_from(trees[t2 * k + t], span[t2], j2)
        for ta in range(k):
            ja = preds[ta]
            if ja < 0:
                continue
            for tb in range(k):
                if tb == ta:
                    continue
                jb = succs[tb]
                if jb == INF:
                    continue
                tree = trees[ta * k + tb]
                if self._min_from(tree, span[ta], ja) > jb:
                    self._set(tree, span[ta], ja, jb)

    def _delete_edge(self, u: NodeId, v: NodeId) -> None:
        raise delete_unsupported(u, v)

    def _grow(self, chain: int, new_len: int) -> None:
        span = self._span[chain]
        if new_len <= span:
            return
        new_span = span
        while new_span < new_len:
            new_span *= 2
        k = self.k
        for t in range(k):
            if t == chain:
                continue
            old = self.trees[chain * k + t]
            tree = [INF] * (2 * new_span)
            tree[new_span : new_span + span] = old[span : 2 * span]
            for n in range(new_span - 1, 0, -1):
                l = tree[2 * n]
                r = tree[2 * n + 1]
                tree[n] = l if l <= r else r
            self.trees[chain * k + t] = tree
        self._span[chain] = new_span

    # -- queries ---------------------------------------------------------------

    def _successor(self, u: NodeId, t2: int):
        r = self._min_from(self.trees[u.chain * self.k + t2], self._span[u.chain], u.index)
        return None if r == INF else r

    def _predecessor(self, u: NodeId, t1: int):
        return self._argleq(self.trees[t1 * self.k + u.chain], self._span[t1], u.index)

    # -- introspection -----------------------------------------------------------

    def node_count(self) -> int:
        """Allocated tree nodes: every dense tree carries 2*span - 1."""
        total = 0
        k = self.k
        for t1 in range(k):
            for t2 in range(k):
                if t1 != t2:
                    total += 2 * self._span[t1] - 1
        return total

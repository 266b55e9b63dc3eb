"""Sparse segment tree over the suffix minima of a mostly-empty array.

Maintains A: [0, capacity) -> {0, 1, 2, ...} u {inf} under point updates and
two queries:

    min_suffix(i) = min A[i:]
    argleq(v)     = max { i : A[i] <= v }   (None when no entry qualifies)

Entries with value inf are absent. The tree is lazy and path-compressed:
nodes exist only where entries do, single-child chains are collapsed, and
subtrees whose index range is at most the block threshold are stored as flat
slot arrays instead of deeper nodes. An empty array owns zero nodes.

Every node covers an aligned power-of-two index range and carries the pair
(min, pos) where min is the smallest entry value stored in its subtree and
pos the largest index attaining it; each entry is owned by exactly one node,
so a node's pair never duplicates an ancestor's. Both queries descend one
root-to-leaf path and can stop early as soon as the carried pair already
decides the answer, which is what makes point operations O(min(log n, d))
for d live entries.

Instances are single-writer: no concurrent mutation, and no concurrent
queries during a mutation.
"""

from __future__ import annotations

import math

INF = math.inf


def _pow2_at_least(n: int) -> int:
    p = 1
    while p < n:
        p *= 2
    return p


def _pow2_at_most(n: int) -> int:
    if n < 1:
        raise ValueError("block threshold must be >= 1")
    p = 1
    while p * 2 <= n:
        p *= 2
    return p


class SstNode:
    """One tree node covering the aligned index range [start, end].

    Regular nodes hold a single (min, pos) pair plus up to two children.
    Block nodes (block is not None) hold one slot per covered index and use
    (min, pos) as a cache of their best slot; they never have children.
    """

    __slots__ = ("start", "end", "min", "pos", "left", "right", "block")

    def __init__(self, start: int, end: int, mn, pos: int):
        self.start = start
        self.end = end
        self.min = mn
        self.pos = pos
        self.left: SstNode | None = None
        self.right: SstNode | None = None
        self.block: list | None = None


def _better(mn_a, pos_a: int, mn_b, pos_b: int) -> bool:
    """True when pair a should sit above pair b: smaller value wins, equal
    values prefer the larger index (so min_suffix can stop early as often
    as possible)."""
    return mn_a < mn_b or (mn_a == mn_b and pos_a > pos_b)


class SuffixMinArray:
    """Sparse suffix-minima structure; see module docstring."""

    __slots__ = ("capacity", "block_threshold", "_span", "_B", "_root", "_density")

    def __init__(self, capacity: int, block_threshold: int = 32):
        if capacity < 0:
            raise ValueError("capacity must be >= 0")
        self.capacity = capacity
        self.block_threshold = block_threshold
        self._B = _pow2_at_most(block_threshold)
        self._span = _pow2_at_least(max(capacity, 1))
        self._root: SstNode | None = None
        self._density = 0

    # -- queries -------------------------------------------------------------

    def min_suffix(self, i: int):
        """min A[i:]; inf when the suffix holds no entry."""
        if not 0 <= i < max(self.capacity, 1):
            raise IndexError(f"index {i} out of range 0..{self.capacity - 1}")
        res = INF
        nd = self._root
        while nd is not None and i <= nd.end:
            if nd.pos >= i:
                # The carried minimum lies inside the suffix; nothing in
                # this subtree can beat it.
                m = nd.min
                return m if m < res else res
            if nd.block is not None:
                blk = nd.block
                lo = i - nd.start if i > nd.start else 0
                for off in range(lo, len(blk)):
                    v = blk[off]
                    if v < res:
                        res = v
                return res
            mid = nd.start + (nd.end - nd.start) // 2
            if i <= mid:
                r = nd.right
                if r is not None and r.min < res:
                    res = r.min
                nd = nd.left
            else:
                nd = nd.right
        return res

    def argleq(self, v) -> int | None:
        """Largest index whose entry is <= v; None when no entry qualifies."""
        best = -1
        nd = self._root
        while nd is not None and nd.min <= v:
            if nd.block is not None:
                blk = nd.block
                for off in range(len(blk) - 1, -1, -1):
                    u = blk[off]
                    if u != INF and u <= v:
                        cand = nd.start + off
                        if cand > best:
                            best = cand
                        break
                break
            if nd.pos > best:
                best = nd.pos
            l, r = nd.left, nd.right
            if nd.pos >= (l.end if l is not None else -1) and nd.pos >= (
                r.end if r is not None else -1
            ):
                # The carried pair sits at or beyond every stored index in
                # this subtree, so it is already the rightmost candidate.
                break
            if r is not None and r.min <= v:
                nd = r
            else:
                nd = l
        return None if best < 0 else best

    def density(self) -> int:
        """Number of live (non-inf) entries."""
        return self._density

    def height(self) -> int:
        """Maximum node depth in edges; 0 for an empty or single-node tree."""
        if self._root is None:
            return 0
        h = 0
        stack = [(self._root, 0)]
        while stack:
            nd, d = stack.pop()
            if d > h:
                h = d
            if nd.left is not None:
                stack.append((nd.left, d + 1))
            if nd.right is not None:
                stack.append((nd.right, d + 1))
        return h

    def node_count(self) -> int:
        """Number of allocated nodes; a block counts as one node."""
        if self._root is None:
            return 0
        n = 0
        stack = [self._root]
        while stack:
            nd = stack.pop()
            n += 1
            if nd.left is not None:
                stack.append(nd.left)
            if nd.right is not None:
                stack.append(nd.right)
        return n

    def value_at(self, i: int):
        """Current entry at index i, inf when absent (point lookup)."""
        if not 0 <= i < self.capacity:
            raise IndexError(f"index {i} out of range 0..{self.capacity - 1}")
        nd = self._root
        while nd is not None and nd.start <= i <= nd.end:
            if nd.block is not None:
                return nd.block[i - nd.start]
            if nd.pos == i:
                return nd.min
            mid = nd.start + (nd.end - nd.start) // 2
            nd = nd.left if i <= mid else nd.right
        return INF

    def entries(self) -> dict[int, object]:
        """Snapshot {index: value} of all live entries (test/debug aid)."""
        out: dict[int, object] = {}
        if self._root is None:
            return out
        stack = [self._root]
        while stack:
            nd = stack.pop()
            if nd.block is not None:
                for off, v in enumerate(nd.block):
                    if v != INF:
                        out[nd.start + off] = v
            else:
                out[nd.pos] = nd.min
                if nd.left is not None:
                    stack.append(nd.left)
                if nd.right is not None:
                    stack.append(nd.right)
        return out

    # -- updates -------------------------------------------------------------

    def update(self, i: int, v) -> None:
        """Set A[i] = v; v = inf removes the entry."""
        if not 0 <= i < self.capacity:
            raise IndexError(f"index {i} out of range 0..{self.capacity - 1}")
        if v != INF and not (isinstance(v, int) and v >= 0):
            raise ValueError("value must be a nonnegative int or inf")
        if self._delete_entry(i):
            self._density -= 1
        if v == INF:
            return
        self._density += 1
        if self._root is None:
            span = self._span
            if span <= self._B:
                nd = SstNode(0, span - 1, v, i)
                nd.block = [INF] * span
                nd.block[i] = v
            else:
                nd = SstNode(0, span - 1, v, i)
            self._root = nd
            return
        self._insert(v, i)

    def grow(self, new_capacity: int) -> None:
        """Raise capacity; existing entries keep their indices and values."""
        if new_capacity < self.capacity:
            raise ValueError("grow cannot shrink")
        if new_capacity <= self._span:
            self.capacity = new_capacity
            return
        span = self._span
        B = self._B
        root = self._root
        while span < new_capacity:
            if root is None:
                span *= 2
            elif root.block is not None and span * 2 <= B:
                root.block.extend([INF] * span)
                root.end = span * 2 - 1
                span *= 2
            elif root.block is not None:
                # Block roots here have size exactly B; demote under a fresh
                # regular root that takes over the block's best pair.
                new_root = SstNode(0, span * 2 - 1, root.min, root.pos)
                root.block[root.pos - root.start] = INF
                if self._recache_block(root):
                    new_root.left = None
                else:
                    new_root.left = root
                root = new_root
                span *= 2
            else:
                new_root = SstNode(0, span * 2 - 1, root.min, root.pos)
                if not self._refill(root):
                    new_root.left = root
                root = new_root
                span *= 2
        self._root = root
        self._span = span
        self.capacity = new_capacity

    # -- internals -------------------------------------------------------------

    def _recache_block(self, nd: SstNode) -> bool:
        """Refresh a block's (min, pos) cache; True when the block is empty."""
        m = INF
        p = -1
        for off, v in enumerate(nd.block):
            if v != INF and v <= m:
                m = v
                p = off
        if p < 0:
            return True
        nd.min = m
        nd.pos = nd.start + p
        return False

    def _new_block_for(self, pos: int, val) -> SstNode:
        B = self._B
        lo = (pos // B) * B
        nd = SstNode(lo, lo + B - 1, val, pos)
        nd.block = [INF] * B
        nd.block[pos - lo] = val
        return nd

    def _insert(self, v, i: int) -> None:
        """Place a fresh entry; the root exists and covers the whole span."""
        nd = self._root
        val, pos = v, i
        while True:
            if nd.block is not None:
                nd.block[pos - nd.start] = val
                if _better(val, pos, nd.min, nd.pos):
                    nd.min, nd.pos = val, pos
                return
            if _better(val, pos, nd.min, nd.pos):
                nd.min, nd.pos, val, pos = val, pos, nd.min, nd.pos
            mid = nd.start + (nd.end - nd.start) // 2
            if pos <= mid:
                child = nd.left
                if child is None:
                    nd.left = self._new_block_for(pos, val)
                    return
                if child.start <= pos <= child.end:
                    nd = child
                    continue
                nd.left = self._merge_under_lca(child, val, pos)
                return
            else:
                child = nd.right
                if child is None:
                    nd.right = self._new_block_for(pos, val)
                    return
                if child.start <= pos <= child.end:
                    nd = child
                    continue
                nd.right = self._merge_under_lca(child, val, pos)
                return

    def _merge_under_lca(self, child: SstNode, val, pos: int) -> SstNode:
        """Glue a compressed child and a new entry under their lowest common
        aligned range; returns the new subtree root."""
        lo = child.start
        size = child.end - child.start + 1
        while not (lo <= pos <= lo + size - 1):
            size *= 2
            lo = (lo // size) * size
        # Minimality of the doubling puts child and pos in different halves,
        # and size >= 2 * block size, so the LCA is always a regular node.
        lca = SstNode(lo, lo + size - 1, 0, 0)
        mid = lo + (size - 1) // 2
        child_on_left = child.start <= mid
        if _better(val, pos, child.min, child.pos):
            lca.min, lca.pos = val, pos
            if child_on_left:
                lca.left = child
            else:
                lca.right = child
        else:
            lca.min, lca.pos = child.min, child.pos
            kept: SstNode | None = child
            if child.block is not None:
                child.block[child.pos - child.start] = INF
                if self._recache_block(child):
                    kept = None
            else:
                if self._refill(child):
                    kept = None
            fresh = self._new_block_for(pos, val)
            if child_on_left:
                lca.left = kept
                lca.right = fresh
            else:
                lca.right = kept
                lca.left = fresh
        return lca

    def _refill(self, nd: SstNode) -> bool:
        """nd's own pair was taken away; pull the best descendant pair up the
        chain. True iff nd itself ends up holding nothing (caller unlinks)."""
        cur = nd
        parent: SstNode | None = None
        while True:
            l, r = cur.left, cur.right
            best = l
            if r is not None and (
                best is None or _better(r.min, r.pos, best.min, best.pos)
            ):
                best = r
            if best is None:
                if parent is None:
                    return True
                # An interior node emptied mid-chain: unlink it.
                if parent.left is cur:
                    parent.left = None
                else:
                    parent.right = None
                return False
            cur.min, cur.pos = best.min, best.pos
            if best.block is not None:
                best.block[best.pos - best.start] = INF
                if self._recache_block(best):
                    if cur.left is best:
                        cur.left = None
                    else:
                        cur.right = None
                return False
            parent, cur = cur, best

    def _delete_entry(self, i: int) -> bool:
        """Remove the entry at index i if present; True when something was
        removed."""
        nd = self._root
        parent: SstNode | None = None
        on_left = False
        while nd is not None and nd.start <= i <= nd.end:
            if nd.block is not None:
                off = i - nd.start
                if nd.block[off] == INF:
                    return False
                nd.block[off] = INF
                if self._recache_block(nd):
                    if parent is None:
                        self._root = None
                    elif on_left:
                        parent.left = None
                    else:
                        parent.right = None
                return True
            if nd.pos == i:
                if self._refill(nd):
                    if parent is None:
                        self._root = None
                    elif on_left:
                        parent.left = None
                    else:
                        parent.right = None
                return True
            mid = nd.start + (nd.end - nd.start) // 2
            parent = nd
            on_left = i <= mid
            nd = nd.left if on_left else nd.right
        return False

    # -- instrumentation -------------------------------------------------------

    def _min_suffix_probed(self, i: int):
        """min_suffix plus the depth (in edges) at which the descent stopped.

        Mirrors min_suffix exactly; kept separate so the hot path stays bare.
        """
        if not 0 <= i < max(self.capacity, 1):
            raise IndexError(f"index {i} out of range 0..{self.capacity - 1}")
        res = INF
        nd = self._root
        depth = 0
        while nd is not None and i <= nd.end:
            if nd.pos >= i:
                m = nd.min
                return (m if m < res else res), depth
            if nd.block is not None:
                blk = nd.block
                lo = i - nd.start if i > nd.start else 0
                for off in range(lo, len(blk)):
                    v = blk[off]
                    if v < res:
                        res = v
                return res, depth
            mid = nd.start + (nd.end - nd.start) // 2
            if i <= mid:
                r = nd.right
                if r is not None and r.min < res:
                    res = r.min
                nd = nd.left
            else:
                nd = nd.right
            depth += 1
        return res, depth

"""Permanents of 0/1 matrices as subtree counts between two trees.

For an n x n 0/1 matrix the gadget tree has one spine path per column
(one spine cell per row), a pendant marker hanging off cell (i, j) for
each 1 entry, a top connector above each spine, a degree-4 hub below it
with three hub leaves, and a root adjacent to all top connectors. For
n >= 5 the root is the unique vertex of degree n and the hubs are exactly
the degree-4 vertices, which pins any embedding of the identity gadget
onto column structure; the number of subtrees of the matrix gadget
isomorphic to the identity gadget then equals the permanent.

Embedding counts between trees are computed by a memoized rooted search:
a map is fixed by the image of one root, children must go injectively
into distinct neighbors avoiding the parent's image, and child
assignments are combined by subset dynamic programming. On trees every
such locally injective map is globally injective, so this counts
embeddings. Subtree counts divide out the pattern's automorphisms, which
are counted through rooted shapes at the tree's center.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HomlatticeError, ParseError, TreeError
from .graphs import Graph, connected_components


def check_tree(graph):
    if graph.n == 0:
        raise TreeError("empty graph is not a tree")
    if not graph.is_loop_free():
        raise TreeError("tree must be loop-free")
    if graph.m != graph.n - 1:
        raise TreeError(f"tree needs {graph.n - 1} edges, found {graph.m}")
    count, _ = connected_components(graph)
    if count != 1:
        raise TreeError("graph is disconnected")


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def parse_matrix(text):
    """Matrix file: first line n, then n rows of n space-separated 0/1."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ParseError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"bad dimension line: {lines[0]!r}") from None
    if n < 1:
        raise ParseError("matrix dimension must be positive")
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} rows, found {len(lines) - 1}")
    matrix = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries in row: {line!r}")
        row = []
        for part in parts:
            if part not in ("0", "1"):
                raise ParseError(f"matrix entries must be 0 or 1: {part!r}")
            row.append(int(part))
        matrix.append(row)
    return matrix


@dataclass(frozen=True)
class GadgetTree:
    """The gadget with a role tag per vertex.

    Roles: ("root",), ("top", j), ("spine", i, j), ("pendant", i, j),
    ("hub", j), ("hub_leaf", j, t) with 1-based i, j.
    """

    graph: Graph
    roles: tuple
    size: int

    def vertices_with_role(self, tag):
        return [v for v, role in enumerate(self.roles) if role[0] == tag]


def build_gadget(matrix):
    """Gadget tree of a square 0/1 matrix; any n >= 1 builds."""
    n = len(matrix)
    if n == 0:
        raise HomlatticeError("matrix must be nonempty")
    for row in matrix:
        if len(row) != n:
            raise HomlatticeError("matrix must be square")
        for value in row:
            if value not in (0, 1):
                raise HomlatticeError("matrix entries must be 0 or 1")
    roles = []
    edges = []

    def add(role):
        roles.append(role)
        return len(roles) - 1

    root = add(("root",))
    for j in range(1, n + 1):
        top = add(("top", j))
        edges.append((root, top))
        prev = top
        for i in range(1, n + 1):
            cell = add(("spine", i, j))
            edges.append((prev, cell))
            prev = cell
            if matrix[i - 1][j - 1] == 1:
                pend = add(("pendant", i, j))
                edges.append((cell, pend))
        hub = add(("hub", j))
        edges.append((prev, hub))
        for t in range(3):
            leaf = add(("hub_leaf", j, t))
            edges.append((hub, leaf))
    graph = Graph(len(roles), edges)
    check_tree(graph)
    return GadgetTree(graph, tuple(roles), n)


def _rooted_shapes(tree, root):
    """AHU shape ids for every (vertex, parent) orientation from a root."""
    order = []
    parent = {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in tree.neighbors(v):
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    interned = {}
    shape = {}
    for v in reversed(order):
        kids = tuple(sorted(shape[w] for w in tree.neighbors(v)
                            if w != parent[v]))
        shape[v] = interned.setdefault(kids, len(interned))
    return shape, parent, order


def _rooted_aut(tree, root):
    """Automorphism count of the tree rooted at root."""
    shape, parent, order = _rooted_shapes(tree, root)
    aut = {}
    for v in reversed(order):
        kids = [w for w in tree.neighbors(v) if w != parent[v]]
        total = 1
        by_shape = {}
        for w in kids:
            total *= aut[w]
            by_shape[shape[w]] = by_shape.get(shape[w], 0) + 1
        for mult in by_shape.values():
            for x in range(2, mult + 1):
                total *= x
        aut[v] = total
    return aut[root]


def tree_center(tree):
    """The one or two middle vertices found by stripping leaves."""
    check_tree(tree)
    if tree.n <= 2:
        return tuple(range(tree.n))
    degree = [tree.degree(v) for v in range(tree.n)]
    alive = [True] * tree.n
    layer = [v for v in range(tree.n) if degree[v] == 1]
    remaining = tree.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            alive[v] = False
            for w in tree.neighbors(v):
                if alive[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(v for v in range(tree.n) if alive[v]))


def tree_automorphism_count(tree):
    """Exact automorphism count of a tree of any size.

    Automorphisms preserve the center: with a single center vertex they
    are the rooted automorphisms there; with a center edge they either
    fix or swap its halves.
    """
    check_tree(tree)
    if tree.n == 1:
        return 1
    center = tree_center(tree)
    if len(center) == 1:
        return _rooted_aut(tree, center[0])
    c1, c2 = center
    half1 = _half_aut(tree, c1, c2)
    half2 = _half_aut(tree, c2, c1)
    swap = 2 if half1[1] == half2[1] else 1
    return half1[0] * half2[0] * swap


def _half_aut(tree, root, banned):
    """Rooted automorphism count and shape of the side of root away from
    banned."""
    _, parent, order = _rooted_shapes(tree, root)
    aut = {}
    shp = {}
    for v in reversed(order):
        if v == banned:
            continue
        kids = [w for w in tree.neighbors(v)
                if w != parent[v] and not (v == root and w == banned)]
        total = 1
        by_shape = {}
        interned_kids = []
        for w in kids:
            total *= aut[w]
            interned_kids.append(shp[w])
            by_shape[shp[w]] = by_shape.get(shp[w], 0) + 1
        for mult in by_shape.values():
            for x in range(2, mult + 1):
                total *= x
        aut[v] = total
        shp[v] = tuple(sorted(interned_kids))
    return aut[root], shp[root]


def count_tree_embeddings(pattern, host):
    """Number of injective edge-preserving maps between two trees."""
    check_tree(pattern)
    check_tree(host)
    if pattern.n > host.n:
        return 0
    if pattern.n == 1:
        return host.n
    root = 0
    children = {}
    parent = {root: None}
    stack = [root]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        kids = [w for w in pattern.neighbors(v) if w != parent[v]]
        children[v] = kids
        for w in kids:
            parent[w] = v
            stack.append(w)
    memo = {}

    def maps_below(v, target, avoid):
        """Maps of v's subtree with v at target, children avoiding avoid."""
        state = (v, target, avoid)
        hit = memo.get(state)
        if hit is not None:
            return hit
        kids = children[v]
        if not kids:
            memo[state] = 1
            return 1
        targets = [t for t in host.neighbors(target) if t != avoid]
        if len(targets) < len(kids):
            memo[state] = 0
            return 0
        ways = {0: 1}
        for kid in kids:
            grown = {}
            for mask, weight in ways.items():
                for idx, t in enumerate(targets):
                    if mask >> idx & 1:
                        continue
                    sub = maps_below(kid, t, target)
                    if sub:
                        new = mask | 1 << idx
                        grown[new] = grown.get(new, 0) + weight * sub
            ways = grown
            if not ways:
                break
        result = sum(ways.values())
        memo[state] = result
        return result

    return sum(maps_below(root, t, None) for t in range(host.n))


def count_subtrees(pattern, host):
    """Number of subtrees of the host isomorphic to the pattern tree."""
    emb = count_tree_embeddings(pattern, host)
    aut = tree_automorphism_count(pattern)
    if emb % aut != 0:
        raise AssertionError("embedding count not divisible by automorphisms")
    return emb // aut


@dataclass(frozen=True)
class PermanentCheck:
    permanent: int
    subtree_count: int

    @property
    def match(self):
        return self.permanent == self.subtree_count


def verify_permanent_identity(matrix):
    """Compare the permanent against the gadget subtree count; n >= 5.

    Below n = 5 the root degree no longer dominates the gadget's degree
    profile, so the identity is not claimed there.
    """
    from .oracle import permanent_ryser

    n = len(matrix)
    if n < 5:
        raise HomlatticeError("permanent identity requires n >= 5")
    perm = permanent_ryser(matrix)
    pattern = build_gadget(identity_matrix(n)).graph
    host = build_gadget(matrix).graph
    subtrees = count_subtrees(pattern, host)
    return PermanentCheck(perm, subtrees)

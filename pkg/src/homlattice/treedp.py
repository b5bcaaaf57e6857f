"""Exact treewidth and homomorphism counting over tree decompositions.

Treewidth is computed exactly by dynamic programming over subsets of the
vertex set (elimination-order formulation), so patterns must stay within
the global size limit. Homomorphism counts run over a nice decomposition
with leaf, introduce, forget and join nodes; tables map bag assignments to
arbitrary-precision counts, so host graphs can be large as long as the
width stays small.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HomlatticeError, HostError, ensure_pattern_size
from .graphs import Graph, component_subgraphs


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed 0..k-1 connected by tree edges; root marks node 0 of the
    rooted traversal used by the counting DP."""

    bags: tuple
    edges: tuple
    root: int = 0

    @property
    def width(self):
        if not self.bags:
            return -1
        return max(len(b) for b in self.bags) - 1

    def __len__(self):
        return len(self.bags)


def validate_decomposition(td, graph):
    """Check the three decomposition axioms against the graph."""
    k = len(td.bags)
    if k == 0:
        raise HomlatticeError("decomposition has no nodes")
    if len(td.edges) != k - 1:
        raise HomlatticeError("decomposition is not a tree (wrong edge count)")
    adj = [[] for _ in range(k)]
    for a, b in td.edges:
        if not (0 <= a < k and 0 <= b < k):
            raise HomlatticeError("decomposition edge out of range")
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * k
    stack = [0]
    seen[0] = True
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                stack.append(y)
    if not all(seen):
        raise HomlatticeError("decomposition is not connected")
    covered = set()
    for bag in td.bags:
        for v in bag:
            if not (0 <= v < graph.n):
                raise HomlatticeError(f"bag vertex {v} out of range")
        covered |= set(bag)
    if covered != set(range(graph.n)):
        raise HomlatticeError("bags do not cover the vertex set")
    for u, v in graph.edges:
        if not any(u in bag and v in bag for bag in td.bags):
            raise HomlatticeError(f"edge ({u}, {v}) not inside any bag")
    for v in range(graph.n):
        nodes = [i for i, bag in enumerate(td.bags) if v in bag]
        reach = {nodes[0]}
        stack = [nodes[0]]
        node_set = set(nodes)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in node_set and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != node_set:
            raise HomlatticeError(f"bags containing {v} are not connected")


def _boundary_size(adj_masks, elim_mask, v):
    """Neighbors of v outside elim_mask, reachable through elim_mask."""
    region = elim_mask | (1 << v)
    comp = 1 << v
    frontier = comp
    boundary = 0
    while frontier:
        grow = 0
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            grow |= adj_masks[low.bit_length() - 1]
        boundary |= grow & ~region
        grow &= region & ~comp
        comp |= grow
        frontier = grow
    return bin(boundary).count("1")


def treewidth_exact(graph, limit=None):
    """Exact treewidth and a witnessing decomposition.

    Subset dynamic programming over elimination prefixes: the cost of a set
    S is the best possible width of an ordering eliminating S first. Ties
    between eliminated vertices break toward the smallest index, so the
    witness is deterministic.
    """
    if not graph.is_loop_free():
        raise HomlatticeError("treewidth is defined here for loop-free graphs")
    n = graph.n
    ensure_pattern_size(n, limit)
    if n == 0:
        return -1, TreeDecomposition((frozenset(),), ())
    adj_masks, _ = graph.adjacency_masks()
    full = (1 << n) - 1
    cost = [-1] * (full + 1)
    choice = [-1] * (full + 1)
    for mask in range(1, full + 1):
        best = None
        best_v = -1
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            prev = mask ^ low
            width = max(cost[prev], _boundary_size(adj_masks, prev, v))
            if best is None or width < best:
                best = width
                best_v = v
        cost[mask] = best
        choice[mask] = best_v

    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()

    # Build bags by simulated elimination with fill-in.
    work = list(adj_masks)
    bags = []
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        neigh = work[v]
        bag = {v}
        rest = neigh
        while rest:
            low = rest & -rest
            rest ^= low
            bag.add(low.bit_length() - 1)
        bags.append(frozenset(bag))
        rest = neigh
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            work[u] |= neigh & ~low
            work[u] &= ~(1 << v)
        work[v] = 0
    edges = []
    last_seen = {}
    for i, v in enumerate(order):
        others = [u for u in bags[i] if u != v]
        if others:
            j = min(position[u] for u in others)
            edges.append((i, j))
        else:
            anchor = last_seen.get(v)
            if anchor is None and i + 1 < len(order):
                edges.append((i, i + 1))
            elif anchor is not None:
                edges.append((i, anchor))
        for u in bags[i]:
            last_seen[u] = i
    # Deduplicate and trim to a spanning tree of the bag nodes.
    td = _as_tree(bags, edges)
    validate_decomposition(td, graph)
    assert td.width == cost[full]
    return cost[full], td


def _as_tree(bags, edges):
    k = len(bags)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = []
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            kept.append((a, b))
    roots = {find(x) for x in range(k)}
    root_list = sorted(roots)
    for extra in root_list[1:]:
        kept.append((root_list[0], extra))
        parent[find(extra)] = find(root_list[0])
    return TreeDecomposition(tuple(bags), tuple(kept))


def make_nice(td):
    """Rebuild a decomposition in nice form without increasing the width.

    The result is rooted at an empty bag, every leaf is an empty bag, and
    every internal node either introduces one vertex, forgets one vertex,
    or joins two children with identical bags.
    """
    k = len(td.bags)
    adj = [[] for _ in range(k)]
    for a, b in td.edges:
        adj[a].append(b)
        adj[b].append(a)
    bags = []
    edges = []

    def new_node(bag):
        bags.append(frozenset(bag))
        return len(bags) - 1

    def chain(child_idx, child_bag, target_bag):
        cur_idx, cur = child_idx, set(child_bag)
        for v in sorted(child_bag - target_bag):
            cur.discard(v)
            idx = new_node(cur)
            edges.append((idx, cur_idx))
            cur_idx = idx
        for v in sorted(target_bag - child_bag):
            cur.add(v)
            idx = new_node(cur)
            edges.append((idx, cur_idx))
            cur_idx = idx
        return cur_idx

    def build(node, parent):
        bag = td.bags[node]
        kids = [c for c in adj[node] if c != parent]
        if not kids:
            leaf = new_node(frozenset())
            return chain(leaf, frozenset(), bag)
        tops = []
        for c in kids:
            ci = build(c, node)
            tops.append(chain(ci, td.bags[c], bag))
        while len(tops) > 1:
            a = tops.pop()
            b = tops.pop()
            j = new_node(bag)
            edges.append((j, a))
            edges.append((j, b))
            tops.append(j)
        return tops[0]

    top = build(td.root if 0 <= td.root < k else 0, -1)
    root_bag = td.bags[td.root if 0 <= td.root < k else 0]
    root = chain(top, root_bag, frozenset())
    return TreeDecomposition(tuple(bags), tuple(edges), root=root)


def _node_kinds(td):
    """Classify each node of a rooted nice decomposition."""
    k = len(td.bags)
    adj = [[] for _ in range(k)]
    for a, b in td.edges:
        adj[a].append(b)
        adj[b].append(a)
    kinds = {}
    order = []
    stack = [(td.root, -1)]
    while stack:
        node, parent = stack.pop()
        kids = [c for c in adj[node] if c != parent]
        order.append((node, kids))
        for c in kids:
            stack.append((c, node))
    for node, kids in order:
        bag = td.bags[node]
        if not kids:
            if bag:
                raise HomlatticeError("nice form violated: nonempty leaf")
            kinds[node] = ("leaf",)
        elif len(kids) == 1:
            child_bag = td.bags[kids[0]]
            if len(bag) == len(child_bag) + 1 and child_bag < bag:
                (v,) = bag - child_bag
                kinds[node] = ("introduce", v)
            elif len(bag) == len(child_bag) - 1 and bag < child_bag:
                (v,) = child_bag - bag
                kinds[node] = ("forget", v)
            else:
                raise HomlatticeError("nice form violated: bad unary node")
        elif len(kids) == 2:
            if td.bags[kids[0]] != bag or td.bags[kids[1]] != bag:
                raise HomlatticeError("nice form violated: join bags differ")
            kinds[node] = ("join",)
        else:
            raise HomlatticeError("nice form violated: node with >2 children")
    return kinds, list(reversed(order))


def count_homomorphisms(pattern, host, td):
    """Number of homomorphisms from pattern into host, given a valid
    decomposition of the pattern. Counts are exact Python integers."""
    if not pattern.is_loop_free():
        raise HomlatticeError("pattern must be loop-free")
    if not host.is_loop_free():
        raise HostError("host must be loop-free")
    validate_decomposition(td, pattern)
    nice = make_nice(td)
    kinds, postorder = _node_kinds(nice)
    host_adj = [host.neighbors(v) for v in range(host.n)]
    all_hosts = list(range(host.n))
    tables = {}
    for node, kids in postorder:
        kind = kinds[node]
        if kind[0] == "leaf":
            tables[node] = {(): 1}
        elif kind[0] == "introduce":
            v = kind[1]
            bag = sorted(nice.bags[node])
            pos = bag.index(v)
            child = kids[0]
            child_table = tables.pop(child)
            neigh_pos = []
            for u in pattern.neighbors(v):
                if u in nice.bags[node]:
                    i = bag.index(u)
                    neigh_pos.append(i - 1 if i > pos else i)
            table = {}
            if neigh_pos:
                for key, cnt in child_table.items():
                    candidate_sets = sorted(
                        (host_adj[key[i]] for i in neigh_pos), key=len)
                    base = candidate_sets[0]
                    rest = candidate_sets[1:]
                    for g in base:
                        if all(g in s for s in rest):
                            table[key[:pos] + (g,) + key[pos:]] = cnt
            else:
                for key, cnt in child_table.items():
                    for g in all_hosts:
                        table[key[:pos] + (g,) + key[pos:]] = cnt
            tables[node] = table
        elif kind[0] == "forget":
            v = kind[1]
            child = kids[0]
            child_bag = sorted(nice.bags[child])
            pos = child_bag.index(v)
            table = {}
            for key, cnt in tables.pop(child).items():
                short = key[:pos] + key[pos + 1:]
                table[short] = table.get(short, 0) + cnt
            tables[node] = table
        else:
            a, b = kids
            ta = tables.pop(a)
            tb = tables.pop(b)
            if len(tb) < len(ta):
                ta, tb = tb, ta
            table = {}
            for key, cnt in ta.items():
                other = tb.get(key)
                if other is not None:
                    table[key] = cnt * other
            tables[node] = table
    return tables[nice.root].get((), 0)


def hom_count(pattern, host, limit=None):
    """Homomorphism count with decompositions built per component.

    Disconnected patterns factor into a product over their components.
    """
    if pattern.n == 0:
        return 1
    total = 1
    for _, comp in component_subgraphs(pattern):
        _, td = treewidth_exact(comp, limit)
        total *= count_homomorphisms(comp, host, td)
        if total == 0:
            return 0
    return total

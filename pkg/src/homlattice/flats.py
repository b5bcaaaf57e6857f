"""Lattice of flats of the graphic matroid of a constraint graph.

A flat of the graphic matroid of a loop-free graph F corresponds to a
partition of V(F) whose blocks all induce connected subgraphs of F. The
rank of a flat is |V(F)| minus its number of blocks. Flats are ordered by
refinement; the Mobius function of the lattice (bottom fixed at the
all-singleton flat) drives the signed expansions in the basis module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HomlatticeError, ensure_pattern_size
from .graphs import Graph, VertexPartition


@dataclass(frozen=True)
class Flat:
    partition: VertexPartition
    rank: int


@dataclass(frozen=True)
class FlatLattice:
    """All flats of one constraint graph, sorted by nondecreasing rank.

    ``leq[i]`` is a bitmask whose bit j is set when flats[j] <= flats[i].
    ``mobius`` holds mu(bottom, flat) per flat once computed; it is None on
    a freshly enumerated lattice.
    """

    constraint: Graph
    flats: tuple
    leq: tuple
    mobius: tuple = None

    def bottom(self):
        return self.flats[0]

    def __len__(self):
        return len(self.flats)


def iter_set_partitions(n):
    """All partitions of 0..n-1 as restricted growth strings.

    A growth string assigns vertex v a block label a[v] with a[0] = 0 and
    a[v] <= 1 + max(a[:v]).
    """
    if n == 0:
        yield ()
        return
    labels = [0] * n
    maxes = [0] * n
    while True:
        yield tuple(labels)
        v = n - 1
        while v > 0 and labels[v] == maxes[v - 1] + 1:
            v -= 1
        if v == 0:
            return
        labels[v] += 1
        maxes[v] = max(maxes[v - 1], labels[v])
        for w in range(v + 1, n):
            labels[w] = 0
            maxes[w] = maxes[v]


def _mask_is_connected(mask, adj_masks):
    """Whether the vertex bitmask induces a connected subgraph."""
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        grow = 0
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            grow |= adj_masks[low.bit_length() - 1]
        grow &= mask & ~seen
        seen |= grow
        frontier = grow
    return seen == mask


def blocks_connected(graph, partition):
    """Whether every block of the partition induces a connected subgraph."""
    adj_masks, _ = graph.adjacency_masks()
    for block in partition.blocks:
        mask = 0
        for v in block:
            mask |= 1 << v
        if not _mask_is_connected(mask, adj_masks):
            return False
    return True


def partition_leq(a, b):
    """Refinement order: every block of a is contained in a block of b."""
    if a.n != b.n:
        raise HomlatticeError("partitions over different vertex sets")
    b_of = b.block_of
    for block in a.blocks:
        it = iter(block)
        first = b_of[next(it)]
        for v in it:
            if b_of[v] != first:
                return False
    return True


def enumerate_flats(constraint, limit=None):
    """Lattice of flats of the graphic matroid of a loop-free graph.

    Generates every set partition of the vertex set and keeps those whose
    blocks are all connected in the constraint graph.
    """
    if not constraint.is_loop_free():
        raise HomlatticeError("constraint graph must be loop-free")
    n = constraint.n
    ensure_pattern_size(n, limit)
    adj_masks, _ = constraint.adjacency_masks()
    flats = []
    for labels in iter_set_partitions(n):
        nblocks = max(labels) + 1 if labels else 0
        blocks = [0] * nblocks
        for v, lab in enumerate(labels):
            blocks[lab] |= 1 << v
        if all(_mask_is_connected(b, adj_masks) for b in blocks):
            part = VertexPartition.from_labels(labels)
            flats.append(Flat(part, n - nblocks))
    flats.sort(key=lambda f: (f.rank, f.partition.key()))
    reps = [tuple(min(b) for b in flat.partition.blocks) for flat in flats]
    leq = []
    for i, hi in enumerate(flats):
        hi_of = hi.partition.block_of
        mask = 0
        for j, lo in enumerate(flats):
            if lo.rank > hi.rank:
                break
            lo_of = lo.partition.block_of
            lo_rep = reps[j]
            if all(hi_of[v] == hi_of[lo_rep[lo_of[v]]] for v in range(n)):
                mask |= 1 << j
        leq.append(mask)
    return FlatLattice(constraint, tuple(flats), tuple(leq))


def compute_mobius(lattice):
    """Fill in mu(bottom, .) by the defining recursion.

    Flats are already sorted by nondecreasing rank, so each value only
    depends on earlier entries.
    """
    mobius = []
    for i, flat in enumerate(lattice.flats):
        if flat.rank == 0:
            mobius.append(1)
            continue
        below = lattice.leq[i] & ~(1 << i)
        total = 0
        j = 0
        while below:
            if below & 1:
                total += mobius[j]
            below >>= 1
            j += 1
        mobius.append(-total)
    return FlatLattice(lattice.constraint, lattice.flats, lattice.leq,
                       tuple(mobius))


def sign_rule_holds(lattice):
    """Whether every mu value is nonzero with sign (-1)^rank."""
    if lattice.mobius is None:
        raise HomlatticeError("lattice has no Mobius values, compute them first")
    for flat, mu in zip(lattice.flats, lattice.mobius):
        if mu == 0:
            return False
        if (mu > 0) != (flat.rank % 2 == 0):
            return False
    return True

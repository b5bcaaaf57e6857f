"""Signed expansions of restricted homomorphism counts.

A restricted count expands as a signed integer combination of plain
homomorphism counts of the pattern's contraction minors: sum the Mobius
value of each flat of the constraint graph's matroid, grouped by the
isomorphism class of the quotient, dropping quotients that carry a
selfloop (they admit no homomorphism into a loop-free host). The class
containing the pattern itself always has coefficient +1, every condensed
coefficient is nonzero, and its sign is determined by how many vertices
the contraction removed; these facts are asserted at expansion time
rather than assumed.

Evaluation runs each minor through the tree-decomposition counter, so the
cost per term is |V(G)|^(width+1); building an expansion enumerates the
constraint graph's flats, which is bounded by the Bell number of the
pattern size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HomlatticeError, HostError, ensure_pattern_size
from .flats import compute_mobius, enumerate_flats, iter_set_partitions
from .graphs import (Graph, VertexPartition, canonical_form,
                     canonical_representative, connected_components, quotient)
from .restrictions import EMB, Restriction, apply_restriction
from .treedp import hom_count


@dataclass(frozen=True)
class ExpansionTerm:
    """One isomorphism class of minors with its condensed coefficient."""

    coefficient: int
    graph: Graph
    key: tuple


@dataclass(frozen=True)
class BasisExpansion:
    pattern: Graph
    restriction: Restriction
    terms: tuple

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class LinearCombination:
    """Nonnegative rational weights on (restriction, pattern) pairs."""

    terms: tuple

    @staticmethod
    def build(entries):
        norm = []
        for coeff, restriction, pattern in entries:
            coeff = Fraction(coeff)
            if coeff <= 0:
                raise HomlatticeError("combination weights must be positive")
            if not pattern.is_loop_free():
                raise HomlatticeError("combination patterns must be loop-free")
            norm.append((coeff, restriction, pattern))
        return LinearCombination(tuple(norm))

    def __len__(self):
        return len(self.terms)


_expansion_cache = {}


def expand(restriction, pattern, limit=None):
    """Signed minor expansion of the restricted count for this pattern.

    Results for built-in restrictions are cached per isomorphism class;
    custom restrictions are never cached since nothing ties their output
    to the pattern's isomorphism class.
    """
    if not pattern.is_loop_free():
        raise HomlatticeError("pattern must be loop-free")
    ensure_pattern_size(pattern.n, limit)
    token = restriction.token()
    cache_key = None
    if token is not None:
        cache_key = (canonical_form(pattern, limit), token)
        hit = _expansion_cache.get(cache_key)
        if hit is not None:
            return BasisExpansion(pattern, restriction, hit)
    constraint = apply_restriction(restriction, pattern)
    lattice = compute_mobius(enumerate_flats(constraint, limit))
    groups = {}
    for flat, mu in zip(lattice.flats, lattice.mobius):
        q = quotient(pattern, flat.partition)
        if not q.is_loop_free():
            continue
        key = canonical_form(q, limit)
        entry = groups.get(key)
        if entry is None:
            groups[key] = [mu, canonical_representative(q, limit)]
        else:
            entry[0] += mu
    terms = []
    for key, (coeff, rep) in groups.items():
        if coeff == 0:
            raise AssertionError("condensed coefficient vanished")
        removed = pattern.n - rep.n
        if (coeff > 0) != (removed % 2 == 0):
            raise AssertionError("condensed coefficient has the wrong sign")
        terms.append(ExpansionTerm(coeff, rep, key))
    terms.sort(key=lambda t: (-t.graph.n, t.key))
    lead = terms[0] if terms else None
    if lead is None or lead.graph.n != pattern.n or lead.coefficient != 1:
        raise AssertionError("leading expansion term is not the pattern")
    terms = tuple(terms)
    if cache_key is not None:
        _expansion_cache[cache_key] = terms
    return BasisExpansion(pattern, restriction, terms)


def evaluate(expansion, host, limit=None):
    """Value of the expansion on a loop-free host graph."""
    if not host.is_loop_free():
        raise HostError("host graph must be loop-free")
    total = 0
    for term in expansion.terms:
        total += term.coefficient * hom_count(term.graph, host, limit)
    if total < 0:
        raise AssertionError("restricted count came out negative")
    return total


def count_restricted(restriction, pattern, host, limit=None):
    """Restricted homomorphism count via the minor expansion."""
    return evaluate(expand(restriction, pattern, limit), host, limit)


def evaluate_combination(combination, host, limit=None):
    """Exact rational value of a linear combination on a host."""
    if not host.is_loop_free():
        raise HostError("host graph must be loop-free")
    total = Fraction(0)
    for coeff, restriction, pattern in combination.terms:
        total += coeff * evaluate(expand(restriction, pattern, limit),
                                  host, limit)
    return total


def is_congruent(combination):
    """Whether all pattern vertex counts share one parity.

    Empty and single-term combinations qualify trivially.
    """
    parities = {pattern.n % 2 for _, _, pattern in combination.terms}
    return len(parities) <= 1


def hom_to_embedding_basis(pattern, limit=None):
    """Plain homomorphism count as a sum of embedding counts of quotients.

    Runs over the full partition lattice of the vertex set, not just
    constraint-graph flats: merging any vertex subset is allowed as long
    as the quotient stays loop-free. Multiplicities count the partitions
    landing in each isomorphism class, so all weights are positive.
    """
    if not pattern.is_loop_free():
        raise HomlatticeError("pattern must be loop-free")
    ensure_pattern_size(pattern.n, limit)
    groups = {}
    for labels in iter_set_partitions(pattern.n):
        part = VertexPartition.from_labels(labels)
        q = quotient(pattern, part)
        if not q.is_loop_free():
            continue
        key = canonical_form(q, limit)
        entry = groups.get(key)
        if entry is None:
            groups[key] = [1, canonical_representative(q, limit)]
        else:
            entry[0] += 1
    reps = sorted(groups.values(), key=lambda e: (-e[1].n,
                                                  canonical_form(e[1])))
    return LinearCombination.build(
        [(count, EMB, rep) for count, rep in reps])


def serialize_expansion(expansion):
    """One line per term: signed coefficient, vertex count, edge list.

    Fields are tab-separated; edges are semicolon-separated ``u-v`` pairs
    of the canonical representative, printed 1-based. Terms are sorted by
    descending vertex count, then canonical key, so output is stable.
    """
    lines = []
    for term in expansion.terms:
        edges = ";".join(f"{u + 1}-{v + 1}" for u, v in term.graph.edge_list())
        lines.append(f"{term.coefficient:+d}\t{term.graph.n}\t{edges}")
    return "\n".join(lines)

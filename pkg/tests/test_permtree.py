import random
from collections import Counter

import pytest

from homlattice.errors import HomlatticeError, ParseError, TreeError
from homlattice.graphs import Graph, count_automorphisms, cycle, path, star
from homlattice.oracle import brute_restricted
from homlattice.permtree import (
    build_gadget,
    check_tree,
    count_subtrees,
    count_tree_embeddings,
    identity_matrix,
    parse_matrix,
    tree_automorphism_count,
    tree_center,
    verify_permanent_identity,
)
from homlattice.restrictions import EMB
from helpers import random_tree

EXAMPLE = [
    [1, 0, 1, 0, 0],
    [0, 1, 0, 1, 1],
    [1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0],
    [0, 1, 0, 0, 1],
]


def test_check_tree_rejects_non_trees():
    with pytest.raises(TreeError):
        check_tree(cycle(3))
    with pytest.raises(TreeError):
        check_tree(Graph(2))
    with pytest.raises(TreeError):
        check_tree(Graph(0))
    check_tree(path(4))


def test_tree_center_examples():
    assert tree_center(path(4)) == (1, 2)
    assert tree_center(path(5)) == (2,)
    assert tree_center(star(3)) == (0,)
    assert tree_center(Graph(1)) == (0,)


def test_automorphism_examples():
    assert tree_automorphism_count(path(3)) == 2
    assert tree_automorphism_count(star(3)) == 6
    assert tree_automorphism_count(path(2)) == 2
    assert tree_automorphism_count(Graph(1)) == 1


def test_automorphisms_match_generic_counter():
    rng = random.Random(41)
    for _ in range(60):
        tree = random_tree(rng, rng.randrange(1, 10))
        assert tree_automorphism_count(tree) == count_automorphisms(tree)


def test_embeddings_match_oracle():
    rng = random.Random(43)
    for _ in range(60):
        pattern = random_tree(rng, rng.randrange(1, 6))
        host = random_tree(rng, rng.randrange(1, 8))
        assert (count_tree_embeddings(pattern, host)
                == brute_restricted(EMB, pattern, host))


def test_subtree_counts():
    assert count_subtrees(path(3), path(3)) == 1
    assert count_subtrees(path(2), path(4)) == 3
    assert count_subtrees(path(5), path(4)) == 0


def test_gadget_sizes():
    assert build_gadget([[1]]).graph.n == 8
    gadget = build_gadget(identity_matrix(5))
    assert gadget.graph.n == 56
    ones = sum(sum(row) for row in EXAMPLE)
    assert build_gadget(EXAMPLE).graph.n == 25 + ones + 5 * 5 + 1


def test_gadget_roles_and_degrees():
    gadget = build_gadget(identity_matrix(5))
    check_tree(gadget.graph)
    root = gadget.vertices_with_role("root")
    assert len(root) == 1
    assert gadget.graph.degree(root[0]) == 5
    for hub in gadget.vertices_with_role("hub"):
        assert gadget.graph.degree(hub) == 4
    profile = Counter(gadget.graph.degree(v)
                      for v in range(gadget.graph.n))
    assert profile == {1: 20, 2: 25, 3: 5, 4: 5, 5: 1}


def test_identity_gadget_automorphisms():
    gadget = build_gadget(identity_matrix(5))
    assert tree_automorphism_count(gadget.graph) == 6 ** 5


def test_permanent_identity_examples():
    check = verify_permanent_identity(identity_matrix(5))
    assert (check.permanent, check.subtree_count, check.match) == (1, 1, True)
    check = verify_permanent_identity([[1] * 5 for _ in range(5)])
    assert (check.permanent, check.subtree_count) == (120, 120)
    check = verify_permanent_identity(EXAMPLE)
    assert (check.permanent, check.subtree_count) == (6, 6)
    check = verify_permanent_identity([[0] * 5 for _ in range(5)])
    assert (check.permanent, check.subtree_count) == (0, 0)


def test_permanent_identity_needs_five_rows():
    with pytest.raises(HomlatticeError):
        verify_permanent_identity(identity_matrix(4))


def test_build_gadget_validates():
    with pytest.raises(HomlatticeError):
        build_gadget([])
    with pytest.raises(HomlatticeError):
        build_gadget([[1, 0]])
    with pytest.raises(HomlatticeError):
        build_gadget([[2]])


def test_parse_matrix():
    assert parse_matrix("2\n1 0\n0 1\n") == [[1, 0], [0, 1]]
    assert parse_matrix("1\n1") == [[1]]
    for bad in ("", "x", "2\n1 0", "2\n1 2\n0 1", "2\n1\n0 1", "0"):
        with pytest.raises(ParseError):
            parse_matrix(bad)

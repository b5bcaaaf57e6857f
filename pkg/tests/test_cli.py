import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from homlattice.cli import main, parse_graph, parse_manifest, serialize_graph
from homlattice.errors import ParseError
from homlattice.graphs import Graph, clique, cycle, path, windmill


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        target = tmp_path / name
        target.write_text(text)
        return str(target)
    return _write


@pytest.fixture
def graph_file(write):
    def _graph_file(name, graph):
        return write(name, serialize_graph(graph))
    return _graph_file


def test_graph_round_trip():
    text = serialize_graph(path(3))
    assert text == "p edge 3 2\ne 1 2\ne 2 3\n"
    assert parse_graph(text) == path(3)
    assert serialize_graph(parse_graph(text)) == text


graph_strategy = st.integers(1, 7).flatmap(
    lambda n: st.builds(
        Graph,
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
            .filter(lambda e: e[0] != e[1]),
            max_size=15,
        ),
    )
)


@settings(max_examples=100, deadline=None)
@given(graph_strategy)
def test_round_trip_any_graph(g):
    assert parse_graph(serialize_graph(g)) == g


def test_parse_graph_rejects_malformed():
    cases = [
        "",
        "p edge 2 1\ne 1 1\n",
        "p edge 2 2\ne 1 2\n",
        "p edge 2 1\ne 1 2\ne 1 2\n",
        "p edge 2 1\ne 0 2\n",
        "p edge 2 1\ne 1 3\n",
        "e 1 2\n",
        "p edge 2 1\np edge 2 1\ne 1 2\n",
        "q edge 2 1\n",
        "p edge 2 1\ne 1 two\n",
    ]
    for text in cases:
        with pytest.raises(ParseError):
            parse_graph(text)


def test_comments_and_blank_lines_ignored():
    text = "c a triangle\n\np edge 3 3\nc body\ne 1 2\ne 2 3\ne 1 3\n"
    assert parse_graph(text) == clique(3)


def test_count_command(capsys, graph_file):
    p3 = graph_file("p3.g", path(3))
    k3 = graph_file("k3.g", clique(3))
    assert main(["count", "--tau", "li", "--pattern", p3,
                 "--host", k3]) == 0
    assert capsys.readouterr().out == "6\n"
    assert main(["count", "--tau", "li", "--pattern", p3, "--host", k3,
                 "--method", "oracle"]) == 0
    assert capsys.readouterr().out == "6\n"
    assert main(["count", "--tau", "emb", "--pattern",
                 graph_file("k2.g", path(2)), "--host", k3]) == 0
    assert capsys.readouterr().out == "6\n"


def test_expand_command(capsys, graph_file):
    p3 = graph_file("p3.g", path(3))
    assert main(["expand", "--tau", "li", "--pattern", p3]) == 0
    assert capsys.readouterr().out == "+1\t3\t1-3;2-3\n-1\t2\t1-2\n"
    assert main(["expand", "--tau", "hom", "--pattern", p3]) == 0
    out = capsys.readouterr().out
    assert out.startswith("+1\t3\t") and out.count("\n") == 1


def test_minors_command(capsys, graph_file):
    p3 = graph_file("p3.g", path(3))
    assert main(["minors", "--tau", "li", "--pattern", p3]) == 0
    out = capsys.readouterr().out
    assert out.endswith("max-treewidth: 1\n")
    assert main(["minors", "--tau", "li", "--pattern",
                 graph_file("w3.g", windmill(3))]) == 0
    out = capsys.readouterr().out
    assert out.endswith("max-treewidth: 3\n")


def test_lincomb_command(capsys, write, graph_file):
    graph_file("p3.g", path(3))
    graph_file("k3.g", clique(3))
    graph_file("c3.g", cycle(3))
    k4 = graph_file("k4.g", clique(4))
    manifest = write("combo.lc", "1 hom p3.g\n1 li k3.g\n1 emb c3.g\n")
    assert main(["lincomb", "--manifest", manifest, "--host", k4]) == 0
    captured = capsys.readouterr()
    assert captured.out == "84\n"
    assert captured.err == "congruent: yes\n"
    empty = write("empty.lc", "")
    assert main(["lincomb", "--manifest", empty, "--host", k4]) == 0
    captured = capsys.readouterr()
    assert captured.out == "0\n"
    assert captured.err == "congruent: yes\n"
    graph_file("k2.g", path(2))
    mixed = write("mixed.lc", "1 hom k2.g\n1 hom k3.g\n")
    assert main(["lincomb", "--manifest", mixed, "--host", k4]) == 0
    captured = capsys.readouterr()
    assert captured.err == "congruent: no\n"
    frac = write("frac.lc", "1/7 hom p3.g\n")
    k3 = graph_file("k3b.g", clique(3))
    assert main(["lincomb", "--manifest", frac, "--host", k3]) == 0
    assert capsys.readouterr().out == "12/7\n"


def test_manifest_paths_resolve_relative_to_manifest(tmp_path, write):
    sub = tmp_path / "inner"
    sub.mkdir()
    (sub / "k3.g").write_text(serialize_graph(clique(3)))
    manifest = write("inner/combo.lc", "2 hom k3.g\n")
    entries = parse_manifest((sub / "combo.lc").read_text(), str(sub))
    assert len(entries) == 1 and entries[0][2] == clique(3)
    assert main(["lincomb", "--manifest", manifest,
                 "--host", str(sub / "k3.g")]) == 0


def test_manifest_rejects_bad_lines(write, graph_file):
    graph_file("k3.g", clique(3))
    for text in ("1 hom\n", "zero hom k3.g\n", "0 hom k3.g\n",
                 "-1 hom k3.g\n", "1 zig k3.g\n", "1/0 hom k3.g\n"):
        manifest = write("bad.lc", text)
        host = graph_file("host.g", clique(3))
        assert main(["lincomb", "--manifest", manifest,
                     "--host", host]) == 2


def test_perm_gadget_command(capsys, write):
    id5 = "\n".join(" ".join("1" if i == j else "0" for j in range(5))
                    for i in range(5))
    matrix = write("id5.mat", f"5\n{id5}\n")
    assert main(["perm-gadget", "--matrix", matrix]) == 0
    assert capsys.readouterr().out == "perm=1 subtrees=1 match=yes\n"
    assert main(["perm-gadget", "--matrix", matrix, "--check"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "perm=1 subtrees=1 match=yes\n"
    assert "agree" in captured.err


def test_perm_gadget_small_matrix_is_a_precondition_error(capsys, write):
    matrix = write("id2.mat", "2\n1 0\n0 1\n")
    assert main(["perm-gadget", "--matrix", matrix]) == 1
    assert "n >= 5" in capsys.readouterr().err


def test_exit_codes(capsys, write, graph_file):
    p3 = graph_file("p3.g", path(3))
    k3 = graph_file("k3.g", clique(3))
    assert main(["count", "--tau", "zig", "--pattern", p3,
                 "--host", k3]) == 2
    capsys.readouterr()
    assert main(["count", "--tau", "hom", "--pattern",
                 write("bad.g", "e 1 2\n"), "--host", k3]) == 2
    capsys.readouterr()
    assert main(["count", "--tau", "hom", "--pattern", "/does/not/exist",
                 "--host", k3]) == 1
    capsys.readouterr()
    assert main(["count", "--tau", "hom"]) == 1
    capsys.readouterr()
    assert main([]) == 1
    capsys.readouterr()
    p7 = graph_file("p7.g", path(7))
    assert main(["expand", "--tau", "li", "--pattern", p7,
                 "--limit", "5"]) == 3
    capsys.readouterr()
    assert main(["expand", "--tau", "li", "--pattern", p7]) == 0
    capsys.readouterr()


def test_limit_env_variable(capsys, graph_file, monkeypatch):
    p7 = graph_file("p7.g", path(7))
    monkeypatch.setenv("HOMLATTICE_LIMIT", "5")
    assert main(["expand", "--tau", "li", "--pattern", p7]) == 3
    capsys.readouterr()
    assert main(["expand", "--tau", "li", "--pattern", p7,
                 "--limit", "12"]) == 0
    capsys.readouterr()
    monkeypatch.setenv("HOMLATTICE_LIMIT", "12")
    assert main(["expand", "--tau", "li", "--pattern", p7]) == 0
    capsys.readouterr()


def test_determinism(capsys, graph_file):
    w3 = graph_file("w3.g", windmill(3))
    assert main(["expand", "--tau", "li", "--pattern", w3]) == 0
    first = capsys.readouterr().out
    assert main(["expand", "--tau", "li", "--pattern", w3]) == 0
    assert capsys.readouterr().out == first


def test_module_entry_point(graph_file):
    p3 = graph_file("p3.g", path(3))
    k3 = graph_file("k3.g", clique(3))
    env = dict(os.environ)
    src = os.path.join(os.path.dirname(os.path.dirname(__file__)), "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    result = subprocess.run(
        [sys.executable, "-m", "homlattice", "count", "--tau", "li",
         "--pattern", p3, "--host", k3],
        capture_output=True, text=True, env=env)
    assert result.returncode == 0
    assert result.stdout == "6\n"

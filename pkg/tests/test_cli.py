import subprocess
import sys
from pathlib import Path

import pydot
import pytest
from hypothesis import given, settings

from atlasgraph.cli import main, parse_graph, render_dot, render_graph
from atlasgraph.errors import BadEndpoint, DuplicateEdge, ParseError
from atlasgraph.graph_core import new_labeled_graph
from oracles import labeled_graphs

DATA = Path(__file__).resolve().parent.parent / "data"
TORUS_DOC = """\
format 1
uniform_dim 2
vertex id=0 dim=2
vertex id=1 dim=2
edge u=0 v=1 label=3
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_torus():
    g = parse_graph(TORUS_DOC.encode())
    assert g == new_labeled_graph([2, 2], [(0, 1, 3)], uniform_dim=2)


def test_parse_empty_graph():
    g = parse_graph("format 1\n")
    assert g.order == 0


def test_parse_bad_endpoint_reports_edge_index():
    doc = "format 1\nvertex id=0 dim=2\nvertex id=1 dim=2\nedge u=0 v=1 label=1\nedge u=0 v=5 label=1\n"
    with pytest.raises(BadEndpoint) as info:
        parse_graph(doc)
    assert info.value.index == 1
    assert "line 5" in str(info.value)


def test_parse_duplicate():
    doc = "format 1\nvertex id=0 dim=2\nvertex id=1 dim=2\nedge u=0 v=1 label=1\nedge u=1 v=0 label=2\n"
    with pytest.raises(DuplicateEdge):
        parse_graph(doc)


@pytest.mark.parametrize(
    "doc, line, col",
    [
        ("vertex id=0 dim=1\n", 1, 1),
        ("format 2\n", 1, 8),
        ("format 1\nvertex id=0 dim=1 color=3\n", 2, 19),
        ("format 1\nchart id=0\n", 2, 1),
        ("format 1\nvertex id=0 dim=x\n", 2, 17),
        ("format 1\n  vertex id=1 dim=1\n", 2, 3),
        ("format 1\nvertex id=0\n", 2, 1),
        ("format 1\nedge u=0 v=1 label=1 label=2\n", 2, 22),
        ("# nothing\n", 1, 1),
    ],
)
def test_parse_errors_carry_position(doc, line, col):
    with pytest.raises(ParseError) as info:
        parse_graph(doc)
    assert (info.value.line, info.value.column) == (line, col)


@given(labeled_graphs(max_n=7, max_label=5, max_dim=4))
def test_round_trip(g):
    assert parse_graph(render_graph(g)) == g
    h = new_labeled_graph(g.dims, g.edge_triples(), uniform_dim=g.dims[0] if g.order and len(set(g.dims)) == 1 else None)
    assert parse_graph(render_graph(h).encode()) == h


def test_dot_torus():
    text = render_dot(new_labeled_graph([2, 2], [(0, 1, 3)]))
    assert text.count(" -- ") == 1
    assert 'label="L=3 (κ=2)"' in text
    assert "dim 2" in text


def test_dot_single_vertex():
    text = render_dot(new_labeled_graph([4], []))
    assert " -- " not in text and "0 [" in text


@settings(max_examples=40, deadline=None)
@given(labeled_graphs(max_n=6, max_label=4, max_dim=3))
def test_dot_parses_with_pydot(g):
    (parsed,) = pydot.graph_from_dot_data(render_dot(g))
    assert parsed.get_type() == "graph"
    assert len(parsed.get_edges()) == g.size
    assert {n.get_name() for n in parsed.get_nodes()} == {str(v) for v in range(g.order)}


def test_rank_command(capsys):
    code, out, _ = run(capsys, "rank", str(DATA / "torus.graph"))
    assert code == 0
    assert out.splitlines() == ["simple_rank=0", "label_excess=2", "labeled_rank=2"]


def test_pi1_command(capsys):
    code, out, _ = run(capsys, "pi1", str(DATA / "torus.graph"), "--basepoint", "1")
    lines = out.splitlines()
    assert code == 0
    assert lines[:2] == ["basepoint=1", "generators=2"]
    assert lines[2].startswith("a0: 1 0 1 ")


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", str(DATA / "sphere_tree.graph"))
    assert code == 0 and "homotopy_sphere=true" in out.splitlines()
    code, out, _ = run(capsys, "classify", str(DATA / "torus.graph"))
    assert code == 2 and "minimal_atlas_valid=true" in out.splitlines()


def test_canon_and_iso(capsys, tmp_path):
    swapped = tmp_path / "swapped.graph"
    swapped.write_text("format 1\nvertex id=0 dim=2\nvertex id=1 dim=2\nedge u=1 v=0 label=3\n")
    code, out, _ = run(capsys, "canon", str(DATA / "torus.graph"))
    assert code == 0 and out.strip() == "0002000200020003"
    assert run(capsys, "iso", str(DATA / "torus.graph"), str(swapped))[0] == 0
    assert run(capsys, "iso", str(DATA / "torus.graph"), str(DATA / "sphere_tree.graph"))[0] == 2


def test_enumerate_to_file(capsys, tmp_path):
    out_file = tmp_path / "cat.txt"
    code, out, _ = run(capsys, "enumerate", "--order", "2", "--max-label", "3", "--dim", "2", "--out", str(out_file))
    assert code == 0 and out.strip() == "2"
    records = out_file.read_text().splitlines()
    assert records == [
        "0002000200020002 2 2 3 1 false true",
        "0002000200020003 2 2 3 2 false true",
    ]


def test_enumerate_to_stdout_deterministic(capsys):
    code, out1, err = run(capsys, "enumerate", "--order", "4", "--max-label", "3")
    assert code == 0
    lines = out1.splitlines()
    assert int(err.strip()) == len(lines)
    assert lines == sorted(lines)
    for line in lines:
        fields = line.split(" ")
        assert len(fields) == 7 and fields[1:4] == ["4", "1", "3"]
    _, out2, _ = run(capsys, "enumerate", "--order", "4", "--max-label", "3", "--jobs", "2")
    assert out1 == out2


def test_count_graphs(capsys):
    assert run(capsys, "count-graphs", "--order", "6")[:2] == (0, "112\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["rank", "/nonexistent/file.graph"],
        ["count-graphs", "--order", "9"],
        ["count-graphs", "--order", "0"],
        ["count-graphs"],
        ["frobnicate"],
        ["enumerate", "--order", "2"],
    ],
)
def test_errors_exit_one(capsys, argv):
    code = None
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1
    assert capsys.readouterr().err


def test_validation_error_exit_one(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("format 1\nvertex id=0 dim=2\nedge u=0 v=0 label=1\n")
    code, _, err = run(capsys, "rank", str(bad))
    assert code == 1 and "SelfLoop" in err
    disc = tmp_path / "disc.graph"
    disc.write_text("format 1\nvertex id=0 dim=2\nvertex id=1 dim=2\n")
    code, _, err = run(capsys, "classify", str(disc))
    assert code == 1 and "Disconnected" in err
    code, _, err = run(capsys, "pi1", str(DATA / "torus.graph"), "--basepoint", "7")
    assert code == 1 and "BadBasepoint" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "atlasgraph", "rank", str(DATA / "torus.graph")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "labeled_rank=2"

from collage import oracles
from collage.diagram import OneCellPath


def test_small_paths_counts(test_graph):
    # X: a, b, u; Y: d. Length <= 1 gives 2 empty paths and 4 single wires.
    assert len(oracles.small_paths(test_graph, 1)) == 6
    assert OneCellPath("Y") in oracles.small_paths(test_graph, 0)


def test_exchange_bfs_agrees(test_graph):
    rep = oracles.exchange_bfs(test_graph, max_layers=3)
    assert rep.ok and rep.checked > 100
    assert rep.lines()[0].endswith("0 disagreements")


def test_exchange_bfs_catches_a_broken_normal_form(test_graph, monkeypatch):
    monkeypatch.setattr(oracles, "normalize", lambda d: d)
    rep = oracles.exchange_bfs(test_graph, max_layers=2)
    assert not rep.ok
    assert any(line.lstrip().startswith("MISMATCH") for line in rep.lines())


def test_coend_closure_is_deterministic():
    a, b = oracles.coend_closure(11, 15), oracles.coend_closure(11, 15)
    assert a.ok and a.checked == 15 and a.lines() == b.lines()


def test_hom_count_agrees(test_graph):
    rep = oracles.hom_count(test_graph, max_layers=2)
    assert rep.ok and rep.checked > 10

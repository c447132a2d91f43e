import pytest
from hypothesis import strategies as st

from collage import corpus
from collage.diagram import OneCellPath, SlicedDiagram
from collage.presentations import _placements


@pytest.fixture(scope="session")
def docs():
    return {name: corpus.load(name) for name in corpus.FILES}


@pytest.fixture(scope="session")
def test_graph(docs):
    return docs["twograph"].theory("Test").graph


def grow(graph, domain: OneCellPath, picks) -> SlicedDiagram:
    """Extend ``domain`` one layer per pick; each pick chooses among the legal placements."""
    steps, d = [], SlicedDiagram(domain)
    for k in picks:
        options = list(_placements(graph, d.codomain))
        if not options:
            break
        steps.append(options[k % len(options)])
        d = SlicedDiagram.from_steps(domain, steps)
    return d


def diagrams(graph, domains, max_layers=5):
    """Hypothesis strategy for diagrams over ``graph`` starting at one of ``domains``."""
    return st.builds(lambda dom, picks: grow(graph, dom, picks),
                     st.sampled_from(domains),
                     st.lists(st.integers(0, 50), max_size=max_layers))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda l: int(l.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)

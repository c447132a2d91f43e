import xml.etree.ElementTree as ET

import pytest

from collage import corpus
from collage.diagram import OneCellPath, identity
from collage.render import FORMATS, render

BOXES = corpus.load("functorbox").theory("Boxes")
SHARED = corpus.load("shared_state").theory("Shared")


@pytest.mark.parametrize("fmt", FORMATS)
def test_rendering_is_deterministic(fmt):
    d = BOXES.diagram("pair_early")
    assert render(d, fmt, BOXES.graph.zero_cells) == render(d, fmt, BOXES.graph.zero_cells)


def test_svg_is_well_formed_and_labels_every_layer():
    d = SHARED.diagram("race0")
    root = ET.fromstring(render(d, "svg", SHARED.graph.zero_cells))
    assert root.tag.endswith("svg")
    text = "".join(root.itertext())
    for _, g in d.steps:
        assert g.name in text


def test_dot_and_tikz_mention_generators():
    d = SHARED.diagram("sequential")
    dot = render(d, "dot")
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
    tikz = render(d, "tikz")
    assert "tikzpicture" in tikz
    for _, g in d.steps:
        assert g.name in dot and g.name in tikz


def test_unicode_names_are_escaped_for_tikz():
    comb = corpus.load("comb").theory("Comb")
    tikz = render(comb.diagram("tube"), "tikz")
    assert "tikzpicture" in tikz


def test_empty_diagram_renders():
    for fmt in FORMATS:
        assert render(identity(OneCellPath("*")), fmt)


def test_unknown_format():
    with pytest.raises(ValueError):
        render(identity(OneCellPath("*")), "png")

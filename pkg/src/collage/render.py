"""
Static renderings of sliced diagrams: SVG, Graphviz dot and TikZ.

The layout is read straight off the sliced form. Row k shows the path
between layer k-1 and layer k, each wire a vertical track; each layer is a
box between two rows. The regions between wires are filled by zero-cell,
the first zero-cell white, so functor boxes and the right-hand side of a
collage show up as coloured regions. Output depends only on the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .diagram import SlicedDiagram
from .presentations import FDOWN, FUP

FORMATS = ("svg", "dot", "tikz")
PALETTE = ("#ffffff", "#dbe9f6", "#fde2c8", "#d9f0d3", "#eadcf2", "#f6f2c4")
BOUNDARY_WIRES = (FUP, FDOWN)

DX, DY, MARGIN, BOX_H = 40, 60, 30, 24


@dataclass(frozen=True)
class _Segment:
    name: str
    x0: float
    y0: float
    x1: float
    y1: float


@dataclass(frozen=True)
class _Box:
    label: str
    x0: float
    x1: float
    y: float


@dataclass(frozen=True)
class _Region:
    cell: str
    x0: float
    x1: float
    y0: float
    y1: float


class Layout:
    """Coordinates for every wire segment, box and region of ``d``."""

    def __init__(self, d: SlicedDiagram, zero_cells=None):
        self.d = d
        paths = d.paths()
        cells = list(zero_cells or ())
        for p in paths:
            for k in range(len(p) + 1):
                if p.cell_at(k) not in cells:
                    cells.append(p.cell_at(k))
        self.colors = {c: PALETTE[k % len(PALETTE)] for k, c in enumerate(cells)}
        width = max(len(p) for p in paths) + 1
        self.width = 2 * MARGIN + width * DX
        self.height = 2 * MARGIN + (len(paths)) * DY
        self.segments, self.boxes, self.regions = [], [], []
        xs = lambda p: [MARGIN + (j + 1) * DX for j in range(len(p))]
        row_y = lambda k: MARGIN + k * DY + DY / 2
        for k, p in enumerate(paths):
            y = row_y(k)
            pos = xs(p)
            bounds = [MARGIN] + pos + [self.width - MARGIN]
            for j in range(len(p) + 1):
                self.regions.append(_Region(p.cell_at(j), bounds[j], bounds[j + 1],
                                            y - DY / 2, y + DY / 2))
        for k, layer in enumerate(d.layers):
            p_in, p_out = paths[k], paths[k + 1]
            x_in, x_out = xs(p_in), xs(p_out)
            y0, y1 = row_y(k), row_y(k + 1)
            ym = (y0 + y1) / 2
            off, nd, nc = layer.offset, len(layer.gen.dom), len(layer.gen.cod)
            touched = x_in[off:off + nd] + x_out[off:off + nc]
            if touched:
                bx0, bx1 = min(touched) - DX / 3, max(touched) + DX / 3
            else:
                left = x_in[off - 1] if off else MARGIN
                right = x_in[off] if off < len(x_in) else self.width - MARGIN
                mid = (left + right) / 2
                bx0, bx1 = mid - DX / 3, mid + DX / 3
            self.boxes.append(_Box(layer.gen.name, bx0, bx1, ym))
            for j, w in enumerate(layer.left):
                self.segments.append(_Segment(w.name, x_in[j], y0, x_out[j], y1))
            shift = nc - nd
            for j, w in enumerate(layer.right, off + nd):
                self.segments.append(_Segment(w.name, x_in[j], y0, x_out[j + shift], y1))
            for j in range(off, off + nd):
                self.segments.append(_Segment(p_in.names[j], x_in[j], y0, x_in[j], ym))
            for j in range(off, off + nc):
                self.segments.append(_Segment(p_out.names[j], x_out[j], ym, x_out[j], y1))
        top, bottom = paths[0], paths[-1]
        for j, x in enumerate(xs(top)):
            self.segments.append(_Segment(top.names[j], x, MARGIN, x, row_y(0)))
        for j, x in enumerate(xs(bottom)):
            self.segments.append(_Segment(bottom.names[j], x, row_y(len(paths) - 1), x,
                                          self.height - MARGIN))


def _n(x: float) -> str:
    return f"{x:.1f}".rstrip("0").rstrip(".")


def to_svg(d: SlicedDiagram, zero_cells=None) -> str:
    lay = Layout(d, zero_cells)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(lay.width)}" '
           f'height="{_n(lay.height)}" viewBox="0 0 {_n(lay.width)} {_n(lay.height)}">',
           '<g class="regions" stroke="none">']
    for r in lay.regions:
        out.append(f'<rect x="{_n(r.x0)}" y="{_n(r.y0)}" width="{_n(r.x1 - r.x0)}" '
                   f'height="{_n(r.y1 - r.y0)}" fill="{lay.colors[r.cell]}"/>')
    out.append('</g>')
    out.append('<g class="wires" fill="none" stroke="#222">')
    for s in lay.segments:
        style = ' stroke-width="3" stroke-dasharray="6 3"' if s.name in BOUNDARY_WIRES else ' stroke-width="1.5"'
        out.append(f'<line x1="{_n(s.x0)}" y1="{_n(s.y0)}" x2="{_n(s.x1)}" y2="{_n(s.y1)}"'
                   f'{style}><title>{escape(s.name)}</title></line>')
    out.append('</g>')
    out.append('<g class="layers" font-family="monospace" font-size="11" text-anchor="middle">')
    for b in lay.boxes:
        out.append(f'<rect x="{_n(b.x0)}" y="{_n(b.y - BOX_H / 2)}" width="{_n(b.x1 - b.x0)}" '
                   f'height="{BOX_H}" fill="#fff" stroke="#222"/>')
        out.append(f'<text x="{_n((b.x0 + b.x1) / 2)}" y="{_n(b.y + 4)}">{escape(b.label)}</text>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(d: SlicedDiagram, zero_cells=None) -> str:
    """Layers as nodes; each wire is an edge from the layer producing it to the one consuming it."""
    lines = ["digraph diagram {", "  rankdir=TB;", '  node [shape=box, fontname="monospace"];',
             '  in [shape=point]; out [shape=point];']
    producers = ["in"] * len(d.domain)
    for k, layer in enumerate(d.layers):
        lines.append(f"  L{k} [label={_dot_id(layer.gen.name)}];")
    edges = []
    for k, layer in enumerate(d.layers):
        off, nd, nc = layer.offset, len(layer.gen.dom), len(layer.gen.cod)
        for j in range(off, off + nd):
            style = ", style=bold" if layer.input[j].name in BOUNDARY_WIRES else ""
            edges.append(f"  {producers[j]} -> L{k} [label={_dot_id(layer.input[j].name)}{style}];")
        producers[off:off + nd] = [f"L{k}"] * nc
    for j, w in enumerate(d.codomain.wires):
        style = ", style=bold" if w.name in BOUNDARY_WIRES else ""
        edges.append(f"  {producers[j]} -> out [label={_dot_id(w.name)}{style}];")
    lines += edges
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tikz_escape(s: str) -> str:
    out = []
    for ch in s:
        if ch in "_^&%$#{}":
            out.append("\\" + ch if ch not in "^" else "\\^{}")
        elif ord(ch) > 127:
            out.append(f"\\symbol{{{ord(ch)}}}")
        else:
            out.append(ch)
    return "".join(out)


def to_tikz(d: SlicedDiagram, zero_cells=None) -> str:
    lay = Layout(d, zero_cells)
    scale = 1 / DX
    c = lambda x, y: f"({_n(x * scale)},{_n(-y * scale)})"
    out = ["\\begin{tikzpicture}"]
    for k, cell in enumerate(lay.colors):
        out.append(f"\\definecolor{{cell{k}}}{{HTML}}{{{lay.colors[cell][1:].upper()}}}")
    index = {cell: k for k, cell in enumerate(lay.colors)}
    for r in lay.regions:
        out.append(f"\\fill[cell{index[r.cell]}] {c(r.x0, r.y0)} rectangle {c(r.x1, r.y1)};")
    for s in lay.segments:
        style = "very thick, dashed" if s.name in BOUNDARY_WIRES else "thick"
        out.append(f"\\draw[{style}] {c(s.x0, s.y0)} -- {c(s.x1, s.y1)};")
    for b in lay.boxes:
        h = BOX_H / 2
        out.append(f"\\draw[fill=white] {c(b.x0, b.y - h)} rectangle {c(b.x1, b.y + h)};")
        out.append(f"\\node at {c((b.x0 + b.x1) / 2, b.y)} {{\\texttt{{{_tikz_escape(b.label)}}}}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def render(d: SlicedDiagram, fmt: str = "svg", zero_cells=None) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return {"svg": to_svg, "dot": to_dot, "tikz": to_tikz}[fmt](d, zero_cells)

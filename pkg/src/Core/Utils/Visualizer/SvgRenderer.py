from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple
from io import BytesIO
from numpy import cos, sin, pi, arange
import networkx as nx
from matplotlib import rc_context
from matplotlib.figure import Figure
from matplotlib.patches import Circle, FancyArrowPatch, Polygon

# Disc colors of the AR quiver renderings
COLORS = {'A': '#d62728', 'SigmaF': '#2ca02c', 'extra': '#17becf', 'other': '#ffffff'}

# Fixed salt and metadata, so that identical inputs give identical documents
SVG_PARAMS = {'svg.hashsalt': 'negcat', 'svg.fonttype': 'none'}
SVG_METADATA = {'Date': None, 'Creator': 'NegCat'}


def _document(fig: Figure) -> str:
    buffer = BytesIO()
    with rc_context(SVG_PARAMS):
        fig.savefig(buffer, format='svg', metadata=SVG_METADATA, facecolor='#ffffff')
    return buffer.getvalue().decode('utf-8')


def polygon_vertices(size: int, radius: float = 1.0) -> List[Tuple[float, float]]:
    """
    Positions of the vertices 0, ..., size-1 of the polygon, clockwise from the top vertex.
    """

    angles = pi / 2 - 2 * pi * arange(size) / size
    return [(radius * float(cos(t)), radius * float(sin(t))) for t in angles]


def render_polygon(size: int,
                   diagonals: Iterable[Tuple[int, int]] = (),
                   highlights: Iterable[Tuple[int, int]] = ()) -> str:
    """
    SVG document of the polygon with labelled vertices and the given diagonals drawn as chords. Highlighted
    diagonals are drawn in red, the others in black. Every chord is a group with id 'chord-a-b' and every vertex
    label a group with id 'label-i'.

    :param size: Number of vertices.
    :param diagonals: Pairs (a, b) of vertices.
    :param highlights: Pairs drawn in the highlight color.
    :return: SVG document.
    """

    if size < 3:
        raise ValueError(f"[SvgRenderer] A polygon needs at least 3 vertices, get {size}")
    highlighted = {tuple(sorted(d)) for d in highlights}
    chords = sorted({tuple(sorted(d)) for d in diagonals} | highlighted)
    for a, b in chords:
        if not (0 <= a < size and 0 <= b < size) or a == b:
            raise ValueError(f"[SvgRenderer] ({a},{b}) is not a diagonal of the {size}-gon")
    vertices = polygon_vertices(size)
    labels = polygon_vertices(size, radius=1.1)

    fig = Figure(figsize=(5, 5))
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    ax.set_aspect('equal')
    ax.set_axis_off()
    outline = Polygon(vertices, closed=True, fill=False, edgecolor='#7f7f7f', linewidth=1.5)
    outline.set_gid('outline')
    ax.add_patch(outline)
    for a, b in chords:
        color = COLORS['A'] if (a, b) in highlighted else '#000000'
        (x1, y1), (x2, y2) = vertices[a], vertices[b]
        line, = ax.plot([x1, x2], [y1, y2], color=color, linewidth=2)
        line.set_gid(f'chord-{a}-{b}')
    xs, ys = zip(*vertices)
    ax.plot(xs, ys, linestyle='none', marker='o', markersize=3, color='#000000')
    for i, (x, y) in enumerate(labels):
        text = ax.text(x, y, str(i), fontsize=9, ha='center', va='center')
        text.set_gid(f'label-{i}')
    return _document(fig)


def render_ar(graph: nx.DiGraph,
              colors: Optional[Dict[Any, str]] = None,
              label: Callable[[Any], str] = str) -> str:
    """
    SVG document of an AR quiver laid out on its mesh coordinates, columns to the right and rows upwards. Every
    vertex is a disc filled with its color, white by default. Discs are groups with ids 'disc-i' and arrows groups
    with ids 'arrow-i', both numbered in drawing order.

    :param graph: AR quiver with 'col' and 'row' vertex attributes.
    :param colors: Fill color of the vertices.
    :param label: Text of a vertex.
    :return: SVG document.
    """

    colors = {} if colors is None else colors
    if graph.number_of_nodes() == 0:
        fig = Figure(figsize=(1, 1))
        fig.add_axes((0, 0, 1, 1)).set_axis_off()
        return _document(fig)
    cols = [data['col'] for _, data in graph.nodes(data=True)]
    rows = [data['row'] for _, data in graph.nodes(data=True)]
    width, height = max(cols) - min(cols) + 2, max(rows) - min(rows) + 2

    def position(v: Any) -> Tuple[float, float]:
        data = graph.nodes[v]
        return float(data['col']), float(data['row'])

    fig = Figure(figsize=(0.6 * width, 0.6 * height))
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(min(cols) - 1, max(cols) + 1)
    ax.set_ylim(min(rows) - 1, max(rows) + 1)
    ax.set_aspect('equal')
    ax.set_axis_off()
    # Arrows between columns c and c + 1 only, the wrap-around of the orbit is not drawn
    edges = [(u, v) for u, v in graph.edges() if graph.nodes[v]['col'] == graph.nodes[u]['col'] + 1]
    for i, (u, v) in enumerate(sorted(edges, key=lambda e: (position(e[0]), position(e[1])))):
        arrow = FancyArrowPatch(position(u), position(v), arrowstyle='-|>', mutation_scale=6, color='#7f7f7f',
                                linewidth=0.8, shrinkA=13, shrinkB=13)
        arrow.set_gid(f'arrow-{i}')
        ax.add_patch(arrow)
    for i, v in enumerate(sorted(graph.nodes(), key=position)):
        disc = Circle(position(v), radius=0.3, facecolor=colors.get(v, COLORS['other']), edgecolor='#000000',
                      linewidth=0.8)
        disc.set_gid(f'disc-{i}')
        ax.add_patch(disc)
        ax.text(*position(v), label(v), fontsize=5, ha='center', va='center')
    return _document(fig)


def subcategory_colors(members: Iterable[Any], shifted: Iterable[Any], extra: Iterable[Any]) -> Dict[Any, str]:
    """Colors of the A / Sigma F / extra partition of an intermediate category."""
    colors = {x: COLORS['extra'] for x in extra}
    colors.update({x: COLORS['SigmaF'] for x in shifted})
    colors.update({x: COLORS['A'] for x in members})
    return colors

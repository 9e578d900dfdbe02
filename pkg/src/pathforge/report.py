"""Figure rendering for the CLI report path.

Graphs are drawn with a layered layout (rows by distance from a root, one
block per component) and written straight to an image file, so reports can
carry a picture next to the delimited output without a display server.
"""

from __future__ import annotations

from matplotlib.figure import Figure

from .graph import Graph, bfs_layering, components

HIGHLIGHT_COLORS = ("#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")
BASE_COLOR = "#4878a8"
EDGE_COLOR = "#9aa5b1"


def layered_positions(g: Graph) -> dict[int, tuple[float, float]]:
    """Layered coordinates: one column block per component, rows by BFS depth."""
    pos: dict[int, tuple[float, float]] = {}
    x_offset = 0.0
    for comp in components(g):
        root = min(comp)
        layering = bfs_layering(g, root)
        widest = max(len(layer) for layer in layering.layers)
        for depth, layer in enumerate(layering.layers):
            ordered = sorted(layer)
            span = len(ordered)
            for i, v in enumerate(ordered):
                x = x_offset + i - span / 2.0 + widest / 2.0
                pos[v] = (x, -float(depth))
        x_offset += widest + 2.0
    return pos


def render_graph(g: Graph, path: str, highlights: dict[str, frozenset[int]] | None = None,
                 title: str | None = None) -> None:
    """Draw the graph to an image file, colouring any highlight sets."""
    pos = layered_positions(g)
    fig = Figure(figsize=(max(4.0, min(16.0, 0.6 * g.n ** 0.5 * 4)), 6.0))
    ax = fig.add_subplot(1, 1, 1)
    for u, v in g.edges():
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color=EDGE_COLOR, linewidth=0.8, zorder=1)
    color = {v: BASE_COLOR for v in g.vertices}
    labels = []
    for i, (name, vs) in enumerate(sorted((highlights or {}).items())):
        c = HIGHLIGHT_COLORS[i % len(HIGHLIGHT_COLORS)]
        labels.append((name, c))
        for v in vs:
            if v in color:
                color[v] = c
    xs = [pos[v][0] for v in g.vertices]
    ys = [pos[v][1] for v in g.vertices]
    ax.scatter(xs, ys, c=[color[v] for v in g.vertices], s=60 if g.n <= 200 else 14,
               zorder=2, edgecolors="white", linewidths=0.5)
    if g.n <= 60:
        for v in g.vertices:
            ax.annotate(str(v), pos[v], fontsize=7, ha="center", va="center", zorder=3)
    for name, c in labels:
        ax.scatter([], [], c=c, label=name)
    if labels:
        ax.legend(loc="upper right", fontsize=8)
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)

from __future__ import annotations
from typing import Dict, Optional, Tuple

import matplotlib.pyplot as plt
import networkx as nx

from algorithms.csp_lib.instance import Instance
from algorithms.csp_lib.pattern import Pattern, Sign


def _draw(graph: nx.Graph, pos: Dict, title: str, ax: Optional[plt.Axes]) -> plt.Axes:
    if ax is None:
        _, ax = plt.subplots()
    positive = [(u, v) for u, v, s in graph.edges(data="sign") if s is Sign.POSITIVE]
    negative = [(u, v) for u, v, s in graph.edges(data="sign") if s is Sign.NEGATIVE]
    nx.draw_networkx_nodes(graph, pos, ax=ax, node_size=300, node_color='skyblue')
    nx.draw_networkx_labels(graph, pos, ax=ax, labels=nx.get_node_attributes(graph, "label"), font_size=8)
    nx.draw_networkx_edges(graph, pos, ax=ax, edgelist=positive, edge_color='k')
    nx.draw_networkx_edges(graph, pos, ax=ax, edgelist=negative, edge_color='r', style='dashed')
    ax.set_title(title)
    ax.set_axis_off()
    return ax


def render_pattern(pattern: Pattern, ax: Optional[plt.Axes] = None) -> plt.Axes:
    """
    Draw a pattern: one column per variable, left to right, points bottom to top,
    positive edges solid, negative edges dashed red.

    :param pattern: The pattern to draw.
    :param ax: Axes to draw on; a new figure is created when omitted.
    :return: The axes drawn on.
    """
    graph = nx.Graph()
    pos: Dict[Tuple[str, str], Tuple[float, float]] = {}
    for column, var in enumerate(pattern.variables):
        for row, pid in enumerate(pattern.points(var)):
            graph.add_node((var, pid), label=pid)
            pos[(var, pid)] = (float(column), float(row))
    for p, q, sign in pattern.edges():
        graph.add_edge(p, q, sign=sign)
    return _draw(graph, pos, pattern.name or "pattern", ax)


def render_instance(instance: Instance, ax: Optional[plt.Axes] = None) -> plt.Axes:
    """
    Draw the microstructure of an instance. Only non-trivial constraints are drawn, with
    their forbidden pairs as dashed edges and allowed pairs as solid ones.
    """
    graph = nx.Graph()
    pos = {}
    for column, x in enumerate(instance.variables):
        for row, v in enumerate(sorted(instance.domain(x))):
            graph.add_node((x, v), label="{}={}".format(instance.name(x), v))
            pos[(x, v)] = (float(column), float(row))
    for x, y in instance.scopes():
        for a in sorted(instance.domain(x)):
            for b in sorted(instance.domain(y)):
                sign = Sign.POSITIVE if instance.allowed(x, a, y, b) else Sign.NEGATIVE
                graph.add_edge((x, a), (y, b), sign=sign)
    return _draw(graph, pos, "microstructure", ax)

"""
Simple undirected graphs with dense integer labels 0..n-1, and the butterfly family built from a seed graph.

Every graph returned here is a frozen networkx.Graph, so it can be shared freely between scenarios.
"""
import logging
from dataclasses import dataclass
from numbers import Integral
from typing import Optional

import networkx as nx

from exceptions import InvalidArgumentError, NoPathError

logger = logging.getLogger(__name__)


def make_graph(n, edges):
    """
    Builds a frozen simple graph on the vertices 0..n-1.
    :param n: vertex count
    :param edges: iterable of (u, v) pairs
    :return: frozen networkx.Graph
    """
    if n < 0:
        raise InvalidArgumentError(f"vertex count must be non-negative, got {n}")
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidArgumentError(f"edge ({u}, {v}) references a vertex outside [0, {n})")
        if u == v:
            raise InvalidArgumentError(f"self-loop at vertex {u}")
        if graph.has_edge(u, v):
            raise InvalidArgumentError(f"duplicate edge ({u}, {v})")
        graph.add_edge(u, v)
    return nx.freeze(graph)


def vertex_count(graph):
    return graph.number_of_nodes()


def edge_count(graph):
    return graph.number_of_edges()


def is_connected(graph):
    return graph.number_of_nodes() > 0 and nx.is_connected(graph)


def build_path(n):
    """
    The path graph P_n: vertices 0..n-1 and edges (i, i+1).
    :param n: number of vertices, at least 1
    :return: frozen networkx.Graph
    """
    if n < 1:
        raise InvalidArgumentError(f"a path needs at least one vertex, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def build_butterfly(seed, k):
    """
    Attaches k wings to the body B_0 = seed.
    Wing j (1 <= j <= k) takes the labels j*n .. (j+1)*n - 1, carries a shifted copy of the seed's edges
    and is joined to the body by the edges (i, j*n + i).
    :param seed: simple graph labeled 0..n-1
    :param k: number of wings
    :return: frozen networkx.Graph with (k+1)n vertices and (k+1)m + kn edges
    """
    if k < 0:
        raise InvalidArgumentError(f"wing count must be non-negative, got {k}")
    n = seed.number_of_nodes()
    if sorted(seed.nodes()) != list(range(n)):
        raise InvalidArgumentError("seed vertices must be labeled 0..n-1")
    if nx.number_of_selfloops(seed) > 0:
        raise InvalidArgumentError("seed graph must be simple")

    seed_edges = [(u, v) for u, v in seed.edges()]
    edges = list(seed_edges)
    for j in range(1, k + 1):
        offset = j * n
        edges.extend((u + offset, v + offset) for u, v in seed_edges)
        edges.extend((i, offset + i) for i in range(n))
    return make_graph((k + 1) * n, edges)


def check_vertex(graph, v):
    if not (isinstance(v, Integral) and 0 <= v < graph.number_of_nodes()):
        raise InvalidArgumentError(f"vertex {v} is outside [0, {graph.number_of_nodes()})")


def degree(graph, v):
    check_vertex(graph, v)
    return graph.degree[v]


def distance(graph, u, v):
    """
    Length of the shortest path between u and v (breadth-first, unweighted).
    """
    check_vertex(graph, u)
    check_vertex(graph, v)
    try:
        return nx.shortest_path_length(graph, u, v)
    except nx.NetworkXNoPath:
        raise NoPathError(f"no path between {u} and {v}") from None


def diameter(graph):
    if not is_connected(graph):
        raise NoPathError("diameter is undefined on a disconnected graph")
    return nx.diameter(graph)


def bipartition(graph):
    """
    Two-colors the graph by breadth-first search.
    :param graph: networkx.Graph
    :return: (part containing the smallest vertex, other part) as frozensets, or None if there is an odd cycle
    """
    try:
        colors = nx.bipartite.color(graph)
    except nx.NetworkXError:
        return None
    first = frozenset(v for v, c in colors.items() if c == colors.get(0, 1))
    second = frozenset(graph.nodes()) - first
    return first, second


def same_partite(graph, u, v):
    """
    Whether u and v are on the same side of the bipartition, None for a graph with an odd cycle.
    """
    parts = bipartition(graph)
    if parts is None:
        return None
    return (u in parts[0]) == (v in parts[0])


@dataclass(frozen=True)
class Placement:
    sender_location: Optional[str]
    receiver_location: Optional[str]
    same_partite: Optional[bool]
    distance: int


def location(v, seed_n):
    if seed_n is None:
        return None
    wing = v // seed_n
    return "body" if wing == 0 else f"wing {wing}"


def describe_placement(graph, seed_n, s, r):
    """
    Classifies a sender/receiver placement on a butterfly graph the way the case studies do:
    body or wing for each end, same or different partite set, and their distance.
    :param seed_n: vertex count of the seed, or None for a graph that is not a butterfly (no locations)
    """
    if seed_n is not None and seed_n < 1:
        raise InvalidArgumentError(f"seed size must be positive, got {seed_n}")
    return Placement(location(s, seed_n), location(r, seed_n), same_partite(graph, s, r), distance(graph, s, r))


def read_edge_list(file_path):
    """
    Reads a graph from the edge-list text format: a header line "n <count>", then one "u v" pair per line.
    Blank lines and '#' comments are ignored.
    :param file_path: path of the edge-list file
    :return: frozen networkx.Graph
    """
    with open(file_path, "r") as edge_file:
        lines = [line.split("#", 1)[0].strip() for line in edge_file]
    lines = [line for line in lines if line]
    if not lines:
        raise InvalidArgumentError(f"{file_path}: empty edge list")

    header = lines[0].split()
    if len(header) != 2 or header[0] != "n" or not header[1].isdigit():
        raise InvalidArgumentError(f"{file_path}: expected header 'n <count>', got '{lines[0]}'")

    try:
        parsed = nx.parse_edgelist(lines[1:], nodetype=int, data=False)
    except (TypeError, ValueError) as e:
        raise InvalidArgumentError(f"{file_path}: {e}") from None
    if parsed.number_of_edges() != len(lines) - 1:
        raise InvalidArgumentError(f"{file_path}: malformed or duplicate edges in edge list")

    graph = make_graph(int(header[1]), parsed.edges())
    logger.debug("read %d vertices and %d edges from %s", vertex_count(graph), edge_count(graph), file_path)
    return graph


def write_edge_list(graph, file_path):
    with open(file_path, "w") as edge_file:
        edge_file.write(f"n {graph.number_of_nodes()}\n")
        for u, v in sorted(tuple(sorted(edge)) for edge in graph.edges()):
            edge_file.write(f"{u} {v}\n")

"""Simple graphs, labelings, orientations, colorings, and enumerations.

Vertices are 0-based integers.  A labeling is a tuple ``lab`` with
``lab[v]`` the label of vertex ``v``, the labels being a permutation of
1..n.  An orientation is a tuple of directed pairs aligned with
``g.edges``.  A coloring is a tuple ``col`` with ``col[v]`` the color of
vertex ``v`` (colors 1-based).
"""

import heapq
import os
from itertools import permutations, product

__all__ = [
    "CapExceeded",
    "GraphFormatError",
    "Graph",
    "star",
    "cycle",
    "path",
    "from_edge_list",
    "disjoint_union",
    "delete_edge",
    "contract_edge",
    "near_contract",
    "is_internal",
    "lies_on_cycle",
    "is_connected",
    "enumerate_labelings",
    "enumerate_acyclic_orientations",
    "enumerate_proper_colorings",
    "enumerate_trees",
    "ascents_labeled",
    "ascents_oriented",
    "coloring_composition",
    "star_representative_labeling",
    "graph_to_json",
    "graph_from_json",
    "effective_cap",
]

EDGE_CAP = 22


class CapExceeded(ValueError):
    """An enumeration would exceed its configured size cap."""


class GraphFormatError(ValueError):
    """Malformed graph JSON."""


def effective_cap(default):
    """Vertex-count cap, overridable through the TCHROM_MAX_N variable."""
    value = os.environ.get("TCHROM_MAX_N")
    if value:
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"TCHROM_MAX_N must be an integer, got {value!r}") from None
    return default


class Graph:
    """An undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        self.n = n
        self.edges = tuple(sorted(canon))
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(s) for s in adj)

    def degree(self, v):
        return len(self.adj[v])

    def edge_index(self, e):
        """Position of edge ``e`` (unordered) in the canonical edge list."""
        u, v = e
        key = (u, v) if u < v else (v, u)
        try:
            return self.edges.index(key)
        except ValueError:
            raise ValueError(f"edge {key} not in graph") from None

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def star(n):
    """Star with root vertex 0 and n-1 leaves."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph(n, [(0, v) for v in range(1, n)])


def cycle(n):
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n):
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def from_edge_list(n, pairs):
    return Graph(n, pairs)


def disjoint_union(g, h):
    """Disjoint union, with h's vertices shifted up by g.n."""
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


def delete_edge(g, e):
    i = g.edge_index(e)
    return Graph(g.n, g.edges[:i] + g.edges[i + 1 :])


def contract_edge(g, e):
    """Merge the endpoints of ``e`` into a new last vertex, keeping the
    graph simple (parallel edges collapse, the contracted edge vanishes)."""
    g.edge_index(e)
    u, v = min(e), max(e)
    remap = {}
    for w in range(g.n):
        if w not in (u, v):
            remap[w] = len(remap)
    merged = g.n - 2
    remap[u] = remap[v] = merged
    new_edges = set()
    for a, b in g.edges:
        x, y = remap[a], remap[b]
        if x != y:
            new_edges.add((min(x, y), max(x, y)))
    return Graph(g.n - 1, sorted(new_edges))


def near_contract(g, e):
    """Contract ``e`` and hang a new pendant vertex off the merged vertex.

    Returns the resulting graph together with the pendant (leaf) edge.
    """
    contracted = contract_edge(g, e)
    merged, pendant = g.n - 2, g.n - 1
    result = Graph(g.n, list(contracted.edges) + [(merged, pendant)])
    return result, (merged, pendant)


def is_internal(g, e):
    """Both endpoints have degree at least 2."""
    g.edge_index(e)
    u, v = e
    return g.degree(u) >= 2 and g.degree(v) >= 2


def lies_on_cycle(g, e):
    """Whether the endpoints of ``e`` stay connected after deleting it."""
    u, v = min(e), max(e)
    stripped = delete_edge(g, e)
    seen = {u}
    frontier = [u]
    while frontier:
        w = frontier.pop()
        for x in stripped.adj[w]:
            if x not in seen:
                if x == v:
                    return True
                seen.add(x)
                frontier.append(x)
    return False


def is_connected(g):
    if g.n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        w = frontier.pop()
        for x in g.adj[w]:
            if x not in seen:
                seen.add(x)
                frontier.append(x)
    return len(seen) == g.n


def enumerate_labelings(g):
    """All n! labelings, as tuples indexed by vertex."""
    cap = effective_cap(8)
    if g.n > cap:
        raise CapExceeded(f"labeling enumeration capped at {cap} vertices, got {g.n}")
    return iter(permutations(range(1, g.n + 1)))


def _is_acyclic(n, arcs):
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    done = 0
    while ready:
        v = ready.pop()
        done += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return done == n


def enumerate_acyclic_orientations(g):
    """All acyclic orientations, each as a tuple of directed pairs aligned
    with ``g.edges`` (tries all 2^|E| direction masks)."""
    m = len(g.edges)
    if m > EDGE_CAP:
        raise CapExceeded(f"orientation enumeration capped at {EDGE_CAP} edges, got {m}")

    def stream():
        for mask in range(1 << m):
            arcs = tuple(
                (u, v) if mask >> i & 1 else (v, u) for i, (u, v) in enumerate(g.edges)
            )
            if _is_acyclic(g.n, arcs):
                yield arcs

    return stream()


def enumerate_proper_colorings(g, ell):
    """All proper colorings of ``g`` that use each color 1..ell at least
    once, generated by backtracking with a surjectivity post-filter."""
    if not 1 <= ell <= g.n:
        raise ValueError(f"color count must be between 1 and {g.n}, got {ell}")
    n = g.n
    earlier = [[u for u in g.adj[v] if u < v] for v in range(n)]
    col = [0] * n

    def stream(v):
        if v == n:
            if len(set(col)) == ell:
                yield tuple(col)
            return
        for c in range(1, ell + 1):
            if all(col[u] != c for u in earlier[v]):
                col[v] = c
                yield from stream(v + 1)
        col[v] = 0

    return stream(0)


def ascents_labeled(g, lab, col):
    """Edges whose endpoints increase in label and in color together."""
    count = 0
    for u, v in g.edges:
        if lab[u] < lab[v]:
            count += col[u] < col[v]
        else:
            count += col[v] < col[u]
    return count


def ascents_oriented(g, orientation, col):
    """Directed edges whose head color exceeds their tail color."""
    return sum(col[a] < col[b] for a, b in orientation)


def coloring_composition(col):
    """Color-class sizes in color order."""
    if not col:
        return ()
    sizes = [0] * max(col)
    for c in col:
        sizes[c - 1] += 1
    return tuple(sizes)


def enumerate_trees(n):
    """All labeled trees on n vertices, decoded from Prufer sequences."""
    cap = effective_cap(8)
    if not 1 <= n <= cap:
        raise CapExceeded(f"tree enumeration capped at {cap} vertices, got {n}")
    if n == 1:
        return iter([Graph(1, [])])
    if n == 2:
        return iter([Graph(2, [(0, 1)])])

    def decode(seq):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        leaves = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(leaves)
        edges = []
        for x in seq:
            leaf = heapq.heappop(leaves)
            edges.append((leaf, x))
            degree[x] -= 1
            if degree[x] == 1:
                heapq.heappush(leaves, x)
        a = heapq.heappop(leaves)
        b = heapq.heappop(leaves)
        edges.append((a, b))
        return Graph(n, edges)

    return (decode(seq) for seq in product(range(n), repeat=n - 2))


def star_representative_labeling(n, r):
    """The labeling of star(n) with root label r and the leaf labels
    1..n without r handed out in increasing vertex order."""
    if not 1 <= r <= n:
        raise ValueError(f"root label must be between 1 and {n}")
    lab = [0] * n
    lab[0] = r
    for v in range(1, n):
        lab[v] = v if v < r else v + 1
    return tuple(lab)


def graph_to_json(g):
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(data):
    if not isinstance(data, dict):
        raise GraphFormatError("graph JSON must be an object")
    if "n" not in data or "edges" not in data:
        raise GraphFormatError('graph JSON needs "n" and "edges" fields')
    n = data["n"]
    edges = data["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError('"n" must be an integer')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be a list of vertex pairs')
    pairs = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise GraphFormatError(f"edge entry {item!r} is not a pair of integers")
        pairs.append((item[0], item[1]))
    try:
        return Graph(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None

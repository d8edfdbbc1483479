"""(n,k)-star graph backbone.

Super nodes are identified by injective k-tuples over {1..n}.  Two labels are
adjacent when one is obtained from the other either by swapping the first
symbol with the symbol in position s (2 <= s <= k), or by replacing the first
symbol with one of the n-k symbols absent from the label.  Every node
therefore has exactly n-1 neighbors, the graph is vertex transitive, and
shortest routes can be found by relabeling symbols so that the destination
becomes the canonical node 12...k.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import permutations

Label = tuple[int, ...]

INTRA = "intra"
INTER = "inter"


class StarGraphError(ValueError):
    """Invalid (n, k) parameters or label."""


@dataclass(frozen=True)
class StarGraphSpec:
    """Size parameters of an (n, k)-star graph."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or not (1 <= self.k <= self.n - 1):
            raise StarGraphError(
                f"invalid star graph parameters n={self.n}, k={self.k}: need n >= 2 and 1 <= k <= n-1"
            )

    @property
    def node_count(self) -> int:
        return math.factorial(self.n) // math.factorial(self.n - self.k)

    @property
    def degree(self) -> int:
        return self.n - 1

    @property
    def sector_size(self) -> int:
        """Number of labels sharing one fixed last symbol."""
        return math.factorial(self.n - 1) // math.factorial(self.n - self.k)


def validate_label(spec: StarGraphSpec, label: Label) -> None:
    if len(label) != spec.k:
        raise StarGraphError(f"label {label} has length {len(label)}, expected k={spec.k}")
    if len(set(label)) != len(label):
        raise StarGraphError(f"label {label} has repeated symbols")
    if any(not (1 <= p <= spec.n) for p in label):
        raise StarGraphError(f"label {label} has symbols outside 1..{spec.n}")


def format_label(label: Label) -> str:
    """Render a label as a digit string (dash-separated when symbols exceed 9)."""
    if all(p <= 9 for p in label):
        return "".join(str(p) for p in label)
    return "-".join(str(p) for p in label)


def parse_label(text: str) -> Label:
    if "-" in text:
        return tuple(int(p) for p in text.split("-"))
    return tuple(int(c) for c in text)


def enumerate_nodes(spec: StarGraphSpec) -> list[Label]:
    """All injective k-tuples over {1..n}, in lexicographic order."""
    return list(permutations(range(1, spec.n + 1), spec.k))


def neighbors(spec: StarGraphSpec, label: Label) -> list[Label]:
    """Adjacent labels: position swaps (ascending s) then symbol replacements
    (ascending replacement symbol)."""
    validate_label(spec, label)
    out: list[Label] = []
    for s in range(1, spec.k):
        swapped = list(label)
        swapped[0], swapped[s] = swapped[s], swapped[0]
        out.append(tuple(swapped))
    present = set(label)
    tail = label[1:]
    for sym in range(1, spec.n + 1):
        if sym not in present:
            out.append((sym,) + tail)
    return out


def renaming_map(spec: StarGraphSpec, target: Label) -> dict[int, int]:
    """Symbol bijection sending the target label to the canonical 12...k.

    target's i-th symbol maps to i; the remaining symbols map onto
    {k+1..n} in ascending order.  Applying the map symbol-wise to every
    node is a graph automorphism.
    """
    validate_label(spec, target)
    sigma = {p: i + 1 for i, p in enumerate(target)}
    rest = sorted(set(range(1, spec.n + 1)) - set(target))
    for j, p in enumerate(rest):
        sigma[p] = spec.k + 1 + j
    return sigma


def apply_renaming(sigma: dict[int, int], label: Label) -> Label:
    return tuple(sigma[p] for p in label)


def invert_renaming(sigma: dict[int, int]) -> dict[int, int]:
    return {v: u for u, v in sigma.items()}


def edge_class(a: Label, b: Label) -> str:
    """inter when the two labels differ in the last position, intra otherwise."""
    return INTER if a[-1] != b[-1] else INTRA


class StarGraph:
    """Immutable node/adjacency structure of one (n, k)-star graph.

    Nodes are indexed in lexicographic label order; adjacency lists hold node
    indices ordered by neighbor label.
    """

    def __init__(self, spec: StarGraphSpec):
        self.spec = spec
        self.nodes: list[Label] = enumerate_nodes(spec)
        self.index: dict[Label, int] = {lab: i for i, lab in enumerate(self.nodes)}
        self.adjacency: list[list[int]] = []
        for lab in self.nodes:
            nbr_idx = sorted(self.index[nb] for nb in neighbors(spec, lab))
            self.adjacency.append(nbr_idx)

    def __len__(self) -> int:
        return len(self.nodes)

    def neighbor_labels(self, label: Label) -> list[Label]:
        return neighbors(self.spec, label)

    def has_edge(self, a: Label, b: Label) -> bool:
        return self.index[b] in self.adjacency[self.index[a]]

    def edges(self):
        """Yield (label_a, label_b, class) once per undirected edge."""
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if i < j:
                    a, b = self.nodes[i], self.nodes[j]
                    yield a, b, edge_class(a, b)

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == len(self.nodes)

    def distances_from(self, v: Label) -> dict[Label, int]:
        """Hop distance from v to every node (plain breadth-first search)."""
        start = self.index[v]
        dist = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return {self.nodes[i]: d for i, d in dist.items()}


def shortest_path(graph: StarGraph, src: Label, dst: Label) -> list[Label]:
    """Minimum-hop path from src to dst, as a label sequence including both ends.

    The search relabels the graph so dst becomes the canonical node 12...k,
    runs breadth-first search toward it expanding neighbors in lexicographic
    order (deterministic tie-break), and maps the found path back.
    """
    spec = graph.spec
    validate_label(spec, src)
    validate_label(spec, dst)
    if src == dst:
        return [src]
    sigma = renaming_map(spec, dst)
    inv = invert_renaming(sigma)
    start = apply_renaming(sigma, src)
    target = tuple(range(1, spec.k + 1))
    parent: dict[Label, Label | None] = {start: None}
    queue = deque([start])
    found = start == target
    while queue and not found:
        u = queue.popleft()
        for v in sorted(neighbors(spec, u)):
            if v not in parent:
                parent[v] = u
                if v == target:
                    found = True
                    break
                queue.append(v)
    path = []
    cur: Label | None = target
    while cur is not None:
        path.append(cur)
        cur = parent[cur]
    path.reverse()
    return [apply_renaming(inv, lab) for lab in path]


def diameter_formula(spec: StarGraphSpec) -> int:
    """Closed form for the maximum shortest-path length."""
    if spec.k <= spec.n // 2:
        return 2 * spec.k - 1
    return (spec.n - 1) // 2 + spec.k


def distance_sum(graph: StarGraph, v: Label) -> int:
    """Sum of hop distances from v to every other node."""
    return sum(graph.distances_from(v).values())


def forwarding_factor(graph: StarGraph, v: Label) -> int:
    """Per-node shortest-path load: distance sum minus the node degree."""
    return distance_sum(graph, v) - (graph.spec.n - 1)


def write_edge_list(graph: StarGraph, path) -> None:
    """Dump the edge list as one `label,label,class` line per edge."""
    with open(path, "w") as fh:
        for a, b, cls in graph.edges():
            fh.write(f"{format_label(a)},{format_label(b)},{cls}\n")

"""Ray sets, their orthogonality graphs, and exact combinatorics on those graphs."""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .config import DEFAULT_TOLS
from .errors import DimensionMismatchError, InvalidObjectError, LimitExceededError
from .linalg import as_vector, inner_product, norm

log = logging.getLogger(__name__)

EXACT_SEARCH_LIMIT = 32


@dataclass(frozen=True, eq=False)
class RaySet:
    dimension: int
    labels: tuple
    vectors: tuple

    def __post_init__(self):
        if self.dimension < 2:
            raise DimensionMismatchError(f"dimension must be at least 2, got {self.dimension}")
        if len(self.labels) != len(self.vectors):
            raise ValueError("labels and vectors differ in length")
        if len(set(self.labels)) != len(self.labels):
            dup = next(l for l in self.labels if self.labels.count(l) > 1)
            raise InvalidObjectError(f"duplicate ray label {dup!r}", label=dup)

    @classmethod
    def from_pairs(cls, pairs, dimension=None, tols=DEFAULT_TOLS, auto_normalize=False):
        """Validate ``(label, components)`` pairs into a ray set.

        Every vector must be normalized within ``tols.norm``. With
        ``auto_normalize`` a vector whose norm is off by less than
        ``tols.auto_normalize_max`` is rescaled (and a warning logged);
        anything further off is rejected regardless.
        """
        pairs = list(pairs)
        if dimension is None:
            if not pairs:
                raise ValueError("cannot infer dimension of an empty ray set")
            dimension = len(pairs[0][1])
        labels, vectors = [], []
        for label, comps in pairs:
            label = str(label)
            try:
                v = as_vector(comps, dimension)
            except DimensionMismatchError as exc:
                raise DimensionMismatchError(f"ray {label!r}: {exc}") from None
            n = norm(v)
            if abs(n * n - 1.0) > tols.norm:
                if auto_normalize and abs(n - 1.0) < tols.auto_normalize_max:
                    log.warning("ray %r has norm %.12g; rescaling", label, n)
                    v = as_vector(v / n)
                else:
                    raise InvalidObjectError(f"ray {label!r} is not normalized (norm {n:.12g})", label=label)
            labels.append(label)
            vectors.append(v)
        return cls(dimension, tuple(labels), tuple(vectors))

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, label):
        return self.vectors[self.labels.index(label)]

    def rotated(self, unitary):
        u = np.asarray(unitary)
        if u.shape != (self.dimension, self.dimension):
            raise DimensionMismatchError(f"unitary of shape {u.shape} does not act on C^{self.dimension}")
        return RaySet(self.dimension, self.labels, tuple(as_vector(u @ v) for v in self.vectors))


def builtin_paper_rayset():
    """The nine real qutrit rays of the 9-observable test, labelled "1" to "9"."""
    r2, r3 = math.sqrt(2), math.sqrt(3)
    comps = [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (0, 1 / r2, -1 / r2),
        (1 / r3, 0, -r2 / r3),
        (1 / r3, r2 / r3, 0),
        (r2 / 2, 1 / 2, 1 / 2),
        (r2 / 2, -1 / 2, -1 / 2),
        (r2 / 2, -1 / 2, 1 / 2),
    ]
    return RaySet.from_pairs(((str(i + 1), c) for i, c in enumerate(comps)), dimension=3)


@dataclass(frozen=True)
class OrthogonalityGraph:
    """Labelled simple graph; ``edges`` holds index pairs ``(i, j)`` with ``i < j``."""

    labels: tuple
    edges: frozenset
    tolerance: float = DEFAULT_TOLS.orthogonality

    def __post_init__(self):
        n = len(self.labels)
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise ValueError(f"bad edge {(i, j)} for {n} vertices")

    @classmethod
    def from_label_edges(cls, labels, label_edges, tolerance=DEFAULT_TOLS.orthogonality):
        labels = tuple(str(l) for l in labels)
        pos = {l: k for k, l in enumerate(labels)}
        edges = set()
        for a, b in label_edges:
            i, j = pos[str(a)], pos[str(b)]
            if i == j:
                raise ValueError(f"self-loop at {a!r}")
            edges.add((min(i, j), max(i, j)))
        return cls(labels, frozenset(edges), tolerance)

    @property
    def n(self):
        return len(self.labels)

    @property
    def edge_count(self):
        return len(self.edges)

    def adjacent(self, i, j):
        return (min(i, j), max(i, j)) in self.edges

    def neighbor_masks(self):
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def sorted_edges(self):
        return sorted(self.edges)

    def label_edges(self):
        return [(self.labels[i], self.labels[j]) for i, j in self.sorted_edges()]

    def max_degree(self):
        return max(degrees(self).values(), default=0)


def build_graph(rays, tol=None):
    """Join every pair of rays whose overlap magnitude is at most ``tol``."""
    if tol is None:
        tol = DEFAULT_TOLS.orthogonality
    if tol <= 0:
        raise ValueError("orthogonality tolerance must be positive")
    edges = frozenset(
        (i, j)
        for i, j in combinations(range(len(rays)), 2)
        if abs(inner_product(rays.vectors[i], rays.vectors[j])) <= tol
    )
    return OrthogonalityGraph(tuple(rays.labels), edges, tol)


def degrees(g):
    deg = {l: 0 for l in g.labels}
    for i, j in g.edges:
        deg[g.labels[i]] += 1
        deg[g.labels[j]] += 1
    return deg


def _check_limit(g):
    if g.n > EXACT_SEARCH_LIMIT:
        raise LimitExceededError(f"exact search is limited to {EXACT_SEARCH_LIMIT} vertices, graph has {g.n}")


def _bits(mask):
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


def independence_number(g):
    """Exact independence number and every maximum independent set.

    Branch and bound over include/exclude decisions: including a vertex drops
    its neighbours from the candidates, and a branch is cut once it can no
    longer reach the best size found. Sets come back as tuples of labels in
    vertex order, sorted lexicographically by vertex index.
    """
    _check_limit(g)
    adj = g.neighbor_masks()
    best = [0]
    found = []

    def search(chosen, size, cand):
        if size + cand.bit_count() < best[0]:
            return
        if not cand:
            if size > best[0]:
                best[0] = size
                found.clear()
            found.append(chosen)
            return
        v = (cand & -cand).bit_length() - 1
        bit = 1 << v
        search(chosen | bit, size + 1, cand & ~bit & ~adj[v])
        search(chosen, size, cand & ~bit)

    search(0, 0, (1 << g.n) - 1)
    sets = sorted(tuple(_bits(m)) for m in found)
    return best[0], [tuple(g.labels[k] for k in s) for s in sets]


def induced_five_cycles(g):
    """All chordless 5-cycles, each once up to rotation and reflection.

    A cycle is reported starting at its lowest-index vertex and heading
    towards the lower-index of that vertex's two cycle neighbours.
    """
    adj = g.neighbor_masks()
    out = []

    def extend(path):
        last = path[-1]
        if len(path) == 5:
            if adj[last] >> path[0] & 1 and path[1] < path[4]:
                out.append(tuple(path))
            return
        for w in _bits(adj[last]):
            if w <= path[0] or w in path:
                continue
            # w may only touch its predecessor (and, as 5th vertex, the start)
            if any(adj[w] >> u & 1 for u in path[:-1] if not (len(path) == 4 and u == path[0])):
                continue
            extend(path + [w])

    for s in range(g.n):
        extend([s])
    return [tuple(g.labels[k] for k in c) for c in sorted(out)]


def graph_equal(g, reference_edges, reference_labels=None):
    """True iff ``g`` has exactly the given edge set (pairs of labels, unordered)."""
    known = set(g.labels)
    if reference_labels is not None and set(map(str, reference_labels)) != known:
        raise InvalidObjectError("vertex labels differ from the reference")
    ref = set()
    for a, b in reference_edges:
        a, b = str(a), str(b)
        if a not in known or b not in known:
            raise InvalidObjectError(f"reference edge {a}-{b} uses labels absent from the graph")
        ref.add(frozenset((a, b)))
    return ref == {frozenset(e) for e in g.label_edges()}


@dataclass(frozen=True)
class GraphStats:
    edge_count: int
    degree_sequence: dict
    independence_number: int
    maximum_independent_sets: list = field(default_factory=list)


def graph_stats(g):
    alpha, sets = independence_number(g)
    return GraphStats(g.edge_count, degrees(g), alpha, sets)

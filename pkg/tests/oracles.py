"""Brute-force reference computations, kept independent of the library code paths."""

import itertools

import numpy as np

PAPER_EDGES = {
    ("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "5"), ("3", "6"), ("4", "7"),
    ("4", "8"), ("5", "7"), ("5", "9"), ("6", "8"), ("6", "9"), ("7", "8"),
}


def all_independent_sets(labels, edges):
    edges = {frozenset(e) for e in edges}
    out = []
    for k in range(len(labels) + 1):
        for subset in itertools.combinations(labels, k):
            if not any(frozenset(p) in edges for p in itertools.combinations(subset, 2)):
                out.append(subset)
    return out


def brute_alpha(labels, edges):
    sets = all_independent_sets(labels, edges)
    alpha = max(len(s) for s in sets)
    return alpha, sorted(s for s in sets if len(s) == alpha)


def correlation_objective(labels, edges, values):
    deg = {l: sum(l in e for e in edges) for l in labels}
    top = max(deg.values(), default=0)
    return sum(values[a] * values[b] for a, b in edges) + sum((top - deg[l]) * values[l] for l in labels)


def brute_correlation_minima(labels, edges):
    exclusive = min(
        correlation_objective(labels, edges, {l: -1 if l in s else 1 for l in labels})
        for s in all_independent_sets(labels, edges)
    )
    unconstrained = []
    for signs in itertools.product((1, -1), repeat=len(labels)):
        unconstrained.append(correlation_objective(labels, edges, dict(zip(labels, signs))))
    lo = min(unconstrained)
    return exclusive, lo, unconstrained.count(lo)


def chordless_five_cycles(labels, edges):
    """Every 5-permutation checked directly, normalized to one representative per cycle."""
    edges = {frozenset(e) for e in edges}
    found = set()
    for perm in itertools.permutations(labels, 5):
        ring = [frozenset((perm[k], perm[(k + 1) % 5])) for k in range(5)]
        if not all(e in edges for e in ring):
            continue
        chords = [frozenset((perm[k], perm[(k + 2) % 5])) for k in range(5)]
        if any(c in edges for c in chords):
            continue
        found.add(frozenset(ring))
    return found


def cycle_edges(cycle):
    return frozenset(frozenset((cycle[k], cycle[(k + 1) % len(cycle)])) for k in range(len(cycle)))


def orthogonal_pairs(labels, vectors, tol):
    return {
        (labels[i], labels[j])
        for i, j in itertools.combinations(range(len(labels)), 2)
        if abs(np.vdot(vectors[i], vectors[j])) <= tol
    }


def random_graph(rng, n, p):
    labels = [str(k) for k in range(n)]
    edges = [(labels[i], labels[j]) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    return labels, edges

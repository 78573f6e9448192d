"""Noncontextual bounds by exhaustive enumeration of deterministic assignments.

Two assignment classes are searched for the correlation form:

* exclusive: 0/1 valuations whose support is an independent set, mapped to
  +-1 values through a = 1 - 2x;
* unconstrained: all 2**n sign patterns.

The correlation objective is ``sum_edges a_i a_j + sum_i (D - deg_i) a_i`` with
``D`` the maximum degree. The field term vanishes on every vertex of maximal
degree, so on a graph where only one vertex is short of the maximum it is a
single-vertex term.
"""

from dataclasses import dataclass, field

import numpy as np

from .scenario import EXACT_SEARCH_LIMIT, _check_limit, degrees, independence_number

# 2**16 sign patterns per vectorised block
_BLOCK_BITS = 16


@dataclass(frozen=True)
class Assignment01:
    values: dict
    exclusive: bool = True

    @property
    def support(self):
        return tuple(l for l, x in self.values.items() if x)

    def to_pm(self):
        return AssignmentPM({l: 1 - 2 * x for l, x in self.values.items()})


@dataclass(frozen=True)
class AssignmentPM:
    values: dict


@dataclass(frozen=True)
class NCBoundReport:
    projector_bound: int
    correlation_bound_exclusive: float
    correlation_bound_unconstrained: float
    projector_extremal: list = field(default_factory=list)
    exclusive_extremal: list = field(default_factory=list)
    unconstrained_extremal: list = field(default_factory=list)


def field_weights(g):
    """Per-vertex field coefficient D - deg_i, in vertex order."""
    deg = degrees(g)
    top = max(deg.values(), default=0)
    return [top - deg[l] for l in g.labels]


def _independent_masks(g):
    adj = g.neighbor_masks()
    out = []

    def walk(chosen, cand):
        out.append(chosen)
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            walk(chosen | 1 << v, cand & ~adj[v])

    walk(0, (1 << g.n) - 1)
    return sorted(out)


def enumerate_exclusive_assignments(g):
    """Every 0/1 assignment whose support is independent, the empty one included."""
    _check_limit(g)
    return [
        Assignment01({l: m >> k & 1 for k, l in enumerate(g.labels)})
        for m in _independent_masks(g)
    ]


def evaluate_assignment(g, a):
    values = a.values if isinstance(a, AssignmentPM) else a
    missing = [l for l in g.labels if l not in values]
    if missing:
        raise KeyError(f"assignment has no value for vertices {missing}")
    total = sum(values[g.labels[i]] * values[g.labels[j]] for i, j in g.edges)
    total += sum(w * values[l] for w, l in zip(field_weights(g), g.labels))
    return total


def nc_bound_projector(g):
    """Largest number of ones an exclusive assignment can carry."""
    _check_limit(g)
    return max(m.bit_count() for m in _independent_masks(g))


def _sign_block(n, start, count):
    idx = np.arange(start, start + count, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n, dtype=np.int64)) & 1
    return 1 - 2 * bits  # bit k set <=> a_k = -1


def _objective_rows(g, signs):
    w = np.asarray(field_weights(g), dtype=np.int64)
    vals = signs @ w if g.n else np.zeros(len(signs), dtype=np.int64)
    for i, j in g.edges:
        vals = vals + signs[:, i] * signs[:, j]
    return vals


def _mask_to_pm(g, mask):
    return AssignmentPM({l: -1 if mask >> k & 1 else 1 for k, l in enumerate(g.labels)})


def nc_bound_correlation(g, with_extremal=False):
    """Minimum of the correlation objective over exclusive and over all +-1 assignments.

    Returns ``(exclusive_min, unconstrained_min)``; with ``with_extremal`` also
    the minimizing assignments of each class, ordered lexicographically by
    their values read in vertex order.
    """
    _check_limit(g)
    # exclusive: a = 1 - 2x, so the -1 positions are exactly the support
    masks = np.array(_independent_masks(g), dtype=np.int64)
    signs = 1 - 2 * ((masks[:, None] >> np.arange(g.n, dtype=np.int64)) & 1)
    vals = _objective_rows(g, signs)
    ex_min = int(vals.min())
    ex_arg = [int(m) for m in masks[vals == ex_min]]

    un_min, un_arg = None, []
    total = 1 << g.n
    block = 1 << min(_BLOCK_BITS, g.n)
    for start in range(0, total, block):
        vals = _objective_rows(g, _sign_block(g.n, start, block))
        lo = int(vals.min())
        hits = [start + int(k) for k in np.flatnonzero(vals == lo)]
        if un_min is None or lo < un_min:
            un_min, un_arg = lo, hits
        elif lo == un_min:
            un_arg.extend(hits)

    if not with_extremal:
        return float(ex_min), float(un_min)

    def order(masks_):
        return sorted(masks_, key=lambda m: [1 - 2 * (m >> k & 1) for k in range(g.n)])

    return (
        float(ex_min),
        float(un_min),
        [_mask_to_pm(g, m) for m in order(ex_arg)],
        [_mask_to_pm(g, m) for m in order(un_arg)],
    )


def nc_bounds(g):
    alpha, sets = independence_number(g)
    ex, un, ex_arg, un_arg = nc_bound_correlation(g, with_extremal=True)
    proj = [Assignment01({l: int(l in s) for l in g.labels}) for s in sets]
    return NCBoundReport(alpha, ex, un, proj, ex_arg, un_arg)


def exclusive_bound_identity(g, alpha):
    """|E| + sum_i (D - deg_i) - 2 D alpha, which the exclusive minimum must equal."""
    return g.edge_count + sum(field_weights(g)) - 2 * g.max_degree() * alpha


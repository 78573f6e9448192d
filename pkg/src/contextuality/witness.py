"""Quantum side of the test: the witness C = sum of projectors, state values, alignment."""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLS
from .errors import DimensionMismatchError, InvalidObjectError
from .hiddenvars import field_weights, nc_bound_correlation
from .linalg import (
    DensityMatrix,
    hermitian_eig,
    inner_product,
    projector_of,
    unitary_from_bases,
    von_neumann_entropy,
)
from .scenario import build_graph, independence_number


@dataclass(frozen=True, eq=False)
class WitnessOperator:
    matrix: np.ndarray
    spectrum: object
    source_rays: object

    @property
    def quantum_max(self):
        return float(self.spectrum.eigenvalues[0])


@dataclass(frozen=True, eq=False)
class AlignmentResult:
    rotation: np.ndarray
    rotated_rays: object
    predicted_value: float
    margin: float


@dataclass(frozen=True, eq=False)
class TestReport:
    __test__ = False  # not a pytest class

    projector_value: float
    correlation_value: float
    nc_projector_bound: int
    nc_correlation_bound: float
    violated: bool
    margin: float
    eta: float
    aligned: bool = False
    alignment: AlignmentResult = None

    @property
    def status(self):
        if self.violated:
            return "violated"
        if abs(self.margin) <= DEFAULT_TOLS.violation:
            return "saturating"
        return "satisfied"


def _state(rho):
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


def _check_dims(rho, rays):
    if rho.dim != rays.dimension:
        raise DimensionMismatchError(f"state is {rho.dim}-dimensional, rays are {rays.dimension}-dimensional")


def assemble_witness(rays, tols=DEFAULT_TOLS):
    m = sum(projector_of(v, tols) for v in rays.vectors)
    return WitnessOperator(m, hermitian_eig(m, tols), rays)


def projector_value(rho, rays, tols=DEFAULT_TOLS):
    """Sum of <Pi_i> over the rays, i.e. Tr(rho C)."""
    rho = _state(rho)
    _check_dims(rho, rays)
    return sum(rho.expectation(projector_of(v, tols)) for v in rays.vectors)


def correlation_value(rho, rays, graph, tols=DEFAULT_TOLS):
    """Sum over edges of <A_i A_j> plus the field terms (D - deg_i) <A_i>, with A_i = 1 - 2 Pi_i.

    The products A_i A_j are formed explicitly rather than through the
    orthogonality shortcut, so the value stays an independent check on the
    projector form.
    """
    rho = _state(rho)
    _check_dims(rho, rays)
    if tuple(graph.labels) != tuple(rays.labels):
        raise InvalidObjectError("graph vertex labels do not match the ray labels")
    for i, j in graph.edges:
        if abs(inner_product(rays.vectors[i], rays.vectors[j])) > graph.tolerance:
            raise InvalidObjectError(
                f"edge {rays.labels[i]}-{rays.labels[j]} joins rays that are not orthogonal"
            )
    eye = np.eye(rays.dimension)
    obs = [eye - 2 * projector_of(v, tols) for v in rays.vectors]
    total = sum(rho.expectation(obs[i] @ obs[j]) for i, j in graph.edges)
    total += sum(w * rho.expectation(a) for w, a in zip(field_weights(graph), obs) if w)
    return float(total)


def align(rho, rays, tols=DEFAULT_TOLS, witness=None, projector_bound=None):
    """Rotate the rays so the witness eigenbasis lines up with the state's.

    The k-th eigenvector of C (eigenvalues descending) is sent to the k-th
    eigenvector of rho (probabilities descending). The rotated witness then
    has Tr(rho C') = sum_k lambda_k p_k, which is the largest value any
    rotation can give. ``margin`` is that value minus the independence number
    of the rays' orthogonality graph; rotation leaves the graph unchanged.
    """
    rho = _state(rho)
    _check_dims(rho, rays)
    witness = witness or assemble_witness(rays, tols)
    if projector_bound is None:
        projector_bound, _ = independence_number(build_graph(rays, tols.orthogonality))
    u = unitary_from_bases(witness.spectrum.eigenvectors, rho.spectrum.eigenvectors, tols)
    predicted = float(np.dot(witness.spectrum.eigenvalues, rho.spectrum.eigenvalues))
    return AlignmentResult(u, rays.rotated(u), predicted, predicted - projector_bound)


def prior_information(rho):
    """eta = log2(d) - S(rho) in bits; zero only for the maximally mixed state."""
    rho = _state(rho)
    return max(float(np.log2(rho.dim)) - von_neumann_entropy(rho), 0.0)


def run_test(rho, rays, aligned=False, tols=DEFAULT_TOLS, graph=None, bounds=None):
    """Evaluate both inequality forms on ``rho``.

    ``graph`` and ``bounds`` (a ``(projector_bound, correlation_bound)`` pair)
    may be passed in to skip recomputation when sweeping many states.
    """
    rho = _state(rho)
    _check_dims(rho, rays)
    if graph is None:
        graph = build_graph(rays, tols.orthogonality)
    if bounds is None:
        alpha, _ = independence_number(graph)
        bounds = (alpha, nc_bound_correlation(graph)[0])
    alpha, corr_bound = bounds

    alignment = None
    measured = rays
    if aligned:
        alignment = align(rho, rays, tols, projector_bound=alpha)
        measured = alignment.rotated_rays

    s_pi = projector_value(rho, measured, tols)
    s_a = correlation_value(rho, measured, graph, tols)
    margin = s_pi - alpha
    return TestReport(
        projector_value=s_pi,
        correlation_value=s_a,
        nc_projector_bound=alpha,
        nc_correlation_bound=corr_bound,
        violated=margin > tols.violation,
        margin=margin,
        eta=prior_information(rho),
        aligned=aligned,
        alignment=alignment,
    )

"""Small-dimension complex linear algebra.

Vectors and matrices are plain complex ``numpy`` arrays; the validating
helpers here return copies with ``writeable=False`` so values stay immutable
once constructed. Dimensions are tiny (d <= 13), so clarity wins over speed.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import DEFAULT_TOLS
from .errors import DimensionMismatchError, InvalidObjectError

_MAX_SWEEPS = 100


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def as_vector(components, dim=None):
    """Coerce ``components`` to an immutable complex vector, checking length."""
    v = _frozen(components)
    if v.ndim != 1:
        raise DimensionMismatchError(f"expected a 1-d vector, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise DimensionMismatchError(f"expected {dim} components, got {v.shape[0]}")
    return v


def inner_product(a, b):
    """Return <a|b>, conjugating the first argument."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def norm(v):
    return float(np.sqrt(abs(inner_product(v, v))))


def is_normalized(v, tols=DEFAULT_TOLS):
    return abs(inner_product(v, v).real - 1.0) <= tols.norm


def projector_of(v, tols=DEFAULT_TOLS):
    """Rank-1 projector |v><v| onto a normalized vector."""
    v = np.asarray(v, dtype=complex)
    if not is_normalized(v, tols):
        raise InvalidObjectError(f"vector is not normalized (norm {norm(v):.12g})")
    return _frozen(np.outer(v, v.conj()))


def check_hermitian(m, tols=DEFAULT_TOLS):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > tols.hermiticity:
        raise InvalidObjectError(f"matrix is not Hermitian (max deviation {dev:.3g})")
    # symmetrize away sub-tolerance noise
    return _frozen((m + m.conj().T) / 2)


def check_unitary(u, tols=DEFAULT_TOLS):
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {u.shape}")
    dev = np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))
    if dev > tols.unitary:
        raise InvalidObjectError(f"matrix is not unitary (max deviation {dev:.3g})")
    return _frozen(u)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues sorted descending; ``eigenvectors[k]`` belongs to ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: tuple

    def reconstruct(self):
        d = len(self.eigenvalues)
        out = np.zeros((d, d), dtype=complex)
        for lam, v in zip(self.eigenvalues, self.eigenvectors):
            out += lam * np.outer(v, v.conj())
        return out

    @property
    def basis_matrix(self):
        """Matrix whose k-th column is the k-th eigenvector."""
        return np.column_stack(self.eigenvectors)


def _jacobi_rotate(a, v, p, q):
    apq = a[p, q]
    g = abs(apq)
    phase = apq / g
    theta = 0.5 * np.arctan2(2 * g, (a[q, q] - a[p, p]).real)
    c, s = np.cos(theta), np.sin(theta)
    # phase fix diag(1, conj(phase)) followed by a real Givens rotation
    r = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ r
    a[idx, :] = r.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, idx] = v[:, idx] @ r


def hermitian_eig(m, tols=DEFAULT_TOLS):
    """Spectral decomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.

    Eigenvalues come back sorted descending (stable, so ties keep sweep order).
    Each eigenvector is phase-fixed so that its largest-magnitude component is
    real and positive, which makes the output deterministic. Inside a
    degenerate cluster the individual vectors are arbitrary; only the spanned
    subspace is meaningful.
    """
    a = np.array(check_hermitian(m, tols), dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.abs(np.triu(a, 1)) ** 2))
        if off <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > 1e-300:
                    _jacobi_rotate(a, v, p, q)
    else:  # pragma: no cover - Jacobi converges quadratically
        raise RuntimeError("Jacobi eigensolver did not converge")

    w = np.diag(a).real
    order = np.argsort(-w, kind="stable")
    vecs = []
    for k in order:
        col = v[:, k]
        mags = np.abs(col)
        j = int(np.argmax(mags > mags.max() - 1e-12))
        col = col * (abs(col[j]) / col[j])
        vecs.append(_frozen(col / np.linalg.norm(col)))
    vals = np.array(w[order])
    vals.setflags(write=False)
    return SpectralDecomposition(vals, tuple(vecs))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray
    tols: object = DEFAULT_TOLS

    def __post_init__(self):
        m = check_hermitian(self.matrix, self.tols)
        object.__setattr__(self, "matrix", m)
        tr = np.trace(m).real
        if abs(tr - 1.0) > self.tols.trace:
            raise InvalidObjectError(f"density matrix trace is {tr:.12g}, expected 1")
        lo = self.spectrum.eigenvalues[-1]
        if lo < -self.tols.psd:
            raise InvalidObjectError(f"density matrix has negative eigenvalue {lo:.3g}")

    @property
    def dim(self):
        return self.matrix.shape[0]

    @cached_property
    def spectrum(self):
        return hermitian_eig(self.matrix, self.tols)

    @classmethod
    def from_spectrum(cls, probabilities, basis=None, tols=DEFAULT_TOLS):
        """Build sum_k p_k |psi_k><psi_k| (standard basis when ``basis`` is None)."""
        probs = np.asarray(probabilities, dtype=float)
        d = probs.shape[0]
        if abs(probs.sum() - 1.0) > tols.trace:
            raise InvalidObjectError(f"spectrum sums to {probs.sum():.12g}, expected 1")
        if np.any(probs < -tols.psd):
            raise InvalidObjectError("spectrum has negative entries")
        if basis is None:
            basis = np.eye(d)
        basis = [as_vector(b, d) for b in basis]
        if len(basis) != d:
            raise DimensionMismatchError(f"basis has {len(basis)} vectors, expected {d}")
        check_orthonormal(basis, tols)
        m = sum(p * np.outer(b, b.conj()) for p, b in zip(probs, basis))
        return cls(m, tols)

    @classmethod
    def pure(cls, vector, tols=DEFAULT_TOLS):
        v = as_vector(vector)
        return cls(np.outer(v, v.conj()) / inner_product(v, v).real, tols)

    @classmethod
    def maximally_mixed(cls, d=3, tols=DEFAULT_TOLS):
        return cls(np.eye(d) / d, tols)

    def expectation(self, operator):
        return float(np.trace(self.matrix @ operator).real)


def von_neumann_entropy(rho):
    """S(rho) = -Tr(rho log2 rho) in bits; eigenvalues at or below the zero tolerance contribute 0."""
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    lam = rho.spectrum.eigenvalues
    lam = lam[lam > rho.tols.entropy_zero]
    s = float(-np.sum(lam * np.log2(lam)))
    return min(max(s, 0.0), float(np.log2(rho.dim)))


def check_orthonormal(basis, tols=DEFAULT_TOLS):
    b = np.column_stack([np.asarray(x, dtype=complex) for x in basis])
    if b.shape[0] != b.shape[1]:
        raise DimensionMismatchError(f"{b.shape[1]} vectors do not form a basis of C^{b.shape[0]}")
    dev = np.max(np.abs(b.conj().T @ b - np.eye(b.shape[1])))
    if dev > tols.norm:
        raise InvalidObjectError(f"basis is not orthonormal (max deviation {dev:.3g})")


def unitary_from_bases(from_basis, to_basis, tols=DEFAULT_TOLS):
    """U = sum_k |to_k><from_k|, the unitary carrying each from_k onto to_k."""
    if len(from_basis) != len(to_basis):
        raise DimensionMismatchError("bases have different sizes")
    check_orthonormal(from_basis, tols)
    check_orthonormal(to_basis, tols)
    d = len(from_basis)
    u = np.zeros((d, d), dtype=complex)
    for f, t in zip(from_basis, to_basis):
        u += np.outer(np.asarray(t), np.asarray(f).conj())
    return check_unitary(u, tols)


# Random sampling. Gaussian constructions keep everything rotation invariant.

def random_unitary(rng, d):
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_pure_vector(rng, d):
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return z / np.linalg.norm(z)


def random_density_matrix(rng, d, pure=False):
    if pure:
        return DensityMatrix.pure(random_pure_vector(rng, d))
    probs = rng.dirichlet(np.ones(d))
    u = random_unitary(rng, d)
    return DensityMatrix((u * probs) @ u.conj().T)

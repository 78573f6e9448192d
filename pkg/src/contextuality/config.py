from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by every module.

    Override by constructing a new record, e.g. ``Tolerances(orthogonality=1e-6)``,
    and passing it as ``tols=`` to the functions that accept one.
    """

    norm: float = 1e-9
    hermiticity: float = 1e-9
    trace: float = 1e-9
    psd: float = 1e-9
    eig: float = 1e-10
    unitary: float = 1e-10
    entropy_zero: float = 1e-12
    orthogonality: float = 1e-9
    violation: float = 1e-9
    # auto-normalize only repairs norms within this distance of 1
    auto_normalize_max: float = 1e-3

    def as_dict(self):
        return asdict(self)


DEFAULT_TOLS = Tolerances()

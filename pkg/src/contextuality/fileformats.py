"""Line-oriented ray and state files.

Ray file::

    # comment
    dim 3
    ray 1 1 0 0
    ray 4 0 0.70710678118654757 -0.70710678118654757
    ray x 0.5,0.5 0,-0.5 0.5    # re,im pairs; the imaginary part is optional

State file, either an explicit matrix::

    matrix
    0.5 0 0
    0 0.3 0
    0 0 0.2

or a spectrum with an optional eigenbasis (standard basis by default)::

    spectrum 0.5 0.3 0.2
    basis
    1 0 0
    0 1 0
    0 0 1
"""

import math
from importlib import resources

import numpy as np

from .config import DEFAULT_TOLS
from .errors import ParseError
from .linalg import DensityMatrix
from .scenario import RaySet

BUILTIN_PREFIX = "@"


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_complex(token, lineno=None):
    parts = token.split(",")
    where = f"line {lineno}: " if lineno is not None else ""
    if len(parts) > 2:
        raise ParseError(f"{where}bad component {token!r}")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise ParseError(f"{where}bad component {token!r}") from None
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ParseError(f"{where}non-finite component {token!r}")
    return complex(re, im)


def format_complex(z):
    z = complex(z)
    if z.imag == 0.0:
        return f"{z.real + 0.0:.17g}"
    return f"{z.real + 0.0:.17g},{z.imag + 0.0:.17g}"


def parse_ray_text(text, tols=DEFAULT_TOLS, auto_normalize=False):
    dim = None
    pairs = []
    seen = set()
    for lineno, words in _lines(text):
        key = words[0]
        if key == "dim":
            if dim is not None:
                raise ParseError(f"line {lineno}: second 'dim' header")
            if len(words) != 2:
                raise ParseError(f"line {lineno}: expected 'dim <d>'")
            try:
                dim = int(words[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad dimension {words[1]!r}") from None
            if dim < 2:
                raise ParseError(f"line {lineno}: dimension must be at least 2")
        elif key == "ray":
            if dim is None:
                raise ParseError(f"line {lineno}: 'ray' before the 'dim' header")
            if len(words) != dim + 2:
                raise ParseError(f"line {lineno}: ray needs a label and {dim} components")
            label = words[1]
            if label in seen:
                raise ParseError(f"line {lineno}: duplicate ray label {label!r}")
            seen.add(label)
            pairs.append((label, [parse_complex(t, lineno) for t in words[2:]]))
        else:
            raise ParseError(f"line {lineno}: unknown keyword {key!r}")
    if dim is None:
        raise ParseError("missing 'dim' header")
    if not pairs:
        raise ParseError("no rays")
    return RaySet.from_pairs(pairs, dim, tols, auto_normalize)


def format_ray_file(rays, comment=None):
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"dim {rays.dimension}")
    for label, v in zip(rays.labels, rays.vectors):
        out.append(" ".join(["ray", label, *(format_complex(z) for z in v)]))
    return "\n".join(out) + "\n"


def parse_state_text(text, tols=DEFAULT_TOLS):
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty state file")
    lineno, head = lines[0]

    def rows(block, width):
        out = []
        for ln, words in block:
            if len(words) != width:
                raise ParseError(f"line {ln}: expected {width} entries, got {len(words)}")
            out.append([parse_complex(t, ln) for t in words])
        return out

    if head[0] == "matrix":
        if len(head) != 1:
            raise ParseError(f"line {lineno}: 'matrix' takes no arguments")
        body = lines[1:]
        if not body:
            raise ParseError("matrix has no rows")
        d = len(body[0][1])
        if len(body) != d:
            raise ParseError(f"matrix has {len(body)} rows, expected {d}")
        return DensityMatrix(np.array(rows(body, d)), tols)

    if head[0] == "spectrum":
        try:
            probs = [float(t) for t in head[1:]]
        except ValueError:
            raise ParseError(f"line {lineno}: bad spectrum entry") from None
        d = len(probs)
        if d < 2:
            raise ParseError(f"line {lineno}: spectrum needs at least 2 entries")
        basis = None
        rest = lines[1:]
        if rest:
            ln, words = rest[0]
            if words != ["basis"]:
                raise ParseError(f"line {ln}: expected 'basis'")
            if len(rest) - 1 != d:
                raise ParseError(f"basis has {len(rest) - 1} vectors, expected {d}")
            basis = rows(rest[1:], d)
        return DensityMatrix.from_spectrum(probs, basis, tols)

    raise ParseError(f"line {lineno}: expected 'matrix' or 'spectrum'")


def format_state_matrix(rho):
    rows = [" ".join(format_complex(z) for z in row) for row in rho.matrix]
    return "matrix\n" + "\n".join(rows) + "\n"


def bundled_text(name):
    return resources.files("contextuality.data").joinpath(name).read_text()


def read_text(path):
    """Read a file, or a bundled data file when ``path`` is ``@name``."""
    if path.startswith(BUILTIN_PREFIX):
        name = path[len(BUILTIN_PREFIX):]
        try:
            return bundled_text(f"{name}_rays.txt")
        except FileNotFoundError:
            raise ParseError(f"no bundled ray set named {name!r}") from None
    with open(path) as fh:
        return fh.read()


def load_rays(path, tols=DEFAULT_TOLS, auto_normalize=False):
    return parse_ray_text(read_text(path), tols, auto_normalize)


def load_state(path, tols=DEFAULT_TOLS):
    with open(path) as fh:
        return parse_state_text(fh.read(), tols)


def reference_edges():
    """The bundled 13-edge reference list for the nine-ray graph, as label pairs."""
    return [tuple(words) for _, words in _lines(bundled_text("paper_edges.txt"))]

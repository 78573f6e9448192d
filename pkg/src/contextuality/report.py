"""ReportDocument assembly and its text / machine (JSON) / CSV renderings.

All floats are rounded to 12 significant digits once, when the document is
built, so every rendering shows the same numbers.
"""

import csv
import io
import json

from . import __version__
from .hiddenvars import nc_bounds
from .linalg import norm
from .scenario import degrees, independence_number, induced_five_cycles
from .witness import assemble_witness

ENTROPY_UNIT = "bits (log base 2)"

CSV_COLUMNS = [
    "state",
    "projector_value",
    "correlation_value",
    "nc_projector_bound",
    "nc_correlation_bound",
    "margin",
    "violated",
    "eta",
]


def sig12(x):
    x = float(f"{float(x):.12g}")
    return x + 0.0  # no negative zero


def new_document(tols):
    return {
        "tool_version": __version__,
        "entropy_unit": ENTROPY_UNIT,
        "tolerances": {k: sig12(v) for k, v in tols.as_dict().items()},
    }


def scenario_section(rays, graph):
    deg = degrees(graph)
    alpha, sets = independence_number(graph)
    summary = "{} edges; degrees {}; independence number {}".format(
        graph.edge_count, ",".join(str(deg[l]) for l in graph.labels), alpha
    )
    return {
        "dimension": rays.dimension,
        "ray_count": len(rays),
        "max_norm_deviation": sig12(max(abs(norm(v) - 1.0) for v in rays.vectors)),
        "orthogonality_tolerance": sig12(graph.tolerance),
        "edge_count": graph.edge_count,
        "edges": [list(e) for e in graph.label_edges()],
        "degrees": deg,
        "independence_number": alpha,
        "maximum_independent_sets": [list(s) for s in sets],
        "induced_pentagons": [list(c) for c in induced_five_cycles(graph)],
        "summary": summary,
    }


def bounds_section(rays, graph, tols):
    nc = nc_bounds(graph)
    witness = assemble_witness(rays, tols)
    return {
        "projector": nc.projector_bound,
        "correlation_exclusive": sig12(nc.correlation_bound_exclusive),
        "correlation_unconstrained": sig12(nc.correlation_bound_unconstrained),
        "quantum_max": sig12(witness.quantum_max),
        "witness_eigenvalues": [sig12(x) for x in witness.spectrum.eigenvalues],
    }


def state_entry(source, report, aligned_rays_text=None):
    entry = {
        "state": source,
        "projector_value": sig12(report.projector_value),
        "correlation_value": sig12(report.correlation_value),
        "nc_projector_bound": report.nc_projector_bound,
        "nc_correlation_bound": sig12(report.nc_correlation_bound),
        "margin": sig12(report.margin),
        "violated": report.violated,
        "status": report.status,
        "eta": sig12(report.eta),
        "aligned": report.aligned,
    }
    if report.alignment is not None:
        entry["predicted_value"] = sig12(report.alignment.predicted_value)
        entry["aligned_rays"] = aligned_rays_text
    return entry


def render_machine(doc):
    return json.dumps(doc, indent=2) + "\n"


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _fmt_field(key, value):
    if key == "edges":
        return " ".join(f"{a}-{b}" for a, b in value)
    if key == "maximum_independent_sets":
        return " ".join("{%s}" % ",".join(s) for s in value)
    if key == "induced_pentagons":
        return " ".join("(%s)" % ",".join(c) for c in value)
    if isinstance(value, dict):
        return " ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    if isinstance(value, list):
        return " ".join(_fmt(v) for v in value)
    return _fmt(value)


def _render_section(lines, name, section):
    lines.append(f"[{name}]")
    block = None
    for key, value in section.items():
        if key == "aligned_rays":
            block = value
            continue
        lines.append(f"{key}: {_fmt_field(key, value)}")
    if block:
        lines.append("aligned_rays:")
        lines.extend("    " + l for l in block.rstrip("\n").splitlines())


def render_text(doc):
    lines = [f"# contextuality {doc['tool_version']}; entropies in {doc['entropy_unit']}"]
    for name in ("scenario", "bounds"):
        if name in doc:
            _render_section(lines, name, doc[name])
    for k, entry in enumerate(doc.get("states", [])):
        _render_section(lines, f"states.{k}", entry)
    if "eta" in doc:
        _render_section(lines, "eta", doc["eta"])
    _render_section(lines, "tolerances", doc["tolerances"])
    return "\n".join(lines) + "\n"


def render_csv(doc):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for entry in doc.get("states", []):
        writer.writerow([_fmt(entry[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


RENDERERS = {"text": render_text, "machine": render_machine, "csv": render_csv}

import numpy as np
import pytest

from contextuality.errors import DimensionMismatchError, InvalidObjectError, ParseError
from contextuality.fileformats import (
    bundled_text,
    format_ray_file,
    format_state_matrix,
    load_rays,
    parse_complex,
    parse_ray_text,
    parse_state_text,
    reference_edges,
)
from contextuality.linalg import random_density_matrix, random_unitary
from contextuality.scenario import build_graph, graph_equal

from oracles import PAPER_EDGES


def test_bundled_rays_match_builtin(paper_rays):
    rays = load_rays("@paper")
    assert rays.labels == paper_rays.labels
    for a, b in zip(rays.vectors, paper_rays.vectors):
        np.testing.assert_allclose(a, b, atol=1e-16)


def test_bundled_reference_edges(paper_graph):
    assert {tuple(e) for e in reference_edges()} == PAPER_EDGES
    assert graph_equal(paper_graph, reference_edges())


def test_unknown_bundled_set():
    with pytest.raises(ParseError):
        load_rays("@nope")


@pytest.mark.parametrize(
    "token, value",
    [("1", 1), ("-0.5", -0.5), ("1e-3", 1e-3), ("0.5,0.25", 0.5 + 0.25j), ("0,-1", -1j), ("2.5E+1,1", 25 + 1j)],
)
def test_parse_complex(token, value):
    assert parse_complex(token) == value


@pytest.mark.parametrize("token", ["abc", "1,2,3", "nan", "1,inf", ""])
def test_parse_complex_rejects(token):
    with pytest.raises(ParseError):
        parse_complex(token)


def test_ray_file_comments_and_blanks():
    text = "# header\n\ndim 2   # qubit\nray a 1 0\n\nray b 0 1 # second\n"
    rays = parse_ray_text(text)
    assert rays.labels == ("a", "b")


@pytest.mark.parametrize(
    "text, match",
    [
        ("ray a 1 0\n", "before"),
        ("dim 2\ndim 2\nray a 1 0\n", "second"),
        ("dim 2\nray a 1 0 0\n", "components"),
        ("dim 2\nray a 1 0\nray a 0 1\n", "duplicate"),
        ("dim 2\nvec a 1 0\n", "keyword"),
        ("dim x\n", "dimension"),
        ("dim 1\n", "at least"),
        ("dim 2\n", "no rays"),
        ("", "missing"),
    ],
)
def test_ray_file_parse_errors(text, match):
    with pytest.raises(ParseError, match=match):
        parse_ray_text(text)


def test_ray_file_unnormalized(fixtures_dir):
    with pytest.raises(InvalidObjectError) as info:
        load_rays(str(fixtures_dir / "unnormalized_rays.txt"))
    assert info.value.label == "b"


def test_ray_file_round_trip_complex(paper_rays, paper_graph, rng):
    for _ in range(10):
        rotated = paper_rays.rotated(random_unitary(rng, 3))
        back = parse_ray_text(format_ray_file(rotated, "rotated"))
        assert back.labels == rotated.labels
        assert np.max(np.abs(np.array(back.vectors) - np.array(rotated.vectors))) <= 1e-12
        assert build_graph(back, 1e-9).edges == paper_graph.edges


def test_state_spectrum():
    rho = parse_state_text("spectrum 0.5 0.3 0.2\n")
    np.testing.assert_allclose(rho.matrix, np.diag([0.5, 0.3, 0.2]))


def test_state_spectrum_with_basis(fixtures_dir):
    rho = parse_state_text((fixtures_dir / "pure_complex.txt").read_text())
    v = np.array([0, 1, 1j]) / np.sqrt(2)
    np.testing.assert_allclose(rho.matrix, np.outer(v, v.conj()), atol=1e-15)


def test_state_matrix_round_trip(rng):
    for _ in range(10):
        rho = random_density_matrix(rng, 3)
        back = parse_state_text(format_state_matrix(rho))
        np.testing.assert_allclose(back.matrix, rho.matrix, atol=1e-15)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", ParseError),
        ("state 1 0 0\n", ParseError),
        ("matrix\n1 0\n0\n", ParseError),
        ("matrix\n1 0\n", ParseError),
        ("spectrum a b c\n", ParseError),
        ("spectrum 1\n", ParseError),
        ("spectrum 0.5 0.5\nvectors\n", ParseError),
        ("spectrum 0.5 0.5\nbasis\n1 0\n", ParseError),
        ("spectrum 0.5 0.6 0\n", InvalidObjectError),
        ("spectrum 1.2 -0.2\n", InvalidObjectError),
        ("spectrum 0.5 0.5\nbasis\n1 0\n1 0\n", InvalidObjectError),
        ("matrix\n0.5 0.1\n0.2 0.5\n", InvalidObjectError),
        ("matrix\n0.6 0\n0 0.6\n", InvalidObjectError),
        ("matrix\n1.5 0\n0 -0.5\n", InvalidObjectError),
    ],
)
def test_state_errors(text, exc):
    with pytest.raises(exc):
        parse_state_text(text)


def test_data_files_present():
    assert "dim 3" in bundled_text("paper_rays.txt")

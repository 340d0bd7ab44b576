"""Tests for the HTTP API."""

import json

import pytest
from fastapi.testclient import TestClient

from tandelbrot.server import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_analyze_endpoint_reference_parameter(client):
    r = client.get("/api/v1/analyze?alpha_re=-0.021&alpha_im=0.009")
    assert r.status_code == 200
    assert '"membership":"InT","period":3' in r.text
    doc = json.loads(r.text)
    assert doc["multiplier_abs"] < 1


def test_single_pixel_tile_body_size(client):
    r = client.get(
        "/api/v1/tile?plane=param&family=tangent&px=1&py=1"
        "&center_re=-0.021&center_im=0.009&width=0.001&max_iter=1000"
    )
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("application/octet-stream")
    body = r.content
    # 32-byte header + one 9-byte record per the tile format field list
    assert len(body) == 41
    assert body[:4] == b"TNDL"


def test_orbit_first_point_is_free_value(client):
    r = client.get("/api/v1/orbit?family=tangent&alpha_re=0.8&alpha_im=0&n=1")
    assert r.status_code == 200
    doc = json.loads(r.text)
    assert doc["points"][0]["re"] == 1 / 0.8
    assert doc["points"][0]["im"] == 0


def test_orbit_longer_prefix(client):
    r = client.get("/api/v1/orbit?family=tangent&alpha_re=0.8&alpha_im=0&n=6")
    doc = json.loads(r.text)
    assert len(doc["points"]) == 6
    # the orbit enters the disk |z| <= 2 and heads to 0
    last = doc["points"][-1]
    assert abs(complex(last["re"], last["im"])) < 2


def test_newton_orbit_starts_at_zero(client):
    r = client.get("/api/v1/orbit?family=newton&a_re=-0.25&a_im=0&n=2")
    doc = json.loads(r.text)
    assert doc["points"][0] == {"re": 0.0, "im": 0.0}


def test_constants_endpoint(client):
    r = client.get("/api/v1/constants")
    assert r.status_code == 200
    doc = json.loads(r.text)
    assert abs(doc["residual"]) < 1e-12
    assert 0.96 < doc["t"] < 0.98


def test_idempotent_byte_identical_responses(client):
    url = (
        "/api/v1/tile?plane=param&family=tangent&px=24&py=24"
        "&center_re=-0.005&center_im=0&width=0.05&max_iter=500"
    )
    bodies = {client.get(url).content for _ in range(5)}
    assert len(bodies) == 1
    a1 = client.get("/api/v1/analyze?alpha_re=-0.021&alpha_im=0.009").content
    a2 = client.get("/api/v1/analyze?alpha_re=-0.021&alpha_im=0.009").content
    assert a1 == a2


def test_png_tile_format(client):
    r = client.get(
        "/api/v1/tile?plane=dyn&family=tangent&alpha_re=0.8&alpha_im=0"
        "&px=16&py=16&width=8&max_iter=200&format=png"
    )
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("image/png")
    assert r.content[:8] == b"\x89PNG\r\n\x1a\n"


def test_malformed_query_is_400(client):
    assert client.get("/api/v1/tile?plane=param&family=tangent&px=abc").status_code == 400
    assert client.get("/api/v1/tile?plane=nowhere&family=tangent&px=4").status_code == 400
    assert client.get("/api/v1/tile?plane=param&family=unknown&px=4").status_code == 400
    assert client.get("/api/v1/analyze?alpha_re=xyz").status_code == 400
    assert client.get("/api/v1/orbit?family=tangent&alpha_re=0.5").status_code == 400


def test_out_of_domain_parameter_is_422(client):
    r = client.get("/api/v1/analyze?alpha_re=1&alpha_im=0")
    assert r.status_code == 422
    assert "error" in json.loads(r.text)
    r = client.get("/api/v1/analyze?alpha_re=0&alpha_im=0")
    assert r.status_code == 422


def test_index_serves_html(client):
    r = client.get("/")
    assert r.status_code == 200

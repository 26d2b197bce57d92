"""HTTP service endpoints mirror the CLI handlers one to one."""

import pytest
from fastapi.testclient import TestClient

from genus_forge.service import create_app

SCHEMA = "genus-forge/1"


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_points_endpoint(client):
    r = client.post("/v1/points", json={"p": 5, "a": 1, "b": 0})
    assert r.status_code == 200
    data = r.json()
    assert data["schema"] == SCHEMA
    assert data["points"] == ["inf", [0, 0], [2, 0], [3, 0]]
    assert data["structure"] == [2, 2]
    assert data["cosets"] == ["inf", [0, 0], [2, 0], [3, 0]]


def test_pic_endpoint(client):
    r = client.post("/v1/pic", json={"p": 3, "a": 1, "b": 0})
    assert r.status_code == 200
    data = r.json()
    assert data["order"] == 4
    assert data["structure"] == [1, 4]
    assert data["pic_mod2"] == 2
    assert data["cosets"] == ["inf", [2, 1]]


def test_ideal_endpoint(client):
    r = client.post(
        "/v1/ideal",
        json={"p": 5, "a": 1, "b": 0, "point": "0,0", "op": "bezout"},
    )
    assert r.status_code == 200
    data = r.json()
    assert data["schema"] == SCHEMA
    assert data["result"]["a1"]["print"] == "x"
    assert data["result"]["b1"]["print"] == "-x"

    r = client.post(
        "/v1/ideal",
        json={"p": 5, "a": 1, "b": 0, "point": "0,0", "op": "principal"},
    )
    assert r.json()["result"]["generator"] is None


def test_classify_endpoint(client):
    r = client.post(
        "/v1/classify",
        json={"p": 5, "a": 1, "b": 0, "v0": "diag:1", "mode": "mod2"},
    )
    assert r.status_code == 200
    data = r.json()
    assert len(data["classes"]) == 4
    prints = [c["print"] for c in data["classes"]]
    assert "[[2*x*y,-2*x^2-1,0],[-2*x^2-1,2*y,0],[0,0,1]]" in prints


def test_isotropy_endpoint(client):
    r = client.post(
        "/v1/isotropy",
        json={"ring": "laurent", "p": 3, "form": "1,-1,-t", "bound": 3},
    )
    assert r.status_code == 200
    assert r.json()["witness"] == ["1", "1", "0"]
    r = client.post(
        "/v1/isotropy",
        json={"ring": "laurent", "p": 3, "form": "1,1,t", "bound": 3},
    )
    assert r.json()["witness"] is None


def test_isotropy_elliptic_endpoint(client):
    r = client.post(
        "/v1/isotropy",
        json={"ring": "elliptic", "p": 5, "a": 1, "b": 0, "form": "1,-1", "bound": 1},
    )
    assert r.status_code == 200
    assert r.json()["witness"] is not None


def test_witt_endpoint(client):
    r = client.post("/v1/witt", json={"p": 3, "form": "1,1,t", "places": "t,inf"})
    assert r.status_code == 200
    data = r.json()
    assert data["symbol"] == ["-1", "-t"]
    assert data["residues"] == {"t": 1, "inf": 1}
    assert data["in_2Br_OS"] is True
    assert data["trivial"] is False


def test_genera_endpoint(client):
    r = client.post(
        "/v1/genera",
        json={
            "p": 3, "places": "t,inf", "rank": 3,
            "pic_order": 1, "pic_mod2": 1, "isotropic": True,
        },
    )
    assert r.status_code == 200
    data = r.json()
    assert data["genera"] == 2
    assert data["classes_per_genus"] == 1
    assert data["total_classes"] == 2
    assert data["hasse_principle"] is True


def test_preset_endpoint(client):
    r = client.post("/v1/preset", json={"name": "paper-5.1"})
    assert r.status_code == 200
    data = r.json()
    assert data["name"] == "paper-5.1"
    assert set(data["sections"]) == {"points", "pic", "classify"}
    assert len(data["sections"]["classify"]["classes"]) == 4

    r = client.post("/v1/preset", json={"name": "paper-5.2"})
    sections = r.json()["sections"]
    assert set(sections) == {"isotropy", "witt", "genera"}
    assert sections["genera"]["total_classes"] == 2


def test_domain_error_is_400(client):
    r = client.post("/v1/points", json={"p": 3, "a": 0, "b": 0})
    assert r.status_code == 400
    assert "singular" in r.json()["detail"]
    r = client.post("/v1/preset", json={"name": "paper-0.0"})
    assert r.status_code == 400


def test_validation_error_is_422(client):
    r = client.post("/v1/points", json={"p": 2})
    assert r.status_code == 422
    r = client.post("/v1/classify", json={"p": 5, "a": 1, "b": 0, "mode": 7})
    assert r.status_code == 422
    # op is checked in the handler, not the model
    r = client.post("/v1/ideal", json={"p": 5, "a": 1, "b": 0, "point": "0,0", "op": "weird"})
    assert r.status_code == 400

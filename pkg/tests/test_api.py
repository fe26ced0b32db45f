import pytest
from fastapi.testclient import TestClient

from tricomi.main import app
from tricomi.schemas.fundsol import SpacetimePoint
from tricomi.services import fundsol

PREFIX = "/api/v1"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert "Welcome" in response.json()["message"]


def test_eval_endpoint(client):
    response = client.get(f"{PREFIX}/fundsol/eval", params={"n": 1, "y": -1, "radius": 0, "quantity": "f_minus"})
    assert response.status_code == 200
    body = response.json()
    assert body["region"] == "DMinus"
    assert body["value"] == pytest.approx(fundsol.f_minus(1, SpacetimePoint(x=(0.0,), y=-1.0)), rel=1e-15)


def test_eval_region_label(client):
    response = client.get(f"{PREFIX}/fundsol/eval", params={"n": 3, "y": 1, "radius": 0.5, "quantity": "region"})
    assert response.json()["value"] == "DPlus"


def test_eval_on_cone_conflicts(client):
    params = {"n": 1, "y": -1, "radius": 0.6666666666666666, "quantity": "f_plus"}
    response = client.get(f"{PREFIX}/fundsol/eval", params=params)
    assert response.status_code == 409
    assert "cone" in response.json()["detail"]


def test_eval_rejects_bad_query(client):
    assert client.get(f"{PREFIX}/fundsol/eval", params={"n": 0, "y": 1, "radius": 0}).status_code == 422
    assert client.get(f"{PREFIX}/fundsol/eval", params={"n": 1, "y": 1, "radius": -1}).status_code == 422


def test_constants_endpoint(client):
    body = client.get(f"{PREFIX}/fundsol/constants/2").json()
    assert body["homogeneity_degree"] == -4.0
    assert body["ab"]["a"] == pytest.approx(body["sharp_minus"], rel=1e-14)
    assert client.get(f"{PREFIX}/fundsol/constants/3").json()["ab"] is None
    assert client.get(f"{PREFIX}/fundsol/constants/0").status_code == 422


def test_grid_endpoint(client):
    spec = {
        "n": 1, "quantity": "f_plus",
        "x_axis": {"min": 0.0, "max": 4.0 / 3.0, "count": 3},
        "y_axis": {"min": -1.0, "max": 1.0, "count": 2},
    }
    rows = client.post(f"{PREFIX}/fundsol/grid", json=spec).json()
    assert len(rows) == 6
    assert [row["region"] for row in rows[:3]] == ["DMinus", "Cone", "DPlus"]
    assert rows[1]["value"] is None


def test_grid_endpoint_validates_axes(client):
    spec = {"n": 1, "quantity": "f_plus", "x_axis": {"min": 0, "max": 1, "count": 1},
            "y_axis": {"min": 0, "max": 1, "count": 2}}
    assert client.post(f"{PREFIX}/fundsol/grid", json=spec).status_code == 422


def test_list_suites(client):
    names = client.get(f"{PREFIX}/verify/suites").json()
    assert "wronskian" in names and "delta-pairing" in names


def test_run_suite_endpoint(client):
    response = client.post(f"{PREFIX}/verify/wronskian")
    assert response.status_code == 200
    reports = response.json()
    assert len(reports) == 1 and reports[0]["passed"]


def test_unknown_suite_is_not_found(client):
    assert client.post(f"{PREFIX}/verify/nope").status_code == 404


def test_suite_endpoint_documents_pairing_dimensions(client):
    schema = client.get(f"{PREFIX}/openapi.json").json()
    description = schema["paths"][f"{PREFIX}/verify/{{suite}}"]["post"]["description"]
    assert "n = 1 and n = 2 only" in description
    assert "not locally integrable" in description

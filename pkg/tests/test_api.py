import pytest

from fastapi.testclient import TestClient

from app.config import settings
from app.routing.api.v1 import mapper as mapper_routes
from main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_patterns(client):
    body = client.get("/api/v1/mapper/patterns").json()
    assert body["ok"] is True
    assert "two_peaks" in body["data"]


def test_compute_pattern(client):
    body = client.post(
        "/api/v1/mapper/compute", json={"pattern": "two_peaks", "size": 64, "slices": 8}
    ).json()

    assert body["ok"] is True
    graph = body["data"]["graph"]
    assert graph["is_tree"] is True
    assert graph["cycle_rank"] == 0
    assert len(graph["nodes"]) > 1
    assert body["data"]["cover"]["style"] == "uniform"
    assert len(body["data"]["cover"]["intervals"]) == 8


def test_compute_inline_values(client):
    body = client.post(
        "/api/v1/mapper/compute",
        json={"values": [[0.9, 0.5, 0.2, 0.5, 0.9, 0.5, 0.2, 0.5, 0.9]], "slices": 2},
    ).json()

    assert body["ok"] is True
    assert len(body["data"]["graph"]["nodes"]) == 5
    assert len(body["data"]["graph"]["edges"]) == 4


def test_compute_simplified_has_weights(client):
    body = client.post(
        "/api/v1/mapper/compute",
        json={"pattern": "two_peaks", "size": 64, "slices": 8, "simplify": True},
    ).json()
    assert body["ok"] is True
    assert body["data"]["graph"]["weights"] is not None


def test_compute_mapper_error(client):
    body = client.post(
        "/api/v1/mapper/compute",
        json={"values": [[0, 1], [2, 3]], "slices": 4, "overlap": 0.6},
    ).json()

    assert body["ok"] is False
    assert body["error"]["type"] == "CoverParameterError"


def test_compute_ragged_values(client):
    body = client.post("/api/v1/mapper/compute", json={"values": [[0, 1], [2]]}).json()
    assert body["ok"] is False
    assert "values" in body["error"]


def test_compute_needs_one_source(client):
    body = client.post(
        "/api/v1/mapper/compute", json={"values": [[0, 1]], "pattern": "saddle"}
    ).json()
    assert body["ok"] is False


def test_compute_size_limit(client):
    body = client.post(
        "/api/v1/mapper/compute", json={"pattern": "saddle", "size": settings.MAX_SIZE + 1}
    ).json()
    assert body["ok"] is False
    assert "size" in body["error"]


def test_tree(client):
    body = client.post(
        "/api/v1/mapper/tree", json={"pattern": "two_peaks", "size": 64, "mode": "contour"}
    ).json()

    assert body["ok"] is True
    assert body["data"]["isomorphic"] is True
    assert body["data"]["mapper"]["is_tree"] is True
    assert len(body["data"]["reference"]["nodes"]) == 10


def test_bench_enqueues_task(client, monkeypatch):
    calls = []

    class FakeResult:
        id = "task-1"

    def fake_delay(*args):
        calls.append(args)
        return FakeResult()

    monkeypatch.setattr(mapper_routes.run_benchmark_task, "delay", fake_delay)

    body = client.post(
        "/api/v1/mapper/bench", json={"sizes": [16], "slices": [4], "repeats": 1}
    ).json()

    assert body == {"ok": True, "data": {"task_id": "task-1"}, "error": None}
    assert calls == [([16], [4], 1, ["bench1", "bench2", "bench3", "bench4"], True)]


def test_bench_rejects_bad_repeats(client):
    body = client.post("/api/v1/mapper/bench", json={"repeats": 0}).json()
    assert body["ok"] is False
    assert "repeats" in body["error"]

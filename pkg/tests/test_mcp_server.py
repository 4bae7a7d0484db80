import pytest
from fastmcp import Client

from colour_vertex.config import DEFAULT_CONFIG
from colour_vertex.mcp import engine_server
from colour_vertex.utils.utils import run_async


@pytest.fixture(autouse=True)
def seeded_server(config):
    engine_server.configure(config)
    yield engine_server.mcp
    engine_server.configure(DEFAULT_CONFIG)


def call(name: str, arguments: dict) -> dict:
    async def _call():
        async with Client(engine_server.mcp) as client:
            result = await client.call_tool(name, arguments)
            return result.structured_content

    return run_async(_call())


def test_tools_are_registered():
    async def _names():
        async with Client(engine_server.mcp) as client:
            return {tool.name for tool in await client.list_tools()}

    assert run_async(_names()) == {"dwpf", "scalar_product", "slavnov", "bethe_solve", "a2", "verify"}


def test_dwpf_tool():
    report = call("dwpf", {"payload": {"xs": [2, 3], "ys": [0, 1]}})
    assert report["status"] == "ok"
    assert report["result"]["value"] == "1/6"


def test_dwpf_tool_routes_coloured_payloads():
    report = call("dwpf", {"payload": {"xs": [9, 10], "ys": [0, 2], "colours": [2, 1]}})
    assert report["verb"] == "coloured"
    assert report["result"]["detail"]["uncoloured"] == report["result"]["value"]


def test_slavnov_tool_with_a_method():
    report = call("slavnov", {"payload": {"xs": [3], "bs": ["1/2"], "ys": [0, 2]}, "method": "determinant"})
    assert report["result"]["value"] == "-1/4"
    assert "lattice" not in report["result"]


def test_errors_come_back_as_reports():
    report = call("scalar_product", {"payload": {"xs": [3, 4], "bs": [5], "ys": [0]}})
    assert report["status"] == "error"
    assert report["error"] == "InputError"


def test_bethe_and_a2_tools():
    roots = call("bethe_solve", {"payload": {"variant": "a1-antifundamental", "zs": [7, 3]}})
    assert roots["result"]["solutions"][0]["roots"] == ["11/2"]
    fact2 = {"operation": "fact2", "x2s": [5], "x1s": [3], "b2s": ["11/2"], "ys": [0, 1], "zs": [7, 3]}
    assert call("a2", {"payload": fact2})["result"]["value"] == "1/4"


def test_verify_tool():
    report = call("verify", {"suite": "lemma1", "max_size": 1, "rank": 1, "samples": 1})
    assert report["status"] == "ok"
    assert report["result"]["failed"] == 0

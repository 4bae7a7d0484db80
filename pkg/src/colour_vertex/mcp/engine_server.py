"""
Colour-vertex MCP Server
------------------------

Usage examples:

# --- Run directly from command line ---
python -m colour_vertex.mcp.engine_server 8765 --precision-bits 256 --seed 7

# --- Or talk to it in process ---
from fastmcp import Client
from colour_vertex.mcp.engine_server import mcp

async with Client(mcp) as client:
    await client.call_tool("dwpf", {"payload": {"xs": [2, 3], "ys": [0, 1]}})

Every tool takes the JSON document of the matching command-line verb and returns
the same report dictionary.
"""

import argparse
import logging

from fastmcp import FastMCP

from colour_vertex.config import DEFAULT_CONFIG, EngineConfig
from colour_vertex.controller.engine_controller import EngineController

log = logging.getLogger(__name__)

mcp = FastMCP("colour-vertex engine")

controller = EngineController(DEFAULT_CONFIG)


def configure(config: EngineConfig) -> None:
    """Swap the configuration every tool runs with."""
    global controller
    controller = EngineController(config)


def _report(verb: str, payload: dict, method: str | None) -> dict:
    code, report = controller.run(verb, payload, method)
    log.debug("tool %s -> exit status %d", verb, code)
    return report


@mcp.tool("dwpf")
def dwpf(payload: dict, method: str | None = None) -> dict:
    """Domain-wall partition function Z({x}|{y}); payload keys xs, ys and optional model, norm, colours."""
    verb = "coloured" if "colours" in payload else "dwpf"
    return _report(verb, payload, method)


@mcp.tool("scalar_product")
def scalar_product(payload: dict, method: str | None = None) -> dict:
    """Restricted scalar product S({x},{b}|{y}); payload keys xs, bs, ys and optional norm."""
    return _report("scalar-product", payload, method)


@mcp.tool("slavnov")
def slavnov(payload: dict, method: str | None = None) -> dict:
    """Slavnov determinant with Bethe residuals of {b}; method 'all' adds the lattice value."""
    return _report("slavnov", payload, method)


@mcp.tool("bethe_solve")
def bethe_solve(payload: dict) -> dict:
    """Bethe roots; payload keys variant, ys, zs, counts."""
    return _report("bethe-solve", payload, None)


@mcp.tool("a2")
def a2(payload: dict, method: str | None = None) -> dict:
    """A2 scalar products, degenerations and their determinant forms; see the 'operation' key."""
    return _report("a2", payload, method)


@mcp.tool("verify")
def verify(suite: str = "all", max_size: int = 3, rank: int = 2, samples: int = 3) -> dict:
    """Run an acceptance suite and return every case."""
    payload = {"suite": suite, "max_size": max_size, "rank": rank, "samples": samples}
    return _report("verify", payload, None)


if __name__ == "__main__":
    # --- Parse command-line arguments ---
    parser = argparse.ArgumentParser(description="Start the colour-vertex MCP Server.")
    parser.add_argument("port", type=int, help="Port number for the MCP server.")
    parser.add_argument("--precision-bits", type=int, help="Float working precision in bits.")
    parser.add_argument("--seed", type=int, help="Optional random seed (integer).")
    args = parser.parse_args()

    configure(EngineConfig.from_namespace(args))

    # --- Start the MCP server ---
    mcp.run(transport="http", port=args.port)

import asyncio
import json
import sys
from pathlib import Path
from typing import Any

import nest_asyncio

from colour_vertex.errors import InputError


def run_async(coro):
    """
    Run a coroutine to completion from synchronous code.

    Used by the tests and the command line to drive the in-process ``fastmcp.Client``
    against the engine tool server.

    Parameters
    ----------
    coro : coroutine
        The coroutine object to run (e.g. ``client.call_tool("dwpf", {...})``).

    Returns
    -------
    Any
        Whatever the coroutine returns.

    Notes
    -----
    Inside an already running loop (IPython, Jupyter) ``asyncio.run`` raises
    ``RuntimeError``; the loop is then patched with ``nest_asyncio`` and reused.

    Examples
    --------
    >>> async def answer():
    ...     return 42
    >>> run_async(answer())
    42
    """
    try:
        return asyncio.run(coro)
    except RuntimeError:
        nest_asyncio.apply()
        loop = asyncio.get_event_loop()
        return loop.run_until_complete(coro)


def load_document(source: str | Path | None) -> Any:
    """Parse the JSON input document from a path, or from stdin for ``-``/``None``."""
    try:
        if source in (None, "-"):
            return json.load(sys.stdin)
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"Malformed JSON input: {exc}") from exc
    except OSError as exc:
        raise InputError(f"Cannot read input {source}: {exc}") from exc


def dump_report(report: dict) -> str:
    """Deterministic JSON text of a report: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: dict, target: str | Path | None) -> None:
    text = dump_report(report)
    if target in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")

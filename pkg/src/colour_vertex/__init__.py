import sys


def main() -> None:
    from colour_vertex.controller.cli import main as run

    sys.exit(run())

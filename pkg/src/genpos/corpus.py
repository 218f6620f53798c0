"""Graph sources for scans: enumeration, the bundled order-7 corpus, files."""

from __future__ import annotations

from importlib import resources
from typing import Iterator

from .codecs import encode_graph6, read_graph6_lines
from .enumerate import MAX_ENUMERATION_ORDER, enumerate_connected_graphs
from .errors import CapacityError, ParseError
from .graph import Graph

BUNDLED_ORDERS = {7: "connected7.g6"}


def bundled_path(order: int):
    return resources.files("genpos") / "data" / BUNDLED_ORDERS[order]


def connected_graphs(order: int) -> Iterator[Graph]:
    """Connected graphs of exactly ``order`` vertices, one per class."""
    if order <= MAX_ENUMERATION_ORDER:
        yield from enumerate_connected_graphs(order)
    elif order in BUNDLED_ORDERS:
        with resources.as_file(bundled_path(order)) as path:
            for _, _, g in read_graph6_lines(path):
                yield g
    else:
        raise CapacityError(f"no generator for order {order}; pass a graph6 file")


def connected_graphs_up_to(max_order: int, min_order: int = 1) -> Iterator[tuple[str, Graph]]:
    for n in range(min_order, max_order + 1):
        for g in connected_graphs(n):
            yield encode_graph6(g), g


def graph6_source(path) -> Iterator[tuple[str, Graph | ParseError]]:
    for no, text, g in read_graph6_lines(path):
        yield (text if isinstance(g, Graph) else f"{path}:{no}"), g

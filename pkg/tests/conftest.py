import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tangle4.graph import is_k_connected  # noqa: E402
from tangle4.io import parse_graph6  # noqa: E402
from tangle4.named_graphs import NAMED  # noqa: E402

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def exhaustive_corpus():
    """Every 3-connected graph on 4..8 vertices."""
    out = []
    for n in range(4, 9):
        out.extend(parse_graph6(line) for line in (DATA / f"three_connected_{n}.g6").read_text().split())
    return tuple(out)


@lru_cache(maxsize=None)
def random_corpus():
    return tuple(parse_graph6(line) for line in (DATA / "random_3connected.g6").read_text().split())


@lru_cache(maxsize=None)
def named_graphs():
    return tuple((name, f()) for name, f in NAMED.items())


@lru_cache(maxsize=None)
def full_corpus():
    """The exhaustive and random corpora plus every 3-connected named graph."""
    named = tuple(g for _, g in named_graphs() if is_k_connected(g, 3))
    return exhaustive_corpus() + random_corpus() + named


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=lambda k: (int(str(k).split("-")[0]), str(k))):
        terminalreporter.write_line(mod.RESULTS[key])

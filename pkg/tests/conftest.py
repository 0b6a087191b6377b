import random

from hypothesis import strategies as st

from maxdrd.graph import build_graph
from maxdrd.corpus import prufer_tree


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if connected and n > 1:
        seed = draw(st.integers(0, 2**32 - 1))
        tree = prufer_tree(n, random.Random(seed))
        extra = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return build_graph(n, sorted(set(tree.edges()) | set(extra)))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    return prufer_tree(n, random.Random(draw(st.integers(0, 2**32 - 1))))


def spider(legs=(2, 2, 2)):
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return build_graph(nxt, edges)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])

import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from betti_forge.graph import make_graph

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


def naive_components(n, edges, subset):
    """Connected components of the induced subgraph, via plain set-based search."""
    subset = set(subset)
    nbrs = {v: set() for v in subset}
    for u, v in edges:
        if u in subset and v in subset:
            nbrs[u].add(v)
            nbrs[v].add(u)
    seen, comps = set(), []
    for v in sorted(subset):
        if v in seen:
            continue
        comp, todo = set(), [v]
        while todo:
            x = todo.pop()
            if x in comp:
                continue
            comp.add(x)
            todo.extend(nbrs[x] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def fraction_rank(rows):
    """Rank of a dense matrix by textbook Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion as PASS/FAIL for the terminal summary."""
    state = {"name": request.node.name, "detail": ""}

    def set_name(name, detail=""):
        state["name"], state["detail"] = name, detail

    yield set_name
    failed = getattr(request.node, "rep_call", None)
    ok = failed is not None and failed.passed
    ACCEPTANCE_RESULTS.append((state["name"], ok, state["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        line = f"[{'PASS' if ok else 'FAIL'}] {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)

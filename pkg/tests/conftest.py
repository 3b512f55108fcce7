from __future__ import annotations

import random

import pytest

from specfloor.graph import MultiGraph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    def _record(label: str, ok: bool, detail: str = "", status: str | None = None) -> None:
        line = f"{status or ('PASS' if ok else 'FAIL')} {label}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def path_oracle_usp(g: MultiGraph) -> int:
    """Parade number by enumerating every simple path, weighted by edge multiplicities."""
    best: dict[tuple[int, int], tuple[int, int]] = {}  # (s, t) -> (shortest length, weighted count)

    def walk(path: list[int], weight: int) -> None:
        s, t = path[0], path[-1]
        if s < t:
            length = len(path) - 1
            cur = best.get((s, t))
            if cur is None or length < cur[0]:
                best[(s, t)] = (length, weight)
            elif length == cur[0]:
                best[(s, t)] = (length, cur[1] + weight)
        for w in range(g.n):
            if g.mult[t][w] and w not in path:
                path.append(w)
                walk(path, weight * g.mult[t][w])
                path.pop()

    for s in range(g.n):
        walk([s], 1)
    usp = 1 if g.n else 0
    for length, count in best.values():
        if count == 1:
            usp = max(usp, length + 1)
    return usp


def random_multigraph(rng: random.Random, n: int, weights=(0, 0, 1, 2)) -> MultiGraph:
    return MultiGraph.from_pairs(n, {(i, j): rng.choice(weights) for i in range(n) for j in range(i + 1, n)})

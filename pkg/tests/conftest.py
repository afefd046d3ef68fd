from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from paritydom.gf2 import Gf2Matrix
from paritydom.graph import Graph


def dense(m: Gf2Matrix) -> np.ndarray:
    return np.array([[m[i, j] for j in range(m.cols)] for i in range(m.rows)], dtype=np.int64).reshape(m.rows, m.cols)


def brute_solutions(m: Gf2Matrix, b: list[int]) -> list[tuple[int, ...]]:
    """Every x in {0,1}^cols with m x = b, by enumeration with integer matmul."""
    a = dense(m)
    target = np.array(b, dtype=np.int64)
    out = []
    for x in itertools.product((0, 1), repeat=m.cols):
        if np.array_equal(a @ np.array(x, dtype=np.int64).reshape(m.cols) % 2, target):
            out.append(x)
    return out


@st.composite
def gf2_matrices(draw, max_rows: int = 8, max_cols: int = 8) -> Gf2Matrix:
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(0, max_cols))
    data = draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=rows, max_size=rows))
    return Gf2Matrix(rows, cols, data)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, c in zip(pairs, chosen) if c))


@pytest.fixture
def p3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])

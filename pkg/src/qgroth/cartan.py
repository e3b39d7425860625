"""Simply-laced Cartan data and the coefficient functions derived from the
quantum Cartan matrix.

Node numbering follows the Bourbaki convention:

* type A_n: a path 1 - 2 - ... - n;
* type D_n: a path 1 - 2 - ... - (n-2) - (n-1), with node n also attached
  to node n-2 (so for D_4 the branch node is 2);
* type E_n: a path 1 - 3 - 4 - 5 - 6 (- 7 - 8), with node 2 attached to
  node 4.

The inverse of the quantum Cartan matrix C(z) is a matrix of power series
in z; its integer coefficients ctilde(i, j, m) are computed by the linear
recurrence

    ctilde(i, j, m + 1) = -ctilde(i, j, m - 1) + sum_{k ~ j} ctilde(i, k, m)

seeded by ctilde(i, j, 0) = 0 and ctilde(i, j, 1) = delta_{ij}.  Everything
downstream (the skew forms on the two quantum tori) is derived from these
integers, so no rational-function arithmetic is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DUAL_COXETER = {
    "A": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
}

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
}


class CartanError(ValueError):
    """Invalid Dynkin type or node/level arguments."""


def _edges(type_label: str, rank: int) -> set[frozenset[int]]:
    if type_label == "A":
        return {frozenset((k, k + 1)) for k in range(1, rank)}
    if type_label == "D":
        edges = {frozenset((k, k + 1)) for k in range(1, rank - 1)}
        edges.add(frozenset((rank - 2, rank)))
        return edges
    # type E: path 1-3-4-...-n plus the branch 2-4
    chain = [1, 3, 4, 5, 6, 7, 8][: rank - 1]
    edges = {frozenset((a, b)) for a, b in zip(chain, chain[1:])}
    edges.add(frozenset((2, 4)))
    return edges


@dataclass
class CartanData:
    """Cartan matrix, Dynkin graph and quantum-Cartan coefficient cache.

    Immutable after construction except for the memo table, which behaves
    as a pure cache (idempotent fills), so instances are safe to share.
    """

    dynkin_type: str
    rank: int
    cartan: np.ndarray
    adjacency: frozenset[frozenset[int]]
    dual_coxeter: int
    _neighbors: dict[int, tuple[int, ...]] = field(repr=False, default_factory=dict)
    _node_class: dict[int, int] = field(repr=False, default_factory=dict)
    # per column j: list of rows [ctilde(i, j, m) for i in 1..n], filled on demand
    _ctilde: dict[int, list[np.ndarray]] = field(repr=False, default_factory=dict)
    # (i, j, m) -> f_form value; the star product hits this constantly
    _fform: dict[tuple[int, int, int], int] = field(repr=False, default_factory=dict)

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def neighbors(self, i: int) -> tuple[int, ...]:
        self._check_node(i)
        return self._neighbors[i]

    def node_class(self, i: int) -> int:
        """Bipartite class of node i: distance from node 1, mod 2."""
        self._check_node(i)
        return self._node_class[i]

    def in_ihat(self, i: int, r: int) -> bool:
        """Whether the vertex (i, r) lies on the chosen bipartite component
        (the one containing (1, 0))."""
        self._check_node(i)
        return (r - self._node_class[i]) % 2 == 0

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise CartanError(f"node {i} out of range for {self.dynkin_type}{self.rank}")


def build_cartan(type_label: str, rank: int) -> CartanData:
    """Construct the Cartan data of the simply-laced type (type_label, rank)."""
    if type_label not in VALID_RANKS:
        raise CartanError(
            f"unknown Dynkin type {type_label!r}: expected one of A, D, E"
        )
    if not isinstance(rank, int) or not VALID_RANKS[type_label](rank):
        raise CartanError(
            f"invalid rank {rank} for type {type_label} "
            "(A: n>=1, D: n>=4, E: n in {6,7,8})"
        )
    edges = _edges(type_label, rank)
    cartan = 2 * np.eye(rank, dtype=np.int64)
    for e in edges:
        a, b = sorted(e)
        cartan[a - 1, b - 1] = cartan[b - 1, a - 1] = -1

    neighbors = {
        i: tuple(sorted(j for j in range(1, rank + 1) if frozenset((i, j)) in edges))
        for i in range(1, rank + 1)
    }

    # bipartite classes by BFS from node 1
    node_class = {1: 0}
    frontier = [1]
    while frontier:
        nxt = []
        for i in frontier:
            for j in neighbors[i]:
                if j not in node_class:
                    node_class[j] = (node_class[i] + 1) % 2
                    nxt.append(j)
        frontier = nxt

    return CartanData(
        dynkin_type=type_label,
        rank=rank,
        cartan=cartan,
        adjacency=frozenset(edges),
        dual_coxeter=DUAL_COXETER[type_label](rank),
        _neighbors=neighbors,
        _node_class=node_class,
    )


def _ctilde_column(c: CartanData, j: int, m: int) -> list[np.ndarray]:
    """Rows ctilde(., j, k) for k <= m, extending the memoized table."""
    col = c._ctilde.setdefault(j, [])
    if not col:
        zero = np.zeros(c.rank, dtype=np.int64)
        delta = np.zeros(c.rank, dtype=np.int64)
        delta[j - 1] = 1
        col.extend([zero, delta])
    while len(col) <= m:
        k = len(col) - 1
        acc = -col[k - 1].copy()
        for nb in c.neighbors(j):
            acc += _ctilde_column(c, nb, k)[k]
        col.append(acc)
    return col


def ctilde(c: CartanData, i: int, j: int, m: int) -> int:
    """Coefficient of z^m in entry (i, j) of the inverse quantum Cartan matrix."""
    c._check_node(i)
    c._check_node(j)
    if m < 0:
        raise CartanError(f"ctilde degree must be non-negative, got {m}")
    return int(_ctilde_column(c, j, m)[m][i - 1])


def n_form(c: CartanData, i: int, j: int, m: int) -> int:
    """Skew form coefficient governing t-commutation of the Y-variables.

    Antisymmetric in m; for m >= 0 it is ctilde(m+1) - ctilde(m-1)."""
    if m == 0:
        c._check_node(i)
        c._check_node(j)
        return 0
    if m < 0:
        return -n_form(c, i, j, -m)
    low = ctilde(c, i, j, m - 1) if m >= 1 else 0
    return ctilde(c, i, j, m + 1) - low


def f_form(c: CartanData, i: int, j: int, m: int) -> int:
    """Skew form coefficient governing t-commutation of the z-variables.

    Antisymmetric in m; for m >= 0 it is -sum_{k>=1, m>=2k-1} ctilde(m-2k+1),
    i.e. minus the sum of ctilde over degrees m-1, m-3, ..., down to 0 or 1.
    """
    if m == 0:
        c._check_node(i)
        c._check_node(j)
        return 0
    if m < 0:
        return -f_form(c, i, j, -m)
    cached = c._fform.get((i, j, m))
    if cached is None:
        cached = -sum(
            ctilde(c, i, j, m - 2 * k + 1) for k in range(1, (m + 1) // 2 + 1)
        )
        c._fform[(i, j, m)] = cached
    return cached

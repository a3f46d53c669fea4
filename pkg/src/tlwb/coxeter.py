"""Coxeter graphs, specialized to the simply laced ones this workbench uses.

A Coxeter graph on generators 0..size-1 is stored as the set of its
label-3 bonds; every other off-diagonal entry of the Coxeter matrix is
2 (the generators commute) and the diagonal is 1.

The affine-D builder fixes the node convention the rest of the package
relies on: nodes 0 and 1 are the left fork, both attached to node 2, a
chain runs 2 - 3 - ... - n, and nodes n+1 and n+2 are the right fork,
both attached to node n.  For n = 2 the chain is a single node and the
graph is a star with centre 2 and leaves 0, 1, 3, 4.

Path graphs (type A) are also provided; the diagram calculus restricted
to undecorated diagrams is checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CoxeterGraph:
    """Simply laced Coxeter graph: m(i,j) is 3 on `bonds`, else 2, and 1 on the diagonal."""

    size: int
    bonds: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("graph needs at least one generator")
        for i, j in self.bonds:
            if not (0 <= i < j < self.size):
                raise ValueError(f"bad bond ({i},{j}) for size {self.size}")

    @property
    def generators(self) -> range:
        return range(self.size)

    def _check(self, i: int) -> None:
        if not 0 <= i < self.size:
            raise ValueError(f"generator {i} out of range for size {self.size}")

    def m(self, i: int, j: int) -> int:
        """Coxeter matrix entry."""
        self._check(i)
        self._check(j)
        if i == j:
            return 1
        return 3 if (min(i, j), max(i, j)) in self.bonds else 2

    def adjacent(self, i: int, j: int) -> bool:
        """True iff i and j are joined by a bond, i.e. m(i,j) = 3."""
        if i == j:
            raise ValueError("adjacency is only defined for distinct generators")
        return self.m(i, j) == 3

    def commutes(self, i: int, j: int) -> bool:
        """True iff i != j and m(i,j) = 2."""
        return i != j and self.m(i, j) == 2

    def degree(self, i: int) -> int:
        self._check(i)
        return sum(1 for b in self.bonds if i in b)


def build_affine_d(n: int) -> CoxeterGraph:
    """The affine-D graph on nodes 0..n+2 described in the module docstring.

    Requires n >= 2 so the two forks sit on distinct nodes.
    """
    if n < 2:
        raise ValueError(f"affine-D graph needs n >= 2, got {n}")
    bonds = {(0, 2), (1, 2)}
    bonds.update((i, i + 1) for i in range(2, n))
    bonds.add((n, n + 1))
    bonds.add((n, n + 2))
    return CoxeterGraph(n + 3, frozenset(bonds))


def build_path(k: int) -> CoxeterGraph:
    """Path graph (type A) on nodes 0..k-1."""
    if k < 1:
        raise ValueError(f"path graph needs at least one node, got {k}")
    return CoxeterGraph(k, frozenset((i, i + 1) for i in range(k - 1)))


def format_graph(g: CoxeterGraph) -> str:
    """Text form: the node count, then one `i j 3` line per bond."""
    lines = [str(g.size)]
    lines.extend(f"{i} {j} 3" for i, j in sorted(g.bonds))
    return "\n".join(lines)


def parse_graph(text: str) -> CoxeterGraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty graph text")
    size = int(lines[0])
    bonds = set()
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 3:
            raise ValueError(f"bad bond line: {ln!r}")
        i, j, m = (int(f) for f in fields)
        if m != 3:
            raise ValueError(f"only label-3 bonds are supported, got {ln!r}")
        if i == j:
            raise ValueError(f"self bond: {ln!r}")
        bonds.add((min(i, j), max(i, j)))
    return CoxeterGraph(size, frozenset(bonds))

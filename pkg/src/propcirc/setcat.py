"""Cospans of finite sets, corelations, and the functors H and K.

Both kinds of morphism are stored in a canonical form so that ``==`` is
equality of isomorphism classes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .kfield import ONE, ZERO
from .linrel import ArityError, LinRel


class UnionFind:
    """Disjoint sets on 0..n-1 with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


@dataclass(frozen=True)
class Cospan:
    m: int
    n: int
    apex: int
    i: Tuple[int, ...]
    o: Tuple[int, ...]

    @classmethod
    def make(cls, apex: int, i: Sequence[int], o: Sequence[int]) -> "Cospan":
        """Canonical representative of the cospan ``i: m -> apex <- n: o``."""
        for x in list(i) + list(o):
            if not 0 <= x < apex:
                raise ValueError(f"apex index {x} out of range for apex of size {apex}")
        relabel: Dict[int, int] = {}
        for x in list(i) + list(o):
            if x not in relabel:
                relabel[x] = len(relabel)
        return cls(len(i), len(o), apex, tuple(relabel[x] for x in i), tuple(relabel[x] for x in o))

    @classmethod
    def identity(cls, n: int) -> "Cospan":
        return cls.make(n, range(n), range(n))

    @classmethod
    def symmetry(cls, m: int, n: int) -> "Cospan":
        return cls.make(m + n, range(m + n), list(range(m, m + n)) + list(range(m)))

    @property
    def floating(self) -> int:
        """Number of apex points outside the image of both legs."""
        return self.apex - len(set(self.i) | set(self.o))

    def then(self, other: "Cospan") -> "Cospan":
        return cospan_compose(self, other)

    def tensor(self, other: "Cospan") -> "Cospan":
        return cospan_tensor(self, other)


def cospan_compose(f: Cospan, g: Cospan) -> Cospan:
    """Pushout composite: ``f`` then ``g``."""
    if f.n != g.m:
        raise ArityError(f"cannot compose cospan {f.m}->{f.n} with {g.m}->{g.n}")
    uf = UnionFind(f.apex + g.apex)
    for a, b in zip(f.o, g.i):
        uf.union(a, f.apex + b)
    roots: Dict[int, int] = {}
    for x in range(f.apex + g.apex):
        roots.setdefault(uf.find(x), len(roots))
    i = [roots[uf.find(x)] for x in f.i]
    o = [roots[uf.find(f.apex + y)] for y in g.o]
    return Cospan.make(len(roots), i, o)


def cospan_tensor(f: Cospan, g: Cospan) -> Cospan:
    return Cospan.make(
        f.apex + g.apex,
        list(f.i) + [f.apex + x for x in g.i],
        list(f.o) + [f.apex + y for y in g.o],
    )


@dataclass(frozen=True)
class Corelation:
    """Partition of m + n points; each point carries the least member of its block."""

    m: int
    n: int
    block: Tuple[int, ...]

    @classmethod
    def from_labels(cls, m: int, n: int, labels: Sequence) -> "Corelation":
        """Canonicalize any labelling in which equal labels mean the same block."""
        if len(labels) != m + n:
            raise ArityError(f"{len(labels)} labels for a corelation {m}->{n}")
        least: Dict[object, int] = {}
        out = []
        for k, lab in enumerate(labels):
            out.append(least.setdefault(lab, k))
        return cls(m, n, tuple(out))

    @classmethod
    def from_blocks(cls, m: int, n: int, blocks: Iterable[Iterable[int]]) -> "Corelation":
        labels: List[int] = [-1] * (m + n)
        for b, members in enumerate(blocks):
            for k in members:
                labels[k] = b
        if -1 in labels:
            raise ValueError("blocks do not cover every boundary point")
        return cls.from_labels(m, n, labels)

    @classmethod
    def identity(cls, n: int) -> "Corelation":
        return cls.from_labels(n, n, list(range(n)) * 2)

    @classmethod
    def symmetry(cls, m: int, n: int) -> "Corelation":
        return functor_H(Cospan.symmetry(m, n))

    def blocks(self) -> List[List[int]]:
        out: Dict[int, List[int]] = {}
        for k, b in enumerate(self.block):
            out.setdefault(b, []).append(k)
        return list(out.values())

    def then(self, other: "Corelation") -> "Corelation":
        return corel_compose(self, other)

    def tensor(self, other: "Corelation") -> "Corelation":
        return corel_tensor(self, other)

    def to_text(self) -> str:
        return f"{self.m} {self.n} | " + " ".join(str(b) for b in self.block)

    @classmethod
    def from_text(cls, text: str) -> "Corelation":
        head, _, body = text.partition("|")
        m, n = (int(x) for x in head.split())
        c = cls.from_labels(m, n, [int(x) for x in body.split()])
        if c.block != tuple(int(x) for x in body.split()):
            raise ValueError(f"labels are not least-member canonical: {text!r}")
        return c


def functor_H(f: Cospan) -> Corelation:
    """Jointly epic part of a cospan: the partition induced on m + n."""
    return Corelation.from_labels(f.m, f.n, list(f.i) + list(f.o))


def corel_compose(r: Corelation, s: Corelation) -> Corelation:
    """Union the two partitions over m + n + p, then forget the middle n."""
    if r.n != s.m:
        raise ArityError(f"cannot compose corelation {r.m}->{r.n} with {s.m}->{s.n}")
    m, n, p = r.m, r.n, s.n
    uf = UnionFind(m + n + p)
    for k, b in enumerate(r.block):
        uf.union(k, b)
    for k, b in enumerate(s.block):
        uf.union(m + k, m + b)
    outer = list(range(m)) + list(range(m + n, m + n + p))
    return Corelation.from_labels(m, p, [uf.find(k) for k in outer])


def corel_tensor(r: Corelation, s: Corelation) -> Corelation:
    # tag labels so that s's blocks cannot collide with r's
    labels = [("r", b) for b in r.block[: r.m]] + [("s", b) for b in s.block[: s.m]]
    labels += [("r", b) for b in r.block[r.m:]] + [("s", b) for b in s.block[s.m:]]
    return Corelation.from_labels(r.m + s.m, r.n + s.n, labels)


def functor_K(c: Corelation) -> LinRel:
    """Potentials agree on each block; input currents sum to output currents."""
    width = 2 * (c.m + c.n)
    rows = []
    for members in c.blocks():
        first = members[0]
        for t in members[1:]:
            row = [ZERO] * width
            row[2 * t] = ONE
            row[2 * first] = -ONE
            rows.append(row)
        row = [ZERO] * width
        for t in members:
            row[2 * t + 1] = ONE if t < c.m else -ONE
        rows.append(row)
    return LinRel.from_constraints(2 * c.m, 2 * c.n, rows)


# generator cospans: multiplication, unit, comultiplication, counit
MU = Cospan.make(1, [0, 0], [0])
IOTA = Cospan.make(1, [], [0])
DELTA = Cospan.make(1, [0], [0, 0])
EPSILON = Cospan.make(1, [0], [])

FROBENIUS_COSPANS = {"mu": MU, "iota": IOTA, "delta": DELTA, "epsilon": EPSILON}
FROBENIUS_CORELATIONS = {k: functor_H(v) for k, v in FROBENIUS_COSPANS.items()}

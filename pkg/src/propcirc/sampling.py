"""Seeded random circuits and relations for property checks."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .circuit import ELEMENT_KINDS, Circuit, Edge, Label
from .kfield import S, Scalar
from .linrel import LinRel
from .setcat import Corelation, Cospan
from .symplag import AffRel

IMPEDANCES = tuple(Scalar.coerce(x) for x in (1, 2, 3, Fraction(1, 2), Fraction(3, 2), Fraction(2, 3)))
SOURCES = tuple(Scalar.coerce(x) for x in (0, 1, -1, 2, Fraction(1, 2), -3))
Z_VALUES = IMPEDANCES + (S, 2 * S + 1, 1 / S)


# sources make most random loops inconsistent, so they are drawn less often
KIND_WEIGHTS = {"wire": 3, "Z": 3, "R": 3, "L": 3, "C": 3, "V": 2, "I": 1}


def random_label(rng: random.Random, kinds: Sequence[str] = ELEMENT_KINDS) -> Label:
    kinds = list(kinds)
    kind = rng.choices(kinds, weights=[KIND_WEIGHTS[k] for k in kinds])[0]
    if kind == "wire":
        return Label("wire")
    if kind in ("V", "I"):
        return Label(kind, rng.choice(SOURCES))
    if kind == "Z":
        return Label(kind, rng.choice(Z_VALUES))
    return Label(kind, rng.choice(IMPEDANCES))


def random_circuit(rng: random.Random, m: int, n: int, *, max_nodes: int = 6, max_edges: int = 6,
                   kinds: Sequence[str] = ELEMENT_KINDS) -> Circuit:
    nodes = rng.randint(1, max_nodes)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        label = random_label(rng, kinds)
        src, tgt = rng.randrange(nodes), rng.randrange(nodes)
        # a voltage source looped on one node is almost always inconsistent
        if label.kind == "V" and src == tgt and nodes > 1:
            tgt = (src + rng.randrange(1, nodes)) % nodes
        edges.append(Edge(src, tgt, label))
    inputs = tuple(rng.randrange(nodes) for _ in range(m))
    outputs = tuple(rng.randrange(nodes) for _ in range(n))
    return Circuit(nodes, tuple(edges), inputs, outputs)


def random_composable_circuits(rng: random.Random, max_boundary: int = 3, **kw) -> Tuple[Circuit, Circuit]:
    a, b, c = (rng.randint(0, max_boundary) for _ in range(3))
    return random_circuit(rng, a, b, **kw), random_circuit(rng, b, c, **kw)


def random_entry(rng: random.Random, symbolic: bool = True) -> Scalar:
    r = rng.random()
    if r < 0.45:
        return Scalar.coerce(0)
    if symbolic and r > 0.93:
        return rng.choice((S, 1 / S, S + 1))
    return Scalar.coerce(rng.choice((1, -1, 2, -2, 3, Fraction(1, 2))))


def random_linrel(rng: random.Random, dom: int, cod: int, rank: Optional[int] = None,
                  symbolic: bool = True) -> LinRel:
    width = dom + cod
    if rank is None:
        rank = rng.randint(0, width)
    vecs = [[random_entry(rng, symbolic) for _ in range(width)] for _ in range(rank)]
    return LinRel(dom, cod, vecs)


def random_affrel(rng: random.Random, dom: int, cod: int, *, p_empty: float = 0.1,
                  symbolic: bool = True) -> AffRel:
    if rng.random() < p_empty:
        return AffRel.empty(dom, cod)
    lin = random_linrel(rng, dom, cod, rng.randint(0, dom + cod), symbolic)
    offset = [random_entry(rng, symbolic) for _ in range(dom + cod)]
    return AffRel(dom, cod, offset, lin)


def random_corelation(rng: random.Random, m: int, n: int) -> Corelation:
    k = max(1, m + n)
    return Corelation.from_labels(m, n, [rng.randrange(k) for _ in range(m + n)])


def random_cospan(rng: random.Random, m: int, n: int, max_apex: int = 6) -> Cospan:
    apex = rng.randint(1 if m + n else 0, max_apex)
    return Cospan.make(apex, [rng.randrange(apex) for _ in range(m)], [rng.randrange(apex) for _ in range(n)])

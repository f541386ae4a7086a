"""Circuits as morphisms: labelled graphs with input and output terminals.

Black-boxing assembles one affine system in the node potentials, edge
currents and boundary (potential, current) pairs, then projects it onto the
boundary.  Boundary coordinates are ordered inputs first, each terminal
contributing an adjacent (phi, I) pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Tuple, Union

from .kfield import ONE, ZERO, Coercible, S, Scalar
from .linrel import ArityError, LinRel
from .matrix import eliminate
from .setcat import Cospan, UnionFind
from .symplag import AffRel, as_affine

ELEMENT_KINDS = ("wire", "Z", "R", "L", "C", "V", "I")


@dataclass(frozen=True)
class Label:
    """A circuit element: its kind and, except for wires, a parameter."""

    kind: str
    value: Optional[Scalar] = None

    def __post_init__(self):
        if self.kind not in ELEMENT_KINDS:
            raise ValueError(f"unknown element kind {self.kind!r}")
        if self.kind == "wire":
            if self.value is not None:
                raise ValueError("a wire takes no value")
        else:
            if self.value is None:
                raise ValueError(f"element {self.kind!r} needs a value")
            object.__setattr__(self, "value", Scalar.coerce(self.value))

    def __str__(self) -> str:
        return self.kind if self.value is None else f"{self.kind}={self.value}"


WIRE = Label("wire")


@dataclass(frozen=True)
class Edge:
    src: int
    tgt: int
    label: Hashable


@dataclass(frozen=True)
class Circuit:
    nodes: int
    edges: Tuple[Edge, ...] = ()
    inputs: Tuple[int, ...] = ()
    outputs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges))
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        for e in self.edges:
            if not (0 <= e.src < self.nodes and 0 <= e.tgt < self.nodes):
                raise ValueError(f"edge {e.src}->{e.tgt} out of range for {self.nodes} nodes")
        for x in self.inputs + self.outputs:
            if not 0 <= x < self.nodes:
                raise ValueError(f"terminal node {x} out of range for {self.nodes} nodes")

    @property
    def m(self) -> int:
        return len(self.inputs)

    @property
    def n(self) -> int:
        return len(self.outputs)

    @classmethod
    def identity(cls, n: int) -> "Circuit":
        return cls(n, (), tuple(range(n)), tuple(range(n)))

    @classmethod
    def symmetry(cls, m: int, n: int) -> "Circuit":
        return cls(m + n, (), tuple(range(m + n)), tuple(range(m, m + n)) + tuple(range(m)))

    @classmethod
    def element(cls, label: Hashable) -> "Circuit":
        """Two nodes joined by one labelled edge, input at the source."""
        return cls(2, (Edge(0, 1, label),), (0,), (1,))

    def then(self, other: "Circuit") -> "Circuit":
        return circ_compose(self, other)

    def tensor(self, other: "Circuit") -> "Circuit":
        return circ_tensor(self, other)

    def relabel(self, fn: Callable[[Hashable], Hashable]) -> "Circuit":
        return Circuit(self.nodes, tuple(Edge(e.src, e.tgt, fn(e.label)) for e in self.edges),
                       self.inputs, self.outputs)


def circ_compose(f: Circuit, g: Circuit) -> Circuit:
    """Glue the outputs of ``f`` to the inputs of ``g`` (pushout of node sets)."""
    if f.n != g.m:
        raise ArityError(f"cannot compose circuit {f.m}->{f.n} with {g.m}->{g.n}")
    uf = UnionFind(f.nodes + g.nodes)
    for a, b in zip(f.outputs, g.inputs):
        uf.union(a, f.nodes + b)
    index: Dict[int, int] = {}
    for x in range(f.nodes + g.nodes):
        index.setdefault(uf.find(x), len(index))

    def node(x: int) -> int:
        return index[uf.find(x)]

    edges = [Edge(node(e.src), node(e.tgt), e.label) for e in f.edges]
    edges += [Edge(node(f.nodes + e.src), node(f.nodes + e.tgt), e.label) for e in g.edges]
    return Circuit(len(index), tuple(edges),
                   tuple(node(x) for x in f.inputs),
                   tuple(node(f.nodes + y) for y in g.outputs))


def circ_tensor(f: Circuit, g: Circuit) -> Circuit:
    k = f.nodes
    return Circuit(
        f.nodes + g.nodes,
        f.edges + tuple(Edge(e.src + k, e.tgt + k, e.label) for e in g.edges),
        f.inputs + tuple(x + k for x in g.inputs),
        f.outputs + tuple(y + k for y in g.outputs),
    )


def functor_G(c: Circuit) -> Cospan:
    """Collapse every edge: the apex becomes the set of connected components."""
    uf = UnionFind(c.nodes)
    for e in c.edges:
        uf.union(e.src, e.tgt)
    comp: Dict[int, int] = {}
    for v in range(c.nodes):
        comp.setdefault(uf.find(v), len(comp))
    return Cospan.make(len(comp), [comp[uf.find(x)] for x in c.inputs],
                       [comp[uf.find(y)] for y in c.outputs])


# -- element semantics ----------------------------------------------------

def _impedance(z: Scalar) -> LinRel:
    # phi2 - phi1 = z I1, I1 = I2
    return LinRel.from_constraints(2, 2, [(-ONE, -z, ONE, ZERO), (ZERO, ONE, ZERO, -ONE)])


def element_relation(kind: str, value: Optional[Coercible] = None) -> AffRel:
    """Behaviour of one two-terminal element on (phi1, I1, phi2, I2)."""
    if kind == "wire":
        return AffRel.linear_part(LinRel.identity(2))
    if value is None:
        raise ValueError(f"element {kind!r} needs a value")
    v = Scalar.coerce(value)
    if kind in ("Z", "R"):
        return AffRel.linear_part(_impedance(v))
    if kind == "L":
        return AffRel.linear_part(_impedance(S * v))
    if kind == "C":
        sc = S * v
        return AffRel.linear_part(LinRel.from_constraints(
            2, 2, [(-sc, -ONE, sc, ZERO), (ZERO, ONE, ZERO, -ONE)]))
    if kind == "V":
        return AffRel(2, 2, (ZERO, ZERO, v, ZERO), LinRel.identity(2))
    if kind == "I":
        return AffRel(2, 2, (ZERO, v, ZERO, v), LinRel.from_constraints(
            2, 2, [(ZERO, ONE, ZERO, ZERO), (ZERO, ZERO, ZERO, ONE)]))
    raise ValueError(f"unknown element kind {kind!r}")


def builtin_semantics(spec: Iterable[Tuple[Hashable, str, Optional[Coercible]]]) -> Dict[Hashable, AffRel]:
    """Map each label reference to the relation of its element kind."""
    return {ref: element_relation(kind, value) for ref, kind, value in spec}


class MissingSemantics(KeyError):
    pass


SemanticsLike = Union[Mapping[Hashable, Union[AffRel, LinRel]], Callable[[Hashable], Union[AffRel, LinRel]], None]


def _resolver(sem: SemanticsLike) -> Callable[[Hashable], AffRel]:
    def lookup(label):
        if sem is None:
            if not isinstance(label, Label):
                raise MissingSemantics(f"no semantics for label {label!r}")
            rel = element_relation(label.kind, label.value)
        elif callable(sem) and not isinstance(sem, Mapping):
            rel = sem(label)
        else:
            try:
                rel = sem[label]
            except KeyError:
                raise MissingSemantics(f"no semantics for label {label!r}") from None
        rel = as_affine(rel)
        if (rel.dom, rel.cod) != (2, 2):
            raise ArityError(f"label {label!r} must denote a relation 2->2, got {rel.dom}->{rel.cod}")
        return rel
    return lookup


def blackbox(c: Circuit, sem: SemanticsLike = None) -> AffRel:
    """Relation imposed on boundary potentials and currents.

    ``sem`` maps labels to relations on (phi1, I1, phi2, I2); by default
    :class:`Label` edges get their built-in element behaviour.
    """
    lookup = _resolver(sem)
    N, E, m, n = c.nodes, len(c.edges), c.m, c.n
    bnd = N + 2 * E
    width = bnd + 2 * (m + n)
    rows: List[List[Scalar]] = []
    rhs: List[Scalar] = []
    cache: Dict[Hashable, Tuple[list, list]] = {}

    for k, e in enumerate(c.edges):
        if e.label not in cache:
            rel = lookup(e.label)
            if rel.is_empty:
                return AffRel.empty(2 * m, 2 * n)
            cache[e.label] = rel.constraints()
        erows, erhs = cache[e.label]
        cols = (e.src, N + 2 * k, e.tgt, N + 2 * k + 1)
        for r, b in zip(erows, erhs):
            row = [ZERO] * width
            for col, coef in zip(cols, r):
                if coef:
                    row[col] = row[col] + coef
            rows.append(row)
            rhs.append(b)

    terminals = [(x, +1) for x in c.inputs] + [(y, -1) for y in c.outputs]
    kcl = [[ZERO] * width for _ in range(N)]
    for t, (v, sign) in enumerate(terminals):
        row = [ZERO] * width
        row[bnd + 2 * t] = ONE
        row[v] = -ONE
        rows.append(row)
        rhs.append(ZERO)
        # input currents flow into their node, output currents out of it
        kcl[v][bnd + 2 * t + 1] += ONE if sign > 0 else -ONE
    for k, e in enumerate(c.edges):
        kcl[e.src][N + 2 * k] -= ONE
        kcl[e.tgt][N + 2 * k + 1] += ONE
    rows.extend(kcl)
    rhs.extend([ZERO] * N)

    projected = eliminate(rows, rhs, width, list(range(bnd, width)))
    if projected is None:
        return AffRel.empty(2 * m, 2 * n)
    return AffRel.from_constraints(2 * m, 2 * n, *projected)


def boundary_names(m: int, n: int) -> List[str]:
    names = []
    for i in range(m):
        names += [f"phi_in[{i}]", f"I_in[{i}]"]
    for j in range(n):
        names += [f"phi_out[{j}]", f"I_out[{j}]"]
    return names


def semantically_equal(f: Circuit, g: Circuit, sem: SemanticsLike = None) -> bool:
    return (f.m, f.n) == (g.m, g.n) and blackbox(f, sem) == blackbox(g, sem)

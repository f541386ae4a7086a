import pytest

from propcirc.checks import case_rng
from propcirc.circuit import (WIRE, Circuit, Edge, Label, MissingSemantics, blackbox, builtin_semantics,
                              circ_compose, circ_tensor, element_relation, functor_G, semantically_equal)
from propcirc.kfield import ZERO, S, Scalar
from propcirc.linrel import ArityError, LinRel
from propcirc.sampling import random_circuit, random_composable_circuits
from propcirc.setcat import Cospan, cospan_compose, cospan_tensor
from propcirc.symplag import AffRel

from oracles import mna_system, same_as_mna


def impedance(z):
    return AffRel.linear_part(LinRel.from_constraints(2, 2, [(-1, -z, 1, 0), (0, 1, 0, -1)]))


def test_label_validation():
    with pytest.raises(ValueError):
        Label("wire", 1)
    with pytest.raises(ValueError):
        Label("R")
    with pytest.raises(ValueError):
        Label("X", 1)
    assert Label("R", "3/2").value == Scalar.coerce("3/2")
    assert str(Label("C", 2)) == "C=2"


def test_circuit_validation():
    with pytest.raises(ValueError):
        Circuit(2, (Edge(0, 2, WIRE),))
    with pytest.raises(ValueError):
        Circuit(1, (), (1,), ())


def test_series_composition_shape():
    z1, z2 = Label("Z", 1), Label("Z", 2)
    chain = circ_compose(Circuit.element(z1), Circuit.element(z2))
    assert chain.nodes == 3 and len(chain.edges) == 2
    assert chain.inputs == (0,) and chain.outputs == (2,)
    assert chain.edges[0].tgt == chain.edges[1].src


def test_compose_with_identity():
    for case in range(30):
        rng = case_rng(1, case)
        f = random_circuit(rng, rng.randint(0, 3), rng.randint(0, 3))
        assert semantically_equal(circ_compose(f, Circuit.identity(f.n)), f)
        assert semantically_equal(circ_compose(Circuit.identity(f.m), f), f)


def test_gluing_merges_only_shared_terminals():
    f = Circuit(4, (Edge(0, 2, Label("R", 1)), Edge(1, 3, Label("R", 2))), (0, 1), (2, 3))
    g = Circuit(3, (Edge(0, 2, Label("C", 1)), Edge(1, 2, Label("L", 1))), (0, 1), (2,))
    h = circ_compose(f, g)
    assert h.nodes == f.nodes + g.nodes - 2
    assert len(h.edges) == 4


def test_gluing_a_terminal_twice_identifies_nodes():
    # both outputs of f on one node, g's inputs distinct: they get merged
    f = Circuit(1, (), (0,), (0, 0))
    g = Circuit(2, (Edge(0, 1, Label("R", 1)),), (0, 1), ())
    h = circ_compose(f, g)
    assert h.nodes == 1 and h.edges[0].src == h.edges[0].tgt


def test_compose_arity_mismatch():
    with pytest.raises(ArityError):
        circ_compose(Circuit.identity(1), Circuit.identity(2))


def test_tensor_counts():
    f, g = Circuit.element(Label("R", 1)), Circuit(1, (), (0, 0), (0,))
    t = circ_tensor(f, g)
    assert (t.nodes, len(t.edges), t.m, t.n) == (3, 1, 3, 2)
    assert t.inputs == (0, 2, 2) and t.outputs == (1, 2)


def test_G_examples():
    assert functor_G(Circuit.element(WIRE)) == Cospan.identity(1)
    bare = Circuit(4, (), (0,), (3,))
    assert functor_G(bare).apex == 4 and functor_G(bare).floating == 2


def test_G_collapses_components():
    # five inputs and five outputs over twelve nodes; one component touches no terminal
    edges = [(0, 5), (1, 5), (2, 6), (6, 7), (3, 8), (9, 10), (10, 11)]
    c = Circuit(12, tuple(Edge(a, b, WIRE) for a, b in edges), (0, 1, 2, 3, 4), (5, 7, 8, 4, 4))
    g = functor_G(c)
    assert g.apex == 5
    assert g.floating == 1
    assert g.i == (0, 0, 1, 2, 3) and g.o == (0, 1, 2, 3, 3)


def test_G_functorial():
    for case in range(100):
        rng = case_rng(2, case)
        f, g = random_composable_circuits(rng)
        assert functor_G(circ_compose(f, g)) == cospan_compose(functor_G(f), functor_G(g))
        assert functor_G(circ_tensor(f, g)) == cospan_tensor(functor_G(f), functor_G(g))


def test_blackbox_single_edge():
    z = 2 * S + 3
    assert blackbox(Circuit.element(Label("Z", z))) == impedance(z)


def test_blackbox_merge_node():
    got = blackbox(Circuit(1, (), (0, 0), (0,)))
    assert got.contains([1, 2, 1, 3, 1, 5]) and not got.contains([1, 2, 1, 3, 1, 4])
    assert got.linear.dim == 3


def test_series_and_parallel():
    z1, z2 = S, Scalar.coerce(4)
    series = Circuit(3, (Edge(0, 1, Label("Z", z1)), Edge(1, 2, Label("Z", z2))), (0,), (2,))
    parallel = Circuit(2, (Edge(0, 1, Label("Z", z1)), Edge(0, 1, Label("Z", z2))), (0,), (1,))
    assert blackbox(series) == impedance(z1 + z2)
    assert blackbox(parallel) == impedance(z1 * z2 / (z1 + z2))


def test_parallel_sources():
    unequal = Circuit(2, (Edge(0, 1, Label("V", 1)), Edge(0, 1, Label("V", 2))), (0,), (1,))
    assert blackbox(unequal).is_empty
    assert mna_system(unequal) is None


def test_wire_is_zero_impedance():
    for case in range(30):
        c = random_circuit(case_rng(3, case), 1, 2, kinds=("wire", "R"))
        zeroed = c.relabel(lambda lab: Label("Z", 0) if lab == WIRE else lab)
        assert blackbox(c) == blackbox(zeroed)


def test_blackbox_matches_nodal_analysis():
    kinds_seen = set()
    for case in range(50):
        rng = case_rng(4, case)
        c = random_circuit(rng, rng.randint(0, 2), rng.randint(0, 2), max_nodes=4, max_edges=4)
        kinds_seen |= {e.label.kind for e in c.edges}
        assert same_as_mna(blackbox(c), c), c
    assert kinds_seen == {"wire", "Z", "R", "L", "C", "V", "I"}


@pytest.mark.parametrize("kind, value, row", [
    ("R", 2, (-1, -2, 1, 0)),
    ("C", "1/3", (-S / 3, -1, S / 3, 0)),
    ("L", 5, (-1, -5 * S, 1, 0)),
])
def test_builtin_passive(kind, value, row):
    expected = AffRel.linear_part(LinRel.from_constraints(2, 2, [row, (0, 1, 0, -1)]))
    assert builtin_semantics([("x", kind, value)])["x"] == expected


def test_builtin_voltage_source():
    rel = builtin_semantics([("v", "V", 5)])["v"]
    assert rel.linear == LinRel.identity(2)
    assert rel.offset == (ZERO, ZERO, Scalar.coerce(5), ZERO)


def test_element_relation_errors():
    with pytest.raises(ValueError):
        element_relation("R")
    with pytest.raises(ValueError):
        element_relation("Q", 1)


def test_custom_semantics():
    c = Circuit(2, (Edge(0, 1, "r"),), (0,), (1,))
    assert blackbox(c, {"r": element_relation("R", 7)}) == impedance(7)
    assert blackbox(c, lambda lab: impedance(7)) == impedance(7)
    assert blackbox(c, {"r": impedance(7).linear}) == impedance(7)
    with pytest.raises(MissingSemantics):
        blackbox(c, {})
    with pytest.raises(MissingSemantics):
        blackbox(c)


def test_semantics_must_be_two_terminal():
    c = Circuit(2, (Edge(0, 1, "r"),), (0,), (1,))
    with pytest.raises(ArityError):
        blackbox(c, {"r": AffRel.linear_part(LinRel.identity(1))})


def test_empty_label_semantics_gives_empty():
    c = Circuit(2, (Edge(0, 1, "x"),), (0,), (1,))
    assert blackbox(c, {"x": AffRel.empty(2, 2)}).is_empty


def test_edgeless_floating_nodes_are_harmless():
    assert blackbox(Circuit(3, (), (), ())) == AffRel.linear_part(LinRel(0, 0))

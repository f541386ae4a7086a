"""Frobenius and bimonoid equations as pairs of terms over mu, iota, delta, epsilon.

Each structure to be checked is a :class:`~propcirc.freeprop.PropAlgebra`
that interprets the four abstract generator names.
"""
from __future__ import annotations

from typing import Dict, List, NamedTuple, Tuple

from .freeprop import (AffRelAlgebra, CorelationAlgebra, CospanAlgebra, Gen, Id, LinRelAlgebra,
                       PropAlgebra, Sym, Term, _fold, par, seq)

mu, iota, delta, epsilon = Gen("mu"), Gen("iota"), Gen("delta"), Gen("epsilon")
one = Id(1)
swap = Sym(1, 1)


class Law(NamedTuple):
    name: str
    lhs: Term
    rhs: Term


MONOID = [
    Law("associativity", seq(par(mu, one), mu), seq(par(one, mu), mu)),
    Law("left unit", seq(par(iota, one), mu), one),
    Law("right unit", seq(par(one, iota), mu), one),
    Law("commutativity", seq(swap, mu), mu),
]

COMONOID = [
    Law("coassociativity", seq(delta, par(delta, one)), seq(delta, par(one, delta))),
    Law("left counit", seq(delta, par(epsilon, one)), one),
    Law("right counit", seq(delta, par(one, epsilon)), one),
    Law("cocommutativity", seq(delta, swap), delta),
]

FROBENIUS = MONOID + COMONOID + [
    Law("frobenius (left)", seq(par(delta, one), par(one, mu)), seq(mu, delta)),
    Law("frobenius (right)", seq(par(one, delta), par(mu, one)), seq(mu, delta)),
    Law("special", seq(delta, mu), one),
]

EXTRA = Law("extra", seq(iota, epsilon), Id(0))

EXTRASPECIAL_FROBENIUS = FROBENIUS + [EXTRA]

BIMONOID = MONOID + COMONOID + [
    Law("bimonoid", seq(mu, delta), seq(par(delta, delta), par(one, swap, one), par(mu, mu))),
    Law("unit copied", seq(iota, delta), par(iota, iota)),
    Law("counit of product", seq(mu, epsilon), par(epsilon, epsilon)),
    Law("unit then counit", seq(iota, epsilon), Id(0)),
]

DUPLICATIVE = {"mu": "codup", "iota": "codel", "delta": "dup", "epsilon": "del"}
ADDITIVE = {"mu": "add", "iota": "zero", "delta": "coadd", "epsilon": "cozero"}
ADD_DUP = {"mu": "add", "iota": "zero", "delta": "dup", "epsilon": "del"}
CODUP_COADD = {"mu": "codup", "iota": "codel", "delta": "coadd", "epsilon": "cozero"}


def check_law(law: Law, alg: PropAlgebra) -> bool:
    return _fold(law.lhs, alg) == _fold(law.rhs, alg)


class Expectation(NamedTuple):
    structure: str
    law: Law
    algebra: PropAlgebra
    holds: bool


def law_suite() -> List[Expectation]:
    """Every equation checked by the frobenius suite, with whether it should hold."""
    cases: List[Tuple[str, PropAlgebra, List[Law], List[Law]]] = [
        ("FinRel duplicative", LinRelAlgebra(DUPLICATIVE), EXTRASPECIAL_FROBENIUS, []),
        ("FinRel additive", LinRelAlgebra(ADDITIVE), EXTRASPECIAL_FROBENIUS, []),
        ("FinRel (+, 0, dup, del)", LinRelAlgebra(ADD_DUP), BIMONOID, []),
        ("FinRel (codup, codel, coadd, cozero)", LinRelAlgebra(CODUP_COADD), BIMONOID, []),
        ("FinCorel", CorelationAlgebra(), EXTRASPECIAL_FROBENIUS, []),
        ("FinCospan", CospanAlgebra(), FROBENIUS, [EXTRA]),
        ("LagRel (k+k)", AffRelAlgebra(), EXTRASPECIAL_FROBENIUS, []),
    ]
    out = []
    for name, alg, holding, failing in cases:
        out += [Expectation(name, law, alg, True) for law in holding]
        out += [Expectation(name, law, alg, False) for law in failing]
    return out


def run_law_suite() -> Dict[str, int]:
    """Counts of expectations met and missed; a failing law counts when it fails."""
    met = missed = 0
    for e in law_suite():
        if check_law(e.law, e.algebra) == e.holds:
            met += 1
        else:
            missed += 1
    return {"passed": met, "failed": missed}

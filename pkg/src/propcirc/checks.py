"""Seeded property suites shared by the command line and the test-suite.

A suite maps ``(seed, case)`` to a :class:`CaseResult`; every case is
reproducible from those two numbers alone.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, NamedTuple, Optional

from .circuit import blackbox, circ_compose, circ_tensor, functor_G
from .freeprop import CCIRC_K, interp_box, interp_P, random_term, translate_T
from .laws import check_law, law_suite
from .sampling import random_affrel, random_circuit, random_composable_circuits
from .setcat import functor_H, functor_K
from .symplag import (AffRel, aff_compose, aff_compose_by_elimination, aff_tensor,
                      as_affine, is_lagrangian_affine)


class CaseResult(NamedTuple):
    ok: bool
    detail: str = ""


def case_rng(seed: int, case: int) -> random.Random:
    return random.Random(seed * 1_000_003 + case)


def frobenius_case(seed: int, case: int) -> CaseResult:
    e = law_suite()[case]
    got = check_law(e.law, e.algebra)
    return CaseResult(got == e.holds, f"{e.structure}: {e.law.name} should {'hold' if e.holds else 'fail'}")


def functoriality_case(seed: int, case: int) -> CaseResult:
    rng = case_rng(seed, case)
    f, g = random_composable_circuits(rng)
    if blackbox(circ_compose(f, g)) != aff_compose(blackbox(f), blackbox(g)):
        return CaseResult(False, f"composite: f={f} g={g}")
    h = random_circuit(rng, rng.randint(0, 3), rng.randint(0, 3))
    if blackbox(circ_tensor(f, h)) != aff_tensor(blackbox(f), blackbox(h)):
        return CaseResult(False, f"tensor: f={f} h={h}")
    return CaseResult(True)


def square_case(seed: int, case: int) -> CaseResult:
    rng = case_rng(seed, case)
    t = random_term(CCIRC_K, rng.randint(1, 12), rng.getrandbits(32))
    lhs = blackbox(interp_P(t))
    rhs = as_affine(interp_box(translate_T(t)))
    return CaseResult(lhs == rhs, "" if lhs == rhs else f"term={t}")


def lagrangian_case(seed: int, case: int) -> CaseResult:
    rng = case_rng(seed, case)
    c = random_circuit(rng, rng.randint(0, 3), rng.randint(0, 3))
    rel = blackbox(c)
    ok = is_lagrangian_affine(rel, c.m, c.n)
    return CaseResult(ok, "" if ok else f"circuit={c}")


def pipeline_case(seed: int, case: int) -> CaseResult:
    rng = case_rng(seed, case)
    c = random_circuit(rng, rng.randint(0, 3), rng.randint(0, 3), kinds=("wire",))
    ok = blackbox(c) == AffRel.linear_part(functor_K(functor_H(functor_G(c))))
    return CaseResult(ok, "" if ok else f"circuit={c}")


def oracle_case(seed: int, case: int) -> CaseResult:
    rng = case_rng(seed, case)
    a, b, c = (rng.randint(0, 3) for _ in range(3))
    r = random_affrel(rng, a, b)
    s = random_affrel(rng, b, c)
    ok = aff_compose(r, s) == aff_compose_by_elimination(r, s)
    return CaseResult(ok, "" if ok else f"R={r} S={s}")


SUITES: Dict[str, Callable[[int, int], CaseResult]] = {
    "frobenius": frobenius_case,
    "functoriality": functoriality_case,
    "square": square_case,
    "lagrangian": lagrangian_case,
    "pipeline": pipeline_case,
    "oracle": oracle_case,
}


class SuiteReport(NamedTuple):
    suite: str
    seed: int
    passed: int
    failed: int
    first_failure: Optional[int]
    detail: str

    def lines(self) -> List[str]:
        out = [f"{self.suite}: {self.passed} passed, {self.failed} failed (seed {self.seed})"]
        if self.first_failure is not None:
            out.append(f"first counterexample: seed {self.seed}, case {self.first_failure}: {self.detail}")
        return out


def _run_one(args):
    name, seed, case = args
    return SUITES[name](seed, case)


def run_suite(name: str, seed: int, cases: Optional[int] = None, jobs: int = 1) -> SuiteReport:
    """Run ``cases`` seeded cases; the frobenius suite always runs each law once."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name == "frobenius":
        cases = len(law_suite())
    elif cases is None:
        cases = 100
    work = [(name, seed, i) for i in range(cases)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, work))
    else:
        results = [_run_one(w) for w in work]
    failures = [i for i, r in enumerate(results) if not r.ok]
    first = failures[0] if failures else None
    return SuiteReport(name, seed, cases - len(failures), len(failures), first,
                       results[first].detail if failures else "")

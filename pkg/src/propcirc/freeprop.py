"""Terms of free props, folded into semantic categories.

A term is built from generators, identities, symmetries, sequential
composition (``Seq(first, then)``) and parallel composition.  Semantics is a
:class:`PropAlgebra`, and :func:`evaluate` is the structural fold.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Optional, Sequence, Tuple, Union

from .circuit import Circuit, Label, element_relation
from .kfield import Coercible, S, Scalar, format_scalar, parse_scalar
from .linrel import LinRel, frel_generator, rel_compose, rel_tensor
from .setcat import (FROBENIUS_CORELATIONS, FROBENIUS_COSPANS, Corelation, Cospan,
                     cospan_compose, cospan_tensor, corel_compose, corel_tensor, functor_K)
from .symplag import AffRel, aff_compose, aff_tensor


# -- syntax -----------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    name: str
    param: Optional[Scalar] = None

    def __post_init__(self):
        if self.param is not None:
            object.__setattr__(self, "param", Scalar.coerce(self.param))


@dataclass(frozen=True)
class Id:
    n: int


@dataclass(frozen=True)
class Sym:
    m: int
    n: int


@dataclass(frozen=True)
class Seq:
    first: "Term"
    then: "Term"


@dataclass(frozen=True)
class Par:
    left: "Term"
    right: "Term"


Term = Union[Gen, Id, Sym, Seq, Par]


def seq(*terms: Term) -> Term:
    out = terms[0]
    for t in terms[1:]:
        out = Seq(out, t)
    return out


def par(*terms: Term) -> Term:
    out = terms[0]
    for t in terms[1:]:
        out = Par(out, t)
    return out


@dataclass(frozen=True)
class Signature:
    """Generator names with their (arity, coarity); ``parametric`` names take a scalar."""

    generators: Dict[str, Tuple[int, int]]
    parametric: FrozenSet[str] = field(default_factory=frozenset)

    def __hash__(self):
        return hash((tuple(sorted(self.generators.items())), self.parametric))

    def __add__(self, other: "Signature") -> "Signature":
        clash = set(self.generators) & set(other.generators)
        if clash:
            raise ValueError(f"signatures share generator names {sorted(clash)}")
        return Signature({**self.generators, **other.generators}, self.parametric | other.parametric)


SIGMA = Signature({"mu": (2, 1), "iota": (0, 1), "delta": (1, 2), "epsilon": (1, 0)})
SIGFLOW = Signature(
    {"codup": (2, 1), "codel": (0, 1), "dup": (1, 2), "del": (1, 0),
     "add": (2, 1), "zero": (0, 1), "coadd": (1, 2), "cozero": (1, 0),
     "scalar": (1, 1)},
    frozenset({"scalar"}),
)
CCIRC_K = SIGMA + Signature({"Z": (1, 1)}, frozenset({"Z"}))
CCIRC = SIGMA + Signature({"wire": (1, 1)})
CCIRC_ELEMENTS = SIGMA + Signature(
    {"wire": (1, 1), "Z": (1, 1), "R": (1, 1), "L": (1, 1), "C": (1, 1), "V": (1, 1), "I": (1, 1)},
    frozenset({"Z", "R", "L", "C", "V", "I"}),
)


class TermError(ValueError):
    """Ill-typed or unknown term; ``path`` locates the offending subterm."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


def typecheck(t: Term, sig: Signature, path: str = "$") -> Tuple[int, int]:
    if isinstance(t, Gen):
        if t.name not in sig.generators:
            raise TermError(f"unknown generator {t.name!r}", path)
        if (t.name in sig.parametric) != (t.param is not None):
            want = "needs a" if t.name in sig.parametric else "takes no"
            raise TermError(f"generator {t.name!r} {want} parameter", path)
        return sig.generators[t.name]
    if isinstance(t, Id):
        if t.n < 0:
            raise TermError("negative identity arity", path)
        return t.n, t.n
    if isinstance(t, Sym):
        if t.m < 0 or t.n < 0:
            raise TermError("negative symmetry arity", path)
        return t.m + t.n, t.m + t.n
    if isinstance(t, Seq):
        a, b = typecheck(t.first, sig, path + ".first")
        c, d = typecheck(t.then, sig, path + ".then")
        if b != c:
            raise TermError(f"sequential composite of {a}->{b} with {c}->{d}", path)
        return a, d
    if isinstance(t, Par):
        a, b = typecheck(t.left, sig, path + ".left")
        c, d = typecheck(t.right, sig, path + ".right")
        return a + c, b + d
    raise TermError(f"not a term: {t!r}", path)


def term_size(t: Term) -> int:
    """Number of atomic leaves (generators, identities, symmetries)."""
    if isinstance(t, (Seq, Par)):
        a, b = (t.first, t.then) if isinstance(t, Seq) else (t.left, t.right)
        return term_size(a) + term_size(b)
    return 1


# -- semantics --------------------------------------------------------------

class PropAlgebra:
    """Target of a fold.  ``scale`` is how many carrier wires one term wire denotes."""

    scale = 1
    signature: Optional[Signature] = None

    def gen(self, name: str, param: Optional[Scalar]):
        raise NotImplementedError

    def id(self, n: int):
        raise NotImplementedError

    def sym(self, m: int, n: int):
        raise NotImplementedError

    def seq(self, first, then):
        raise NotImplementedError

    def par(self, left, right):
        raise NotImplementedError


def evaluate(t: Term, alg: PropAlgebra, sig: Optional[Signature] = None):
    sig = sig or alg.signature
    if sig is not None:
        typecheck(t, sig)
    return _fold(t, alg)


def _fold(t: Term, alg: PropAlgebra):
    if isinstance(t, Gen):
        return alg.gen(t.name, t.param)
    if isinstance(t, Id):
        return alg.id(t.n * alg.scale)
    if isinstance(t, Sym):
        return alg.sym(t.m * alg.scale, t.n * alg.scale)
    if isinstance(t, Seq):
        return alg.seq(_fold(t.first, alg), _fold(t.then, alg))
    if isinstance(t, Par):
        return alg.par(_fold(t.left, alg), _fold(t.right, alg))
    raise TermError(f"not a term: {t!r}")


class LinRelAlgebra(PropAlgebra):
    """Signal-flow generators as linear relations.

    ``rename`` lets abstract names (e.g. ``mu``) stand for concrete generators.
    """

    def __init__(self, rename: Optional[Dict[str, str]] = None):
        self.rename = rename or {}
        self.signature = None if rename else SIGFLOW

    def gen(self, name, param):
        name = self.rename.get(name, name)
        return frel_generator(name, param) if name == "scalar" else frel_generator(name)

    def id(self, n):
        return LinRel.identity(n)

    def sym(self, m, n):
        return LinRel.symmetry(m, n)

    def seq(self, first, then):
        return rel_compose(first, then)

    def par(self, left, right):
        return rel_tensor(left, right)


class CospanAlgebra(PropAlgebra):
    signature = SIGMA

    def gen(self, name, param):
        return FROBENIUS_COSPANS[name]

    def id(self, n):
        return Cospan.identity(n)

    def sym(self, m, n):
        return Cospan.symmetry(m, n)

    def seq(self, first, then):
        return cospan_compose(first, then)

    def par(self, left, right):
        return cospan_tensor(left, right)


class CorelationAlgebra(PropAlgebra):
    signature = SIGMA

    def gen(self, name, param):
        return FROBENIUS_CORELATIONS[name]

    def id(self, n):
        return Corelation.identity(n)

    def sym(self, m, n):
        return Corelation.symmetry(m, n)

    def seq(self, first, then):
        return corel_compose(first, then)

    def par(self, left, right):
        return corel_tensor(left, right)


def _label_for(name: str, param: Optional[Scalar]) -> Label:
    return Label("wire") if name == "wire" else Label(name, param)


class CircuitAlgebra(PropAlgebra):
    """Frobenius generators become one-node circuits; labels become single edges."""

    signature = CCIRC_ELEMENTS

    def gen(self, name, param):
        if name in FROBENIUS_COSPANS:
            c = FROBENIUS_COSPANS[name]
            return Circuit(1, (), c.i, c.o)
        return Circuit.element(_label_for(name, param))

    def id(self, n):
        return Circuit.identity(n)

    def sym(self, m, n):
        return Circuit.symmetry(m, n)

    def seq(self, first, then):
        return first.then(then)

    def par(self, left, right):
        return left.tensor(right)


class AffRelAlgebra(PropAlgebra):
    """Circuit terms straight into affine relations on (potential, current) pairs."""

    scale = 2
    signature = CCIRC_ELEMENTS

    def gen(self, name, param):
        if name in FROBENIUS_CORELATIONS:
            return AffRel.linear_part(functor_K(FROBENIUS_CORELATIONS[name]))
        label = _label_for(name, param)
        return element_relation(label.kind, label.value)

    def id(self, n):
        return AffRel.linear_part(LinRel.identity(n))

    def sym(self, m, n):
        return AffRel.linear_part(LinRel.symmetry(m, n))

    def seq(self, first, then):
        return aff_compose(first, then)

    def par(self, left, right):
        return aff_tensor(left, right)


def interp_P(t: Term) -> Circuit:
    return evaluate(t, CircuitAlgebra())


def interp_box(t: Term) -> LinRel:
    return evaluate(t, LinRelAlgebra())


_SWAP_MIDDLE = par(Id(1), Sym(1, 1), Id(1))


def translate_generator(name: str, param: Optional[Scalar] = None) -> Term:
    """Signal-flow image of one generator; potentials on the first wire, currents on the second."""
    if name == "mu":
        return Seq(_SWAP_MIDDLE, Par(Gen("codup"), Gen("add")))
    if name == "iota":
        return Par(Gen("codel"), Gen("zero"))
    if name == "delta":
        return Seq(Par(Gen("dup"), Gen("coadd")), _SWAP_MIDDLE)
    if name == "epsilon":
        return Par(Gen("del"), Gen("cozero"))
    if name == "Z":
        # (phi, I) -> (phi, I, I) -> (phi, Z I, I) -> (phi + Z I, I)
        return seq(Par(Id(1), Gen("dup")),
                   Par(Id(1), Par(Gen("scalar", param), Id(1))),
                   Par(Gen("add"), Id(1)))
    raise TermError(f"no signal-flow image for generator {name!r}")


def translate_T(t: Term) -> Term:
    """Rewrite a circuit term over mu, iota, delta, epsilon, Z as a signal-flow term."""
    typecheck(t, CCIRC_K)
    return _translate(t)


def _translate(t: Term) -> Term:
    if isinstance(t, Gen):
        return translate_generator(t.name, t.param)
    if isinstance(t, Id):
        return Id(2 * t.n)
    if isinstance(t, Sym):
        return Sym(2 * t.m, 2 * t.n)
    if isinstance(t, Seq):
        return Seq(_translate(t.first), _translate(t.then))
    return Par(_translate(t.left), _translate(t.right))


def wire_to_zero(t: Term) -> Term:
    """Embed a conductive-wire term as an impedance term with Z = 0."""
    if isinstance(t, Gen):
        return Gen("Z", Scalar.coerce(0)) if t.name == "wire" else t
    if isinstance(t, Seq):
        return Seq(wire_to_zero(t.first), wire_to_zero(t.then))
    if isinstance(t, Par):
        return Par(wire_to_zero(t.left), wire_to_zero(t.right))
    return t


# -- random terms ------------------------------------------------------------

DEFAULT_PARAMS = tuple(Scalar.coerce(x) for x in (1, 2, 3, -1, Fraction(1, 2), Fraction(-2, 3))) + (
    S, 2 * S, 1 / S, (S + 1) / 2,
)


def random_term(sig: Signature, size: int, seed: int, *, params: Sequence[Coercible] = DEFAULT_PARAMS,
                dom: Optional[int] = None, max_width: int = 4) -> Term:
    """Deterministic well-typed term with exactly ``size`` atomic leaves."""
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = random.Random(seed)
    pool = [Scalar.coerce(p) for p in params]
    if dom is None:
        dom = rng.randint(0, min(3, max_width))
    return _random_from(rng, sig, size, dom, pool, max_width)


def _random_atom(rng, sig, dom, pool, max_width) -> Term:
    options: list = [Id(dom)]
    if dom >= 2:
        k = rng.randint(1, dom - 1)
        options.append(Sym(k, dom - k))
    for name, (a, b) in sorted(sig.generators.items()):
        if a == dom and b <= max_width:
            p = rng.choice(pool) if name in sig.parametric else None
            options.extend([Gen(name, p)] * 2)
    return rng.choice(options)


def _padded_generator(rng, sig, size, dom, pool, max_width) -> Optional[Term]:
    """A generator beside identity wires, using exactly ``size`` leaves (2 or 3)."""
    gens = [(n, ar) for n, ar in sorted(sig.generators.items())
            if 0 < ar[0] < dom and dom - ar[0] + ar[1] <= max_width]
    if size == 3:
        gens = [(n, ar) for n, ar in gens if dom - ar[0] >= 2]
    if not gens:
        return None
    name, (a, _) = rng.choice(gens)
    g: Term = Gen(name, rng.choice(pool) if name in sig.parametric else None)
    spare = dom - a
    if size == 3:
        left = rng.randint(1, spare - 1)
    else:
        left = rng.choice((0, spare))
    if left:
        g = Par(Id(left), g)
    if spare - left:
        g = Par(g, Id(spare - left))
    return g


def _random_from(rng, sig, size, dom, pool, max_width) -> Term:
    if size == 1:
        return _random_atom(rng, sig, dom, pool, max_width)
    if size <= 3 and rng.random() < 0.5:
        # keeps generators frequent when no generator has arity exactly dom
        g = _padded_generator(rng, sig, size, dom, pool, max_width)
        if g is not None:
            return g
    s1 = rng.randint(1, size - 1)
    s2 = size - s1
    if dom >= 1 and rng.random() < 0.35:
        d1 = rng.randint(0, dom)
        left = _random_from(rng, sig, s1, d1, pool, max(1, max_width - (dom - d1)))
        right = _random_from(rng, sig, s2, dom - d1, pool, max(1, max_width - d1))
        return Par(left, right)
    if dom == 0 and rng.random() < 0.2:
        return Par(_random_from(rng, sig, s1, 0, pool, max_width), _random_from(rng, sig, s2, 0, pool, max_width))
    first = _random_from(rng, sig, s1, dom, pool, max_width)
    mid = typecheck(first, sig)[1]
    then = _random_from(rng, sig, s2, mid, pool, max_width)
    return Seq(first, then)


# -- term files -----------------------------------------------------------

def term_to_json(t: Term) -> Dict[str, Any]:
    if isinstance(t, Gen):
        d: Dict[str, Any] = {"op": "gen", "name": t.name}
        if t.param is not None:
            d["value"] = format_scalar(t.param)
        return d
    if isinstance(t, Id):
        return {"op": "id", "n": t.n}
    if isinstance(t, Sym):
        return {"op": "sym", "m": t.m, "n": t.n}
    if isinstance(t, Seq):
        return {"op": "seq", "first": term_to_json(t.first), "then": term_to_json(t.then)}
    if isinstance(t, Par):
        return {"op": "par", "left": term_to_json(t.left), "right": term_to_json(t.right)}
    raise TermError(f"not a term: {t!r}")


def _nat(d: Dict[str, Any], key: str, path: str) -> int:
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise TermError(f"field {key!r} must be a natural number", path)
    return v


def term_from_json(d: Any, path: str = "$") -> Term:
    if not isinstance(d, dict):
        raise TermError("expected an object", path)
    op = d.get("op")
    if op == "gen":
        name = d.get("name")
        if not isinstance(name, str):
            raise TermError("field 'name' must be a string", path)
        value = d.get("value")
        if value is None:
            return Gen(name)
        try:
            return Gen(name, parse_scalar(str(value)))
        except ValueError as exc:
            raise TermError(str(exc), path + ".value") from None
    if op == "id":
        return Id(_nat(d, "n", path))
    if op == "sym":
        return Sym(_nat(d, "m", path), _nat(d, "n", path))
    if op == "seq":
        return Seq(term_from_json(d.get("first"), path + ".first"), term_from_json(d.get("then"), path + ".then"))
    if op == "par":
        return Par(term_from_json(d.get("left"), path + ".left"), term_from_json(d.get("right"), path + ".right"))
    raise TermError(f"unknown op {op!r}", path)


def dumps_term(t: Term) -> str:
    return json.dumps(term_to_json(t))


def loads_term(text: str) -> Term:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TermError(f"invalid JSON: {exc}") from None
    return term_from_json(data)

"""Linear relations k^m -> k^n, composed relationally.

A :class:`LinRel` stores its subspace of k^m + k^n (domain coordinates
first) as a basis in reduced row echelon form, so two relations are equal
exactly when their stored data are equal.
"""
from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .kfield import ONE, ZERO, Coercible, Scalar
from .matrix import as_row, nullspace, rref


class ArityError(ValueError):
    """Composite or constructor called with mismatched dimensions."""


class LinRel:
    __slots__ = ("dom", "cod", "basis", "pivots", "_hash")

    def __init__(self, dom: int, cod: int, basis: Sequence[Sequence[Scalar]] = ()):
        """Build from a spanning set; the basis is canonicalized."""
        if dom < 0 or cod < 0:
            raise ArityError("arities must be nonnegative")
        width = dom + cod
        rows = []
        for v in basis:
            if len(v) != width:
                raise ArityError(f"vector of length {len(v)} in a relation {dom}->{cod}")
            rows.append(as_row(v))
        red, piv = rref(rows, width)
        self.dom = dom
        self.cod = cod
        self.basis: Tuple[Tuple[Scalar, ...], ...] = tuple(tuple(r) for r in red)
        self.pivots: Tuple[int, ...] = tuple(piv)
        self._hash = None

    # construction ------------------------------------------------------
    @classmethod
    def from_span(cls, m: int, n: int, vectors: Iterable[Sequence[Coercible]]) -> "LinRel":
        return cls(m, n, list(vectors))

    @classmethod
    def from_constraints(cls, m: int, n: int, rows: Iterable[Sequence[Coercible]]) -> "LinRel":
        """The kernel of the given constraint rows."""
        rows = [as_row(r) for r in rows]
        for r in rows:
            if len(r) != m + n:
                raise ArityError(f"constraint of length {len(r)} in a relation {m}->{n}")
        return cls(m, n, nullspace(rows, m + n))

    @classmethod
    def identity(cls, n: int) -> "LinRel":
        vecs = []
        for i in range(n):
            v = [ZERO] * (2 * n)
            v[i] = v[n + i] = ONE
            vecs.append(v)
        return cls(n, n, vecs)

    @classmethod
    def full(cls, m: int, n: int) -> "LinRel":
        return cls.from_constraints(m, n, [])

    @classmethod
    def symmetry(cls, m: int, n: int) -> "LinRel":
        """Block swap (x, y) |-> (y, x) with x in k^m, y in k^n."""
        w = 2 * (m + n)
        vecs = []
        for i in range(m):
            v = [ZERO] * w
            v[i] = v[m + n + n + i] = ONE
            vecs.append(v)
        for j in range(n):
            v = [ZERO] * w
            v[m + j] = v[m + n + j] = ONE
            vecs.append(v)
        return cls(m + n, n + m, vecs)

    @classmethod
    def scalar(cls, c: Coercible) -> "LinRel":
        return cls(1, 1, [(ONE, Scalar.coerce(c))])

    # queries -------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    def constraints(self) -> List[List[Scalar]]:
        """Canonical (RREF) constraint rows whose kernel is this subspace."""
        return rref(nullspace(self.basis, self.dom + self.cod), self.dom + self.cod)[0]

    def contains(self, vector: Sequence[Coercible]) -> bool:
        v = as_row(vector)
        if len(v) != self.dom + self.cod:
            return False
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        return not any(v)

    def reduce(self, vector: Sequence[Scalar]) -> List[Scalar]:
        """Representative of ``vector`` modulo the subspace with zeros at pivots."""
        v = as_row(vector)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        return v

    # algebra -------------------------------------------------------------
    def then(self, other: "LinRel") -> "LinRel":
        return rel_compose(self, other)

    def __matmul__(self, other: "LinRel") -> "LinRel":
        """``g @ f`` is f followed by g."""
        return rel_compose(other, self)

    def tensor(self, other: "LinRel") -> "LinRel":
        return rel_tensor(self, other)

    @property
    def dagger(self) -> "LinRel":
        return rel_dagger(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinRel):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.basis == other.basis

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, self.basis))
        return self._hash

    def __repr__(self) -> str:
        return f"LinRel({self.dom}->{self.cod}, dim={self.dim})"

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        return format_constraints(self.constraints(), [], names, self.dom + self.cod)


def rel_compose(first: LinRel, second: LinRel) -> LinRel:
    """Relational composite: ``first`` then ``second``."""
    if first.cod != second.dom:
        raise ArityError(f"cannot compose {first.dom}->{first.cod} with {second.dom}->{second.cod}")
    a, b, c = first.dom, first.cod, second.cod
    r1, r2 = len(first.basis), len(second.basis)
    # coefficient vectors (lam, mu) with sum lam_i v_i = sum mu_j v'_j
    cols = []
    for j in range(b):
        cols.append([row[a + j] for row in first.basis] + [-row[j] for row in second.basis])
    out = []
    for coeffs in nullspace(cols, r1 + r2):
        v = [ZERO] * (a + c)
        for i, lam in enumerate(coeffs[:r1]):
            if lam:
                row = first.basis[i]
                for k in range(a):
                    if row[k]:
                        v[k] += lam * row[k]
        for j, mu in enumerate(coeffs[r1:]):
            if mu:
                row = second.basis[j]
                for k in range(c):
                    if row[b + k]:
                        v[a + k] += mu * row[b + k]
        out.append(v)
    return LinRel(a, c, out)


def interleave_tensor(u1: Sequence, u2: Sequence, m1: int, m2: int) -> List:
    """Merge (dom1, cod1) and (dom2, cod2) vectors into (dom1, dom2, cod1, cod2)."""
    return list(u1[:m1]) + list(u2[:m2]) + list(u1[m1:]) + list(u2[m2:])


def rel_tensor(left: LinRel, right: LinRel) -> LinRel:
    zl = [ZERO] * (left.dom + left.cod)
    zr = [ZERO] * (right.dom + right.cod)
    vecs = [interleave_tensor(r, zr, left.dom, right.dom) for r in left.basis]
    vecs += [interleave_tensor(zl, r, left.dom, right.dom) for r in right.basis]
    return LinRel(left.dom + right.dom, left.cod + right.cod, vecs)


def rel_dagger(rel: LinRel) -> LinRel:
    m = rel.dom
    return LinRel(rel.cod, rel.dom, [row[m:] + row[:m] for row in rel.basis])


def rel_equal(a: LinRel, b: LinRel) -> bool:
    return a == b


# -- generators ---------------------------------------------------------

def _gen_table():
    one, zero = ONE, ZERO
    dup = LinRel(1, 2, [(one, one, one)])
    dele = LinRel(1, 0, [(one,)])
    add = LinRel(2, 1, [(one, zero, one), (zero, one, one)])
    # unit of addition picks out 0 in k; its dagger is the counit
    zero_rel = LinRel(0, 1, [])
    return {
        "dup": dup,
        "del": dele,
        "codup": rel_dagger(dup),
        "codel": rel_dagger(dele),
        "add": add,
        "zero": zero_rel,
        "coadd": rel_dagger(add),
        "cozero": rel_dagger(zero_rel),
    }


_GENERATORS = _gen_table()
GENERATOR_NAMES = tuple(_GENERATORS) + ("scalar", "cup", "cap", "id", "sym")


def frel_generator(name: str, *params) -> LinRel:
    """Named generating relation.

    ``scalar`` takes a coefficient, ``id`` an arity and ``sym`` two arities.
    """
    if name in _GENERATORS:
        if params:
            raise ValueError(f"generator {name!r} takes no parameter")
        return _GENERATORS[name]
    if name == "scalar":
        (c,) = params
        return LinRel.scalar(c)
    if name == "cup":
        return rel_compose(_GENERATORS["codup"], _GENERATORS["del"])
    if name == "cap":
        return rel_compose(_GENERATORS["codel"], _GENERATORS["dup"])
    if name == "id":
        (n,) = params
        return LinRel.identity(n)
    if name == "sym":
        m, n = params
        return LinRel.symmetry(m, n)
    raise KeyError(f"unknown generator {name!r}")


# -- text form ----------------------------------------------------------

def _term(c: Scalar, name: str) -> Tuple[bool, str]:
    neg = bool(c.num) and c.num[-1] < 0
    if neg:
        c = -c
    if c == ONE:
        return neg, name
    text = str(c)
    if "+" in text[1:] or "-" in text[1:]:
        if not text.startswith("("):
            text = f"({text})"
    return neg, f"{text}*{name}"


def format_constraints(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar],
                       names: Optional[Sequence[str]], width: int) -> str:
    """One ``c1*x1 + ... = b`` line per row; ``rhs`` empty means all zero."""
    if names is None:
        names = [f"x{i + 1}" for i in range(width)]
    lines = []
    for k, row in enumerate(rows):
        parts = []
        for c, name in zip(row, names):
            if not c:
                continue
            neg, t = _term(c, name)
            if not parts:
                parts.append(f"-{t}" if neg else t)
            else:
                parts.append(f"- {t}" if neg else f"+ {t}")
        b = rhs[k] if rhs else ZERO
        lines.append(f"{' '.join(parts) or '0'} = {b}")
    return "\n".join(lines)

"""Symplectic form on (k+k)^n, Lagrangian tests, and affine relations.

Coordinates come in (potential, current) pairs.  A relation between m and n
pairs lives in the twisted space conj((k+k)^m) + (k+k)^n, where the domain
pairs carry the negated form.
"""
from __future__ import annotations

from typing import List, Optional, Sequence

from .kfield import ZERO, Coercible, Scalar
from .linrel import ArityError, LinRel, format_constraints, interleave_tensor, rel_compose
from .matrix import as_row, eliminate, nullspace, solve


def omega_pairs(u: Sequence[Coercible], v: Sequence[Coercible], n: int) -> Scalar:
    """Sum over pairs of phi*I' - phi'*I."""
    if len(u) != 2 * n or len(v) != 2 * n:
        raise ArityError(f"expected vectors of length {2 * n}")
    u, v = as_row(u), as_row(v)
    total = ZERO
    for j in range(n):
        total = total + u[2 * j] * v[2 * j + 1] - v[2 * j] * u[2 * j + 1]
    return total


def twisted_omega(u: Sequence[Scalar], v: Sequence[Scalar], m: int, n: int) -> Scalar:
    """Form on conj(V) + V': -omega on the m domain pairs, +omega on the n codomain pairs."""
    dom = 2 * m
    return omega_pairs(u[dom:], v[dom:], n) - omega_pairs(u[:dom], v[:dom], m)


def _check_pairs(rel, m: int, n: int) -> None:
    if rel.dom != 2 * m or rel.cod != 2 * n:
        raise ArityError(
            f"relation {rel.dom}->{rel.cod} does not have {m} and {n} coordinate pairs")


def is_isotropic(rel: LinRel, m: int, n: int) -> bool:
    _check_pairs(rel, m, n)
    rows = rel.basis
    return all(not twisted_omega(rows[a], rows[b], m, n)
               for a in range(len(rows)) for b in range(a + 1, len(rows)))


def is_lagrangian_linear(rel: LinRel, m: int, n: int) -> bool:
    _check_pairs(rel, m, n)
    return rel.dim == m + n and is_isotropic(rel, m, n)


class AffRel:
    """Either empty or ``offset + linear`` with the offset reduced modulo ``linear``."""

    __slots__ = ("dom", "cod", "offset", "linear")

    def __init__(self, dom: int, cod: int, offset: Optional[Sequence[Coercible]] = None,
                 linear: Optional[LinRel] = None):
        self.dom, self.cod = dom, cod
        if linear is None:
            if offset is not None:
                raise ValueError("an offset needs a linear part")
            self.offset = None
            self.linear = None
            return
        if (linear.dom, linear.cod) != (dom, cod):
            raise ArityError(f"linear part {linear.dom}->{linear.cod} in an affine relation {dom}->{cod}")
        if offset is None:
            offset = [ZERO] * (dom + cod)
        if len(offset) != dom + cod:
            raise ArityError(f"offset of length {len(offset)} in an affine relation {dom}->{cod}")
        self.linear = linear
        self.offset = tuple(linear.reduce(offset))

    @classmethod
    def empty(cls, dom: int, cod: int) -> "AffRel":
        return cls(dom, cod)

    @classmethod
    def linear_part(cls, rel: LinRel) -> "AffRel":
        return cls(rel.dom, rel.cod, None, rel)

    @classmethod
    def from_constraints(cls, m: int, n: int, rows: Sequence[Sequence[Coercible]],
                         rhs: Sequence[Coercible]) -> "AffRel":
        """Solution set of ``rows . x = rhs``."""
        rows = [as_row(r) for r in rows]
        rhs = as_row(rhs)
        if len(rows) != len(rhs):
            raise ArityError("one right-hand side per constraint row")
        x = solve(rows, rhs, m + n)
        if x is None:
            return cls.empty(m, n)
        return cls(m, n, x, LinRel(m, n, nullspace(rows, m + n)))

    @property
    def is_empty(self) -> bool:
        return self.linear is None

    def contains(self, vector: Sequence[Coercible]) -> bool:
        if self.is_empty:
            return False
        v = as_row(vector)
        return self.linear.contains([a - b for a, b in zip(v, self.offset)])

    def constraints(self):
        """Canonical constraint rows and right-hand sides (None when empty)."""
        if self.is_empty:
            return None
        rows = self.linear.constraints()
        rhs = [sum((a * b for a, b in zip(r, self.offset) if a and b), ZERO) for r in rows]
        return rows, rhs

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffRel):
            return NotImplemented
        return (self.dom, self.cod, self.offset, self.linear) == (other.dom, other.cod, other.offset, other.linear)

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, self.offset, self.linear))

    def __repr__(self) -> str:
        if self.is_empty:
            return f"AffRel({self.dom}->{self.cod}, EMPTY)"
        return f"AffRel({self.dom}->{self.cod}, offset={[str(x) for x in self.offset]}, dim={self.linear.dim})"

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        if self.is_empty:
            return "EMPTY"
        rows, rhs = self.constraints()
        return format_constraints(rows, rhs, names, self.dom + self.cod)


def aff_compose(first: AffRel, second: AffRel) -> AffRel:
    """``first`` then ``second`` via one witness pair and the linear composite."""
    if first.cod != second.dom:
        raise ArityError(f"cannot compose {first.dom}->{first.cod} with {second.dom}->{second.cod}")
    a, b, c = first.dom, first.cod, second.cod
    if first.is_empty or second.is_empty:
        return AffRel.empty(a, c)
    L, M = first.linear, second.linear
    r0, s0 = first.offset, second.offset
    r1, r2 = L.dim, M.dim
    # r0_v + sum lam_i L_i,v = s0_v + sum mu_j M_j,v on the shared coordinates
    rows = [[row[a + j] for row in L.basis] + [-row[j] for row in M.basis] for j in range(b)]
    rhs = [s0[j] - r0[a + j] for j in range(b)]
    coeffs = solve(rows, rhs, r1 + r2)
    if coeffs is None:
        return AffRel.empty(a, c)
    u = list(r0[:a])
    w = list(s0[b:])
    for lam, row in zip(coeffs[:r1], L.basis):
        if lam:
            for k in range(a):
                u[k] = u[k] + lam * row[k]
    for mu, row in zip(coeffs[r1:], M.basis):
        if mu:
            for k in range(c):
                w[k] = w[k] + mu * row[b + k]
    return AffRel(a, c, u + w, rel_compose(L, M))


def aff_compose_by_elimination(first: AffRel, second: AffRel) -> AffRel:
    """Same composite computed from stacked constraints, eliminating the middle.

    Independent of :func:`aff_compose`; used to cross-check it.
    """
    if first.cod != second.dom:
        raise ArityError(f"cannot compose {first.dom}->{first.cod} with {second.dom}->{second.cod}")
    a, b, c = first.dom, first.cod, second.cod
    if first.is_empty or second.is_empty:
        return AffRel.empty(a, c)
    width = a + b + c
    rows: List[List[Scalar]] = []
    rhs: List[Scalar] = []
    for r, y in zip(*first.constraints()):
        rows.append(list(r) + [ZERO] * c)
        rhs.append(y)
    for r, y in zip(*second.constraints()):
        rows.append([ZERO] * a + list(r))
        rhs.append(y)
    keep = list(range(a)) + list(range(a + b, width))
    projected = eliminate(rows, rhs, width, keep)
    if projected is None:
        return AffRel.empty(a, c)
    return AffRel.from_constraints(a, c, *projected)


def aff_tensor(left: AffRel, right: AffRel) -> AffRel:
    dom, cod = left.dom + right.dom, left.cod + right.cod
    if left.is_empty or right.is_empty:
        return AffRel.empty(dom, cod)
    offset = interleave_tensor(left.offset, right.offset, left.dom, right.dom)
    return AffRel(dom, cod, offset, left.linear.tensor(right.linear))


def aff_equal(x: AffRel, y: AffRel) -> bool:
    return x == y


def is_lagrangian_affine(rel: AffRel, m: int, n: int) -> bool:
    _check_pairs(rel, m, n)
    return rel.is_empty or is_lagrangian_linear(rel.linear, m, n)


def as_affine(rel) -> AffRel:
    return rel if isinstance(rel, AffRel) else AffRel.linear_part(rel)


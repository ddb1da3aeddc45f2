"""Linear symplectic spaces with Hamiltonian actions and their moment maps.

A representation stores the algebra action on basis elements only and is
extended RatFunc-linearly.  The moment map is fixed to the standard
quadratic normalization

    <mu(x), xi> = 1/2 * omega(rho(xi) x, x),

the unique moment map of a linear symplectic action vanishing at 0; its
differential is <dmu_x(v), xi> = omega(rho(xi) x, v).  Equivariance with
respect to the pinned transition conventions, the moment condition, and
degree-2 homogeneity are all verified by the test suite rather than
assumed.

Built-in representations:

    sl2-standard        C^2, omega = [[0,1],[-1,0]]
    sl2-standard-xK     K copies of the standard sl2 plane, block omega
    slN-cotangent       C^N + its dual, rho(xi) = diag(xi, -xi^T)

The scaling action used for the weight-2 hypothesis is scalar scaling,
under which omega (being quadratic) has weight 2 identically and the
commuting condition is trivial; nothing about it is stored as data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotInAlgebra, ShapeError, ValidationError
from .field import GaussRat, RatFunc
from .lie import CoadjointElement, LoopAlgebraElement, LoopGroupElement, MatrixLieAlgebra, dualize
from .matrices import (
    Matrix,
    block_diag,
    det,
    mat_add,
    mat_eq,
    mat_from,
    mat_is_zero,
    mat_mul,
    mat_neg,
    mat_sub,
    mat_transpose,
    mat_vec,
    shape,
)

_ZERO = RatFunc.const(0)
_HALF = RatFunc.const(GaussRat.from_triple((1, 0, 2)))


class XVector:
    """A vector of the symplectic space with RatFunc coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        self.coords = tuple(
            c if isinstance(c, RatFunc) else RatFunc.const(c) for c in coords
        )

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: "XVector") -> "XVector":
        if len(self) != len(other):
            raise ShapeError("vector lengths differ")
        return XVector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "XVector") -> "XVector":
        if len(self) != len(other):
            raise ShapeError("vector lengths differ")
        return XVector([a - b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, scalar) -> "XVector":
        return XVector([c * scalar for c in self.coords])

    __rmul__ = __mul__

    def __neg__(self) -> "XVector":
        return XVector([-c for c in self.coords])

    def __eq__(self, other):
        if not isinstance(other, XVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"XVector([{', '.join(c.to_text('z') for c in self.coords)}])"

    @classmethod
    def zero(cls, dim: int) -> "XVector":
        return cls([_ZERO] * dim)

    @classmethod
    def unit(cls, dim: int, k: int) -> "XVector":
        return cls([RatFunc.const(1 if j == k else 0) for j in range(dim)])


class SymplecticSpace:
    """An even-dimensional space with an invertible antisymmetric form."""

    def __init__(self, omega):
        self.omega: Matrix = mat_from(omega)
        n, m = shape(self.omega)
        if n != m or n % 2:
            raise ValidationError("omega must be square of even size")
        self.dim = n
        if not mat_eq(mat_transpose(self.omega), mat_neg(self.omega)):
            raise ValidationError("omega is not antisymmetric")
        if det(self.omega).is_zero():
            raise ValidationError("omega is singular")

    @classmethod
    def standard(cls, m: int) -> "SymplecticSpace":
        """Block-diagonal 2x2 form: m planes each with [[0,1],[-1,0]]."""
        j = mat_from([[0, 1], [-1, 0]])
        return cls(block_diag(*([j] * m)))

    @classmethod
    def cotangent(cls, n: int) -> "SymplecticSpace":
        """The pairing form [[0, I], [-I, 0]] on C^n + (C^n)*."""
        rows = [[0] * (2 * n) for _ in range(2 * n)]
        for k in range(n):
            rows[k][n + k] = 1
            rows[n + k][k] = -1
        return cls(rows)

    def pair(self, u: XVector, v: XVector) -> RatFunc:
        """omega(u, v) with RatFunc coordinates."""
        if len(u) != self.dim or len(v) != self.dim:
            raise ShapeError("vector length does not match the space dimension")
        ov = mat_vec(self.omega, v.coords)
        acc = _ZERO
        for a, b in zip(u.coords, ov):
            if not (a.is_zero() or b.is_zero()):
                acc = acc + a * b
        return acc

    def __repr__(self):
        return f"SymplecticSpace(dim={self.dim})"


@dataclass
class RepReport:
    """Outcome of rep_validate: violated identities plus informational notes."""

    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class HamiltonianRep:
    """An algebra action on a symplectic space, stored on basis elements.

    ``kind`` selects how group elements act, which is required to build
    section data:  "standard" (rho(g) = g, sl2 only), "sum" (block
    copies of standard), "cotangent" (diag(g, g^-T)), or "explicit".
    Explicit representations support all pointwise operations but cannot
    transport sections, because a group-level action cannot be derived
    from algebra-level matrices alone.
    """

    def __init__(
        self,
        algebra: MatrixLieAlgebra,
        space: SymplecticSpace,
        rho: dict,
        kind: str = "explicit",
        copies: int = 1,
        name: str | None = None,
    ):
        self.algebra = algebra
        self.space = space
        self.rho = {lab: mat_from(m) for lab, m in rho.items()}
        self.kind = kind
        self.copies = copies
        self.name = name or f"{algebra.name}-{kind}"
        missing = [lab for lab in algebra.labels if lab not in self.rho]
        if missing:
            raise ValidationError(f"rho lacks basis elements: {missing}")
        for lab, m in self.rho.items():
            if shape(m) != (space.dim, space.dim):
                raise ShapeError(f"rho({lab}) is not {space.dim}x{space.dim}")

    # -- group/algebra action ---------------------------------------------

    def act_algebra(self, xi: LoopAlgebraElement) -> Matrix:
        """rho(xi) extended RatFunc-linearly over the basis expansion."""
        if xi.algebra.name != self.algebra.name:
            raise NotInAlgebra("element of a different algebra")
        dim = self.space.dim
        out = [[_ZERO] * dim for _ in range(dim)]
        for c, lab in zip(xi.coeffs, self.algebra.labels):
            if c.is_zero():
                continue
            m = self.rho[lab]
            for i in range(dim):
                for j in range(dim):
                    if not m[i][j].is_zero():
                        out[i][j] = out[i][j] + c * m[i][j]
        return tuple(tuple(row) for row in out)

    def act_group(self, g: LoopGroupElement) -> Matrix:
        """rho(g) for the structural representation kinds."""
        if self.kind == "standard":
            return g.mat
        if self.kind == "sum":
            return block_diag(*([g.mat] * self.copies))
        if self.kind == "cotangent":
            ginv = g.inverse()
            return block_diag(g.mat, mat_transpose(ginv.mat))
        raise ValidationError(
            f"representation {self.name!r} has no structural group action; "
            "sections require a built-in representation kind"
        )

    # -- operations ----------------------------------------------------------

    def inf_action(self, xi: LoopAlgebraElement, x: XVector) -> XVector:
        """The infinitesimal action rho(xi) x."""
        return XVector(mat_vec(self.act_algebra(xi), x.coords))

    def moment(self, x: XVector) -> CoadjointElement:
        """mu(x), defined by <mu(x), xi> = 1/2 omega(rho(xi) x, x)."""
        values = {}
        for lab in self.algebra.labels:
            rx = XVector(mat_vec(self.rho[lab], x.coords))
            values[lab] = _HALF * self.space.pair(rx, x)
        return dualize(self.algebra, values)

    def dmoment(self, x: XVector, v: XVector) -> CoadjointElement:
        """dmu_x(v), defined by <dmu_x(v), xi> = omega(rho(xi) x, v)."""
        values = {}
        for lab in self.algebra.labels:
            rx = XVector(mat_vec(self.rho[lab], x.coords))
            values[lab] = self.space.pair(rx, v)
        return dualize(self.algebra, values)

    def __repr__(self):
        return f"HamiltonianRep({self.name!r}, dim={self.space.dim})"


def inf_action(rep: HamiltonianRep, xi: LoopAlgebraElement, x: XVector) -> XVector:
    return rep.inf_action(xi, x)


def moment(rep: HamiltonianRep, x: XVector) -> CoadjointElement:
    return rep.moment(x)


def dmoment(rep: HamiltonianRep, x: XVector, v: XVector) -> CoadjointElement:
    return rep.dmoment(x, v)


def rep_validate(rep: HamiltonianRep) -> RepReport:
    """Check the Hamiltonian hypotheses; violations are reported, not raised."""
    report = RepReport()
    alg = rep.algebra
    omega = rep.space.omega
    for lab in alg.labels:
        m = rep.rho[lab]
        cond = mat_add(mat_mul(mat_transpose(m), omega), mat_mul(omega, m))
        if not mat_is_zero(cond):
            report.violations.append(f"rho({lab}) is not in sp(omega)")
    for a in range(alg.dim):
        for b in range(a + 1, alg.dim):
            want = mat_sub(
                mat_mul(rep.rho[alg.labels[a]], rep.rho[alg.labels[b]]),
                mat_mul(rep.rho[alg.labels[b]], rep.rho[alg.labels[a]]),
            )
            got = [[_ZERO] * rep.space.dim for _ in range(rep.space.dim)]
            for k, c in enumerate(alg.structure[(a, b)]):
                if c.is_zero():
                    continue
                mk = rep.rho[alg.labels[k]]
                for i in range(rep.space.dim):
                    for j in range(rep.space.dim):
                        if not mk[i][j].is_zero():
                            got[i][j] = got[i][j] + c * mk[i][j]
            if not mat_eq(tuple(tuple(r) for r in got), want):
                report.violations.append(
                    f"rho([{alg.labels[a]}, {alg.labels[b]}]) != "
                    f"[rho({alg.labels[a]}), rho({alg.labels[b]})]"
                )
    report.notes.append(
        "scaling action is scalar: omega has weight 2 and commutes with the "
        "group action identically for a linear representation"
    )
    return report


_BUILTIN_STANDARD = re.compile(r"^sl(\d+)-standard(?:-x(\d+))?$")
_BUILTIN_COTANGENT = re.compile(r"^sl(\d+)-cotangent$")

_ALGEBRA_CACHE: dict[int, MatrixLieAlgebra] = {}


def _sl(n: int) -> MatrixLieAlgebra:
    if n not in _ALGEBRA_CACHE:
        _ALGEBRA_CACHE[n] = MatrixLieAlgebra.sl(n)
    return _ALGEBRA_CACHE[n]


def builtin_rep(name: str) -> HamiltonianRep:
    """Construct a named built-in representation.

    Supported: "sl2-standard", "sl2-standard-xK" (K >= 1 copies), and
    "slN-cotangent" for N >= 2.
    """
    m = _BUILTIN_STANDARD.match(name)
    if m:
        n, copies = int(m.group(1)), int(m.group(2) or 1)
        if n != 2:
            raise ValidationError(
                f"{name!r}: the defining representation of sl{n} is symplectic "
                "only for n = 2; use the cotangent representation instead"
            )
        alg = _sl(2)
        space = SymplecticSpace.standard(copies)
        rho = {
            lab: block_diag(*([alg.basis[k]] * copies))
            for k, lab in enumerate(alg.labels)
        }
        kind = "standard" if copies == 1 else "sum"
        return HamiltonianRep(alg, space, rho, kind=kind, copies=copies, name=name)
    m = _BUILTIN_COTANGENT.match(name)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise ValidationError(f"{name!r}: rank must be at least 2")
        alg = _sl(n)
        space = SymplecticSpace.cotangent(n)
        rho = {}
        for k, lab in enumerate(alg.labels):
            xi = alg.basis[k]
            rho[lab] = block_diag(xi, mat_neg(mat_transpose(xi)))
        return HamiltonianRep(alg, space, rho, kind="cotangent", name=name)
    raise ValidationError(f"unknown representation {name!r}")

"""Exact construction of section/tangent spaces, and seeded sampling.

Regularity of the derived disk data is a finite set of linear conditions
on the coefficients of a global candidate: every negative-exponent
Laurent coefficient of the transformed candidate must vanish.  Candidates
are spanned by monomials

    z^t / prod_j (z - a_j)^P        (finite marked points a_j),

with t bounded by deg(denominator) plus the allowed pole order at a
marked infinity.  The resulting systems are solved exactly over Q(i) by
fraction-free (Bareiss) elimination over Z[i] with a deterministic pivot
order; truncation depths are always computed from the pole orders of the
inputs, never guessed.

Randomness is supplied by a splittable counter-based stream (SHA-256 of
the path), so identical seeds reproduce identical instances on any
platform, and per-trial substreams are independent of evaluation order.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import _kernels as K
from .curve import MarkedCurve
from .errors import EmptySpace, Infeasible
from .field import GaussRat, Poly, RatFunc, laurent_expand
from .hamiltonian import XVector
from .lie import (
    CoadjointElement,
    LoopAlgebraElement,
    LoopGroupElement,
    MatrixLieAlgebra,
    elementary,
    torus,
)
from .matrices import mat_mul
from .moduli import HiggsPoint, YPoint

# ---------------------------------------------------------------------------
# deterministic splittable randomness
# ---------------------------------------------------------------------------


class SeedStream:
    """Counter-based deterministic random stream, splittable by path.

    Values are derived from SHA-256 of (path, counter), so child streams
    are independent of the order in which they are consumed.
    """

    def __init__(self, *path):
        self._path = path
        self._counter = 0

    def child(self, *label) -> "SeedStream":
        return SeedStream(*self._path, *label)

    def _next(self) -> int:
        key = repr((self._path, self._counter)).encode()
        self._counter += 1
        return int.from_bytes(hashlib.sha256(key).digest(), "big")

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-enough integer in [lo, hi] (modulo bias is irrelevant here)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self._next() % (hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.randint(0, len(seq) - 1)]

    def fraction(self, max_num: int = 3, max_den: int = 2) -> Fraction:
        return Fraction(self.randint(-max_num, max_num), self.randint(1, max_den))

    def gauss(self, max_num: int = 3, max_den: int = 2, imaginary: bool = True) -> GaussRat:
        re = self.fraction(max_num, max_den)
        im = self.fraction(max_num, max_den) if imaginary and self.randint(0, 2) == 0 else 0
        return GaussRat(re, im)

    def nonzero_gauss(self, max_num: int = 3, max_den: int = 2) -> GaussRat:
        while True:
            g = self.gauss(max_num, max_den)
            if not g.is_zero():
                return g


# ---------------------------------------------------------------------------
# candidate spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolverBounds:
    """Degree bound at a marked infinity and pole bound at finite marked points."""

    degree: int = 8
    pole_order: int = 6


@dataclass
class CandidateSpace:
    """Monomial scalar candidates for functions regular away from marked points."""

    functions: list
    bounds: SolverBounds

    @property
    def size(self) -> int:
        return len(self.functions)

    def monomial_vectors(self, dim: int) -> list:
        """The monomial XVector basis (unit slot times scalar candidate),
        in the column order used by the linear systems."""
        out = []
        for slot in range(dim):
            for f in self.functions:
                coords = [RatFunc.const(0)] * dim
                coords[slot] = f
                out.append(XVector(coords))
        return out


def candidate_functions(curve: MarkedCurve, bounds: SolverBounds) -> CandidateSpace:
    """The monomial basis z^t / prod (z - a_j)^pole_order."""
    den = Poly([1])
    for p in curve.marked_points:
        if p.is_infinity:
            continue
        factor = Poly([-p.value, 1]) ** bounds.pole_order
        den = den * factor
    t_max = den.degree()
    if any(p.is_infinity for p in curve.marked_points):
        t_max += bounds.degree
    x = Poly.x()
    functions = []
    mono = Poly([1])
    for _ in range(t_max + 1):
        functions.append(RatFunc(mono, den))
        mono = mono * x
    return CandidateSpace(functions, bounds)


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


@dataclass
class LinearSystem:
    """Rows of exact linear conditions over Q(i), with optional right sides.

    ``row_keys`` label the conditions (marked point, component, exponent);
    ``columns`` label the unknown candidate coefficients.
    """

    row_keys: list
    matrix: list
    columns: list
    rhs: list = field(default_factory=list)


def _rows_to_zi(matrix, rhs_list):
    """Scale each row [A | b...] by the lcm of denominators: Z[i] pairs."""
    out = []
    width = len(rhs_list)
    for idx, row in enumerate(matrix):
        full = list(row) + [b[idx] for b in rhs_list]
        lcm = 1
        for t in full:
            d = t[2]
            if d != 1:
                lcm = lcm * d // gcd(lcm, d)
        out.append([(a * (lcm // d), b * (lcm // d)) for (a, b, d) in full])
    return out, width


def solve_system(matrix, ncols: int, rhs_list=()):
    """Nullspace basis and particular solutions of A x = b over Q(i).

    ``matrix`` is a list of rows of GaussRat triples; ``rhs_list`` a list
    of right-hand-side columns (triples).  Returns (null_basis, parts)
    where each basis vector is a list of GaussRat and parts[k] is a
    particular solution or None when the k-th system is inconsistent.
    """
    rhs_list = list(rhs_list)
    if not matrix:
        null_basis = [
            [GaussRat(1 if j == k else 0) for j in range(ncols)] for k in range(ncols)
        ]
        return null_basis, [[GaussRat(0)] * ncols for _ in rhs_list]
    rows, width = _rows_to_zi(matrix, rhs_list)
    pivots = K.zi_echelon(rows, ncols)
    pivot_cols = [c for _, c in pivots]
    rank = len(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_cols]

    def entry(r, c) -> GaussRat:
        a, b = rows[r][c]
        return GaussRat.from_triple(K.gq_norm(a, b, 1))

    null_basis = []
    for f in free_cols:
        vec = [GaussRat(0)] * ncols
        vec[f] = GaussRat(1)
        for k in range(rank - 1, -1, -1):
            r, c = pivots[k]
            acc = GaussRat(0)
            for j in range(c + 1, ncols):
                if not vec[j].is_zero():
                    acc = acc + entry(r, j) * vec[j]
            vec[c] = -acc / entry(r, c)
        null_basis.append(vec)

    parts = []
    for k in range(len(rhs_list)):
        bcol = ncols + k
        consistent = True
        for r in range(rank, len(rows)):
            if rows[r][bcol] != (0, 0):
                consistent = False
                break
        if not consistent:
            parts.append(None)
            continue
        vec = [GaussRat(0)] * ncols
        for t in range(rank - 1, -1, -1):
            r, c = pivots[t]
            acc = entry(r, bcol)
            for j in range(c + 1, ncols):
                if not vec[j].is_zero():
                    acc = acc - entry(r, j) * vec[j]
            vec[c] = acc / entry(r, c)
        parts.append(vec)
    return null_basis, parts


def nullspace(system: LinearSystem):
    """Exact nullspace basis of the system's matrix (fraction-free)."""
    basis, _ = solve_system(system.matrix, len(system.columns))
    return basis


# ---------------------------------------------------------------------------
# section and tangent spaces
# ---------------------------------------------------------------------------


def _negative_coefficients(f: RatFunc):
    """[(exponent, coeff triple)] for all exponents < 0 of the germ f."""
    v = f.valuation()
    if v is None or v >= 0:
        return []
    series = laurent_expand(f, -v)
    out = []
    for e in range(v, 0):
        c = series.coefficient(e)
        if not c.is_zero():
            out.append((e, c._t))
    return out


def _assemble(columns_effects, extra_keys=()):
    """Build (row_keys, matrix) from per-column {row_key: triple} dicts."""
    keys = set(extra_keys)
    for eff in columns_effects:
        keys.update(eff)
    row_keys = sorted(keys)
    index = {k: i for i, k in enumerate(row_keys)}
    matrix = [[K.GQ_ZERO] * len(columns_effects) for _ in row_keys]
    for col, eff in enumerate(columns_effects):
        for key, t in eff.items():
            matrix[index[key]][col] = t
    return row_keys, matrix


class SectionSpace:
    """Basis of global sections compatible with the bundle's cocycle."""

    def __init__(self, curve, rep, g, bounds, candidates, basis):
        self.curve = curve
        self.rep = rep
        self.g = g
        self.bounds = bounds
        self.candidates = candidates
        self.basis: list[XVector] = basis

    @property
    def dim(self) -> int:
        return len(self.basis)


def _section_system(curve, rep, g, bounds):
    """The linear system 'derived disk data is regular' for vector candidates."""
    cand = candidate_functions(curve, bounds)
    dim = rep.space.dim
    # twisted inverse-transition matrix per marked point, in the local variable
    twisted = []
    for i in range(curve.n_points):
        rg_inv = rep.act_group(g[i].inverse())
        t_inv = curve.transition(i).inverse()
        twisted.append(
            tuple(tuple(t_inv * e for e in row) for row in rg_inv)
        )
    columns = []
    effects = []
    for slot in range(dim):
        for t, f in enumerate(cand.functions):
            columns.append((slot, t))
            eff = {}
            for i in range(curve.n_points):
                chart = curve.chart(i)
                f_loc = chart.pull(f)
                for r in range(dim):
                    entry = twisted[i][r][slot]
                    if entry.is_zero():
                        continue
                    for e, triple in _negative_coefficients(f_loc * entry):
                        eff[(i, r, e)] = K.gq_add(eff.get((i, r, e), K.GQ_ZERO), triple)
            effects.append({k: v for k, v in eff.items() if not K.gq_is_zero(v)})
    return cand, columns, effects


def _combine(cand, columns, coeff_vec, dim) -> XVector:
    coords = [RatFunc.const(0)] * dim
    for (slot, t), c in zip(columns, coeff_vec):
        if not c.is_zero():
            coords[slot] = coords[slot] + cand.functions[t] * c
    return XVector(coords)


def build_section_space(curve, rep, g, bounds: SolverBounds | None = None) -> SectionSpace:
    """Solve the regularity conditions; every basis vector gives a valid point."""
    bounds = bounds or SolverBounds()
    cand, columns, effects = _section_system(curve, rep, g, bounds)
    row_keys, matrix = _assemble(effects)
    basis_vecs, _ = solve_system(matrix, len(columns))
    dim = rep.space.dim
    basis = [_combine(cand, columns, v, dim) for v in basis_vecs]
    return SectionSpace(curve, rep, g, bounds, cand, basis)


class AffineSpace:
    """particular + span(basis): the solution set of an inhomogeneous system."""

    def __init__(self, particular, basis):
        self.particular = particular
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)


def build_tangent_space(
    point: YPoint, g_dot, bounds: SolverBounds | None = None
) -> AffineSpace:
    """Solutions sdot for which the deformation disk data stays regular.

    The homogeneous part coincides with the section space of the bundle;
    the inhomogeneity comes from the infinitesimal action of g_dot on the
    disk sections.  Raises Infeasible when the action introduces poles
    that no candidate within the bounds can cancel.
    """
    bounds = bounds or SolverBounds()
    curve, rep = point.curve, point.rep
    cand, columns, effects = _section_system(curve, rep, point.g, bounds)
    rhs_effect = {}
    for i in range(curve.n_points):
        action = rep.inf_action(g_dot[i], point.s_prime[i])
        for r, entry in enumerate(action.coords):
            for e, triple in _negative_coefficients(entry):
                rhs_effect[(i, r, e)] = triple
    row_keys, matrix = _assemble(effects, extra_keys=rhs_effect.keys())
    rhs = [rhs_effect.get(k, K.GQ_ZERO) for k in row_keys]
    basis_vecs, parts = solve_system(matrix, len(columns), [rhs])
    dim = rep.space.dim
    if parts[0] is None:
        raise Infeasible(
            "no tangent section cancels the poles of the g_dot action "
            f"within bounds {bounds}; enlarge degree/pole_order"
        )
    particular = _combine(cand, columns, parts[0], dim)
    basis = [_combine(cand, columns, v, dim) for v in basis_vecs]
    return AffineSpace(particular, basis)


# ---------------------------------------------------------------------------
# Higgs-side spaces (same machinery on coadjoint candidates)
# ---------------------------------------------------------------------------


def _higgs_system(curve, algebra, g, bounds):
    cand = candidate_functions(curve, bounds)
    n = algebra.n
    conjugated = []
    for i in range(curve.n_points):
        t = curve.transition(i)
        t2_inv = (t * t).inverse()
        gi = g[i]
        mats = []
        for b in algebra.basis:
            conj = mat_mul(mat_mul(gi.inverse().mat, b), gi.mat)
            mats.append(tuple(tuple(t2_inv * e for e in row) for row in conj))
        conjugated.append(mats)
    columns = []
    effects = []
    for k in range(algebra.dim):
        for t, f in enumerate(cand.functions):
            columns.append((k, t))
            eff = {}
            for i in range(curve.n_points):
                chart = curve.chart(i)
                f_loc = chart.pull(f)
                base = conjugated[i][k]
                for r in range(n):
                    for c in range(n):
                        if base[r][c].is_zero():
                            continue
                        for e, triple in _negative_coefficients(f_loc * base[r][c]):
                            key = (i, r * n + c, e)
                            eff[key] = K.gq_add(eff.get(key, K.GQ_ZERO), triple)
            effects.append({k2: v for k2, v in eff.items() if not K.gq_is_zero(v)})
    return cand, columns, effects


def _combine_higgs(algebra, cand, columns, coeff_vec) -> CoadjointElement:
    n = algebra.n
    rows = [[RatFunc.const(0)] * n for _ in range(n)]
    for (k, t), c in zip(columns, coeff_vec):
        if c.is_zero():
            continue
        scalar = cand.functions[t] * c
        basis = algebra.basis[k]
        for r in range(n):
            for cc in range(n):
                if not basis[r][cc].is_zero():
                    rows[r][cc] = rows[r][cc] + scalar * basis[r][cc]
    return CoadjointElement(algebra, tuple(tuple(row) for row in rows))


def build_higgs_field_space(curve, algebra, g, bounds: SolverBounds | None = None):
    """Basis of global Higgs fields compatible with the bundle's cocycle."""
    bounds = bounds or SolverBounds()
    cand, columns, effects = _higgs_system(curve, algebra, g, bounds)
    row_keys, matrix = _assemble(effects)
    basis_vecs, _ = solve_system(matrix, len(columns))
    return [_combine_higgs(algebra, cand, columns, v) for v in basis_vecs]


def build_higgs_tangent_space(
    point: HiggsPoint, g_dot, bounds: SolverBounds | None = None
) -> AffineSpace:
    """Solutions phidot for which the Higgs tangent disk data stays regular."""
    bounds = bounds or SolverBounds()
    curve, algebra = point.curve, point.algebra
    cand, columns, effects = _higgs_system(curve, algebra, point.g, bounds)
    n = algebra.n
    rhs_effect = {}
    for i in range(curve.n_points):
        comm = mat_mul(point.phi_prime[i].mat, g_dot[i].mat)
        comm2 = mat_mul(g_dot[i].mat, point.phi_prime[i].mat)
        for r in range(n):
            for c in range(n):
                entry = comm[r][c] - comm2[r][c]
                for e, triple in _negative_coefficients(entry):
                    # phidot' = transition(phidot) + [phi', gdot]: the
                    # transition part must cancel the bracket's poles
                    rhs_effect[(i, r * n + c, e)] = K.gq_neg(triple)
    row_keys, matrix = _assemble(effects, extra_keys=rhs_effect.keys())
    rhs = [rhs_effect.get(k, K.GQ_ZERO) for k in row_keys]
    basis_vecs, parts = solve_system(matrix, len(columns), [rhs])
    if parts[0] is None:
        raise Infeasible(
            "no global Higgs deformation cancels the bracket poles within "
            f"bounds {bounds}"
        )
    particular = _combine_higgs(algebra, cand, columns, parts[0])
    basis = [_combine_higgs(algebra, cand, columns, v) for v in basis_vecs]
    return AffineSpace(particular, basis)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


def sample_vector(space, rng: SeedStream, max_num: int = 2, max_den: int = 2):
    """A deterministic pseudo-random combination of the basis (nonzero if possible)."""
    basis = space.basis if hasattr(space, "basis") else space
    if not basis:
        raise EmptySpace("cannot sample from an empty space")
    coeffs = [rng.gauss(max_num, max_den) for _ in basis]
    if all(c.is_zero() for c in coeffs):
        coeffs[rng.randint(0, len(coeffs) - 1)] = GaussRat(1)
    acc = None
    for c, b in zip(coeffs, basis):
        term = c * b
        acc = term if acc is None else acc + term
    return acc


def sample_affine(space: AffineSpace, rng: SeedStream, max_num: int = 2, max_den: int = 2):
    """particular + random combination of the homogeneous basis."""
    out = space.particular
    if space.basis:
        for b in space.basis:
            c = rng.gauss(max_num, max_den)
            if not c.is_zero():
                out = out + c * b
    return out


def sample(space, seed, max_num: int = 2, max_den: int = 2):
    """Deterministic pseudo-random element of a solution space.

    ``space`` is a linear space (anything with a ``basis``, or a bare
    basis list) or an AffineSpace; ``seed`` an integer or a SeedStream.
    The same seed always yields the same element.
    """
    rng = seed if isinstance(seed, SeedStream) else SeedStream("sample", seed)
    if isinstance(space, AffineSpace):
        return sample_affine(space, rng, max_num, max_den)
    return sample_vector(space, rng, max_num, max_den)


# ---------------------------------------------------------------------------
# random cocycles and loop-algebra elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CocycleRecipe:
    """Word-length/exponent knobs for random determinant-1 cocycles."""

    length: int = 3
    max_exponent: int = 1
    torus_amplitude: int = 1
    max_num: int = 2
    max_den: int = 1


@dataclass(frozen=True)
class GdotRecipe:
    """Shape of random loop-algebra elements for tangent directions."""

    terms: int = 2
    pole_order: int = 2
    degree: int = 1
    max_num: int = 2
    max_den: int = 1


def random_cocycle(n: int, recipe: CocycleRecipe, rng: SeedStream) -> LoopGroupElement:
    """A short word in elementary and torus generators (det = 1 by construction)."""
    u = RatFunc.x()
    word = LoopGroupElement.identity(n)
    has_torus = False
    for step in range(recipe.length):
        kind = rng.choice(["torus", "elementary", "elementary"])
        if kind == "torus":
            has_torus = True
            exps = [rng.randint(-recipe.torus_amplitude, recipe.torus_amplitude) for _ in range(n - 1)]
            exps.append(-sum(exps))
            word = word * torus(n, exps)
        else:
            j = rng.randint(1, n)
            k = rng.randint(1, n - 1)
            if k >= j:
                k += 1
            m = rng.randint(-recipe.max_exponent, recipe.max_exponent)
            c = rng.nonzero_gauss(recipe.max_num, recipe.max_den)
            word = word * elementary(n, j, k, c * u ** m)
    if not has_torus:
        # guarantee a nontrivial twist so section spaces are interesting
        exps = [1] + [0] * (n - 2) + [-1]
        word = word * torus(n, exps)
    return word


def random_loop_algebra(
    algebra: MatrixLieAlgebra, recipe: GdotRecipe, rng: SeedStream
) -> LoopAlgebraElement:
    """A random span combination with monomial RatFunc coefficients."""
    u = RatFunc.x()
    acc = algebra.zero_element()
    for _ in range(recipe.terms):
        k = rng.randint(0, algebra.dim - 1)
        m = rng.randint(-recipe.pole_order, recipe.degree)
        c = rng.nonzero_gauss(recipe.max_num, recipe.max_den)
        acc = acc + (c * u ** m) * algebra.basis_element(algebra.labels[k])
    return acc

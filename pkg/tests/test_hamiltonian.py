"""Moment maps and the Hamiltonian identities."""

from fractions import Fraction

import pytest

from higgsres import (
    GaussRat,
    HamiltonianRep,
    Jet2,
    RatFunc,
    ValidationError,
    XVector,
    bracket,
    builtin_rep,
    coadjoint_transition,
    dmoment,
    inf_action,
    moment,
    pairing,
    rep_validate,
)
from higgsres.matrices import mat_from, mat_vec
from higgsres.solver import CocycleRecipe, GdotRecipe, SeedStream, random_cocycle, random_loop_algebra

U = RatFunc.x()

REPS = ["sl2-standard", "sl2-standard-x2", "sl3-cotangent"]


@pytest.fixture(scope="module", params=REPS)
def rep(request):
    return builtin_rep(request.param)


def _random_vector(rep, rng, polynomial=True):
    coords = []
    for _ in range(rep.space.dim):
        c0, c1 = rng.gauss(2, 2), rng.gauss(2, 2)
        coords.append(RatFunc.const(c0) + U * c1 if polynomial else RatFunc.const(c0))
    return XVector(coords)


def test_builtin_reps_validate(rep):
    assert rep_validate(rep).ok


def test_broken_rep_is_reported():
    base = builtin_rep("sl2-standard")
    rho_bad = dict(base.rho)
    rho_bad["E"] = mat_from([[1, 0], [0, 1]])
    bad = HamiltonianRep(base.algebra, base.space, rho_bad)
    report = rep_validate(bad)
    assert not report.ok
    assert any("sp(omega)" in v for v in report.violations)


def test_inf_action_base_cases():
    rep = builtin_rep("sl2-standard")
    sl2 = rep.algebra
    e1, e2 = XVector.unit(2, 0), XVector.unit(2, 1)
    assert inf_action(rep, sl2.basis_element("F"), e1) == e2
    assert inf_action(rep, sl2.basis_element("E"), e1).is_zero()
    assert inf_action(rep, U * sl2.basis_element("H"), e1) == U * e1


def test_moment_of_first_unit_vector():
    # oracle: evaluate 1/2 omega(rho(xi) e1, e1) on the sl2 basis by hand
    # and solve the 3x3 trace-form system with plain Fractions
    rep = builtin_rep("sl2-standard")
    sl2 = rep.algebra
    e1 = XVector.unit(2, 0)

    def omega(u, v):
        return u[0] * v[1] - u[1] * v[0]

    basis_vals = {}
    for lab, mat in (("E", ((0, 1), (0, 0))), ("H", ((1, 0), (0, -1))), ("F", ((0, 0), (1, 0)))):
        rx = (mat[0][0], mat[1][0])  # rho(xi) e1 = first column
        basis_vals[lab] = Fraction(1, 2) * omega(rx, (1, 0))
    assert basis_vals == {"E": 0, "H": 0, "F": Fraction(-1, 2)}
    # gram for (E, H, F): <E,F>=1, <H,H>=2, rest 0; solve gram * c = vals:
    # c_F*1 = vals[E]; 2 c_H = vals[H]; c_E*1 = vals[F]
    c = {"E": basis_vals["F"], "H": basis_vals["H"] / 2, "F": basis_vals["E"]}
    assert c == {"E": Fraction(-1, 2), "H": 0, "F": 0}
    # so mu(e1) = -1/2 E as a trace-form matrix
    mu = moment(rep, e1)
    assert mu == GaussRat(Fraction(-1, 2)) * sl2.coadjoint(sl2.basis[0])


def test_moment_degenerate_cases(rep):
    zero = XVector.zero(rep.space.dim)
    assert moment(rep, zero).is_zero()
    rng = SeedStream("moment-scale", rep.name)
    x = _random_vector(rep, rng)
    t = rng.nonzero_gauss(3, 2)
    assert moment(rep, t * x) == (t * t) * moment(rep, x)


def test_dmoment_euler_identity(rep):
    rng = SeedStream("euler", rep.name)
    x = _random_vector(rep, rng)
    assert dmoment(rep, x, x) == 2 * moment(rep, x)
    assert dmoment(rep, XVector.zero(rep.space.dim), x).is_zero()


def test_dmoment_of_unit_vectors_matches_bilinear_oracle():
    rep = builtin_rep("sl2-standard")
    sl2 = rep.algebra
    e1, e2 = XVector.unit(2, 0), XVector.unit(2, 1)
    got = dmoment(rep, e1, e2)
    # oracle: omega(rho(xi) e1, e2) on the basis: E -> 0, H -> 1, F -> -...
    # rho(E)e1 = 0; rho(H)e1 = e1, omega(e1, e2) = 1; rho(F)e1 = e2, omega(e2,e2)=0
    for lab, want in (("E", 0), ("H", 1), ("F", 0)):
        assert pairing(got, sl2.basis_element(lab)) == RatFunc.const(want)


def test_equivariance(rep):
    rng = SeedStream("equivariance", rep.name)
    n = rep.algebra.n
    for trial in range(8):
        sub = rng.child(trial)
        g = random_cocycle(n, CocycleRecipe(), sub.child("g"))
        x = _random_vector(rep, sub.child("x"))
        lhs = moment(rep, XVector(mat_vec(rep.act_group(g.inverse()), x.coords)))
        rhs = coadjoint_transition(g, moment(rep, x))
        assert lhs == rhs


def test_moment_condition(rep):
    rng = SeedStream("moment-cond", rep.name)
    for trial in range(8):
        sub = rng.child(trial)
        x = _random_vector(rep, sub.child("x"))
        xi = random_loop_algebra(rep.algebra, GdotRecipe(), sub.child("xi"))
        eta = random_loop_algebra(rep.algebra, GdotRecipe(), sub.child("eta"))
        lhs = pairing(moment(rep, x), bracket(xi, eta))
        rhs = rep.space.pair(inf_action(rep, xi, x), inf_action(rep, eta, x))
        assert lhs == rhs


def test_omega_invariance(rep):
    rng = SeedStream("omega-inv", rep.name)
    n = rep.algebra.n
    for trial in range(8):
        sub = rng.child(trial)
        g = random_cocycle(n, CocycleRecipe(), sub.child("g"))
        u = _random_vector(rep, sub.child("u"))
        v = _random_vector(rep, sub.child("v"))
        gm = rep.act_group(g)
        gu = XVector(mat_vec(gm, u.coords))
        gv = XVector(mat_vec(gm, v.coords))
        assert rep.space.pair(gu, gv) == rep.space.pair(u, v)


def test_dmoment_is_jet_derivative_of_moment(rep):
    # independent path: compute <mu(x + e1 v), xi> with two-parameter jets
    # and read off the e1 coefficient
    rng = SeedStream("jet-dmoment", rep.name)
    x = _random_vector(rep, rng.child("x"))
    v = _random_vector(rep, rng.child("v"))
    jet_coords = [Jet2.lift1(a, b) for a, b in zip(x.coords, v.coords)]
    half = GaussRat(Fraction(1, 2))
    dm = dmoment(rep, x, v)
    omega = rep.space.omega
    dim = rep.space.dim
    for lab in rep.algebra.labels:
        rho = rep.rho[lab]
        rx = [
            sum((Jet2(rho[i][j]) * jet_coords[j] for j in range(dim) if not rho[i][j].is_zero()), Jet2(RatFunc.const(0)))
            for i in range(dim)
        ]
        total = Jet2(RatFunc.const(0))
        for i in range(dim):
            for j in range(dim):
                if not omega[i][j].is_zero():
                    total = total + rx[i] * Jet2(omega[i][j]) * jet_coords[j]
        value = Jet2(RatFunc.const(half)) * total
        assert value.d1 == pairing(dm, rep.algebra.basis_element(lab))


def test_standard_rep_rejected_for_higher_rank():
    with pytest.raises(ValidationError):
        builtin_rep("sl3-standard")

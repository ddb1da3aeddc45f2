"""Lie algebra structure, pairings, and transition actions."""

import pytest

from higgsres import (
    DegeneratePairing,
    LoopAlgebraElement,
    LoopGroupElement,
    MatrixLieAlgebra,
    NotInAlgebra,
    RatFunc,
    ShapeError,
    ValidationError,
    bracket,
    coadjoint_transition,
    dualize,
    pairing,
    torus,
)
from higgsres.matrices import det, mat_from, mat_mul
from higgsres.solver import CocycleRecipe, GdotRecipe, SeedStream, random_cocycle, random_loop_algebra

U = RatFunc.x()


@pytest.fixture(scope="module")
def sl2():
    return MatrixLieAlgebra.sl(2)


@pytest.fixture(scope="module")
def sl3():
    return MatrixLieAlgebra.sl(3)


def test_sl2_defining_relations(sl2):
    E, H, F = (sl2.basis_element(l) for l in "EHF")
    assert bracket(E, F) == H
    assert bracket(H, E) == 2 * E
    assert bracket(H, F) == (-2) * F


def test_bracket_with_loop_coefficients(sl2):
    # oracle: plain matrix multiply of the two factors
    E, F = sl2.basis_element("E"), sl2.basis_element("F")
    x, y = U * E, U.inverse() * F
    direct = mat_mul(x.mat, y.mat), mat_mul(y.mat, x.mat)
    want = tuple(
        tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(direct[0], direct[1])
    )
    assert bracket(x, y).mat == want
    assert bracket(x, y) == sl2.basis_element("H")


def test_trace_pairing_values(sl2):
    E, H, F = (sl2.basis_element(l) for l in "EHF")
    cE, cH = sl2.coadjoint(sl2.basis[0]), sl2.coadjoint(sl2.basis[1])
    assert pairing(cE, F) == RatFunc.const(1)
    assert pairing(cH, H) == RatFunc.const(2)
    assert pairing(cE, E) == RatFunc.const(0)


def test_coadjoint_transition_examples(sl2):
    cE = sl2.coadjoint(sl2.basis[0])
    assert coadjoint_transition(LoopGroupElement.identity(2), cE) == cE
    g = torus(2, [-1, 1])
    assert coadjoint_transition(g, cE) == (U * U) * cE


def test_pairing_invariance_under_transition(sl2):
    rng = SeedStream("pairing-invariance")
    for trial in range(10):
        sub = rng.child(trial)
        g = random_cocycle(2, CocycleRecipe(), sub.child("g"))
        phi_raw = random_loop_algebra(sl2, GdotRecipe(), sub.child("phi"))
        xi = random_loop_algebra(sl2, GdotRecipe(), sub.child("xi"))
        phi = sl2.coadjoint(phi_raw.mat)
        ginv = g.inverse()
        xi_conj = LoopAlgebraElement(sl2, mat_mul(mat_mul(ginv.mat, xi.mat), g.mat))
        assert pairing(coadjoint_transition(g, phi), xi_conj) == pairing(phi, xi)


def test_jacobi_identity(sl3):
    rng = SeedStream("jacobi")
    for trial in range(8):
        sub = rng.child(trial)
        x = random_loop_algebra(sl3, GdotRecipe(), sub.child("x"))
        y = random_loop_algebra(sl3, GdotRecipe(), sub.child("y"))
        z = random_loop_algebra(sl3, GdotRecipe(), sub.child("z"))
        total = (
            bracket(x, bracket(y, z))
            + bracket(y, bracket(z, x))
            + bracket(z, bracket(x, y))
        )
        assert total.is_zero()


def test_dualize_examples(sl2):
    one = RatFunc.const(1)
    assert dualize(sl2, {"F": one}) == sl2.coadjoint(sl2.basis[0])
    assert dualize(sl2, {"E": one}) == sl2.coadjoint(sl2.basis[2])
    assert dualize(sl2, {}).is_zero()


def test_dualize_solves_gram_system(sl3):
    # oracle: dualize output must reproduce the prescribed pairings
    rng = SeedStream("dualize")
    values = {lab: RatFunc.const(rng.gauss(3, 2)) for lab in sl3.labels}
    phi = dualize(sl3, values)
    for lab in sl3.labels:
        assert pairing(phi, sl3.basis_element(lab)) == values[lab]


def test_dualize_round_trip(sl2):
    rng = SeedStream("dualize-rt")
    raw = random_loop_algebra(sl2, GdotRecipe(), rng)
    phi = sl2.coadjoint(raw.mat)
    values = {lab: pairing(phi, sl2.basis_element(lab)) for lab in sl2.labels}
    assert dualize(sl2, values) == phi


def test_degenerate_pairing_guard():
    # a 2-dim abelian algebra of strictly upper triangular 3x3 matrices
    # has an identically zero trace form
    basis = [
        [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    ]
    nil = MatrixLieAlgebra("nil2", 3, basis, ["A", "B"])
    with pytest.raises(DegeneratePairing):
        dualize(nil, {"A": RatFunc.const(1)})


def test_group_element_determinant_enforced():
    with pytest.raises(ValidationError):
        LoopGroupElement([[U, RatFunc.const(0)], [RatFunc.const(0), U]])


def test_determinant_preserved_by_products_and_inverse():
    rng = SeedStream("det-words")
    one = RatFunc.const(1)
    for trial in range(10):
        g = random_cocycle(3, CocycleRecipe(length=4), rng.child(trial))
        assert det(g.mat) == one
        assert det(g.inverse().mat) == one
        assert det((g * g).mat) == one


def test_membership_checks(sl2):
    with pytest.raises(NotInAlgebra):
        LoopAlgebraElement(sl2, mat_from([[1, 0], [0, 1]]))  # nonzero trace
    with pytest.raises(ShapeError):
        pairing(sl2.coadjoint(sl2.basis[0]), MatrixLieAlgebra.sl(3).basis_element("E12"))

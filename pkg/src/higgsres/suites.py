"""Instance generation and the randomized verification suites.

A trial builds a full random instance from a scenario's recipe: fresh
determinant-1 cocycles at every marked point (resampled until the
section space is nontrivial), a sampled section, and two tangents whose
loop-algebra directions are resampled on infeasibility.  Every quantity
derives from a splittable seed stream, so (scenario, seed, trials)
reproduces byte-identical results.

The corrupt suite is the negative control: it perturbs the derived disk
deformation off its defining equation and expects the validators to
reject the tuple or the pairing to become nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Infeasible
from .field import GQ_ZERO, GaussRat, RatFunc
from .hamiltonian import XVector
from .moduli import (
    HiggsPoint,
    HiggsTangent,
    YPoint,
    YTangent,
    ambient_higgs_tangent,
    higgs_from_y,
    identity_check,
    make_higgs_point,
    make_higgs_tangent,
    make_y_point,
    make_y_tangent,
    pullback_omega,
    symplectic_omega,
    unchecked_y_tangent,
    validate_y_tangent,
)
from .scenario import Scenario
from .solver import (
    GdotRecipe,
    SeedStream,
    build_higgs_field_space,
    build_higgs_tangent_space,
    build_section_space,
    build_tangent_space,
    random_cocycle,
    random_loop_algebra,
    sample_affine,
    sample_vector,
)

_TANGENT_ATTEMPTS = 6


@dataclass
class Instance:
    point: YPoint
    tangents: list
    section_dim: int
    bundle_attempts: int
    tangent_retries: int


def _random_bundle(scenario: Scenario, rng: SeedStream):
    n = scenario.rep.algebra.n
    return [
        random_cocycle(n, scenario.suite.cocycle, rng.child("pt", i))
        for i in range(scenario.curve.n_points)
    ]


def _sample_tangent(scenario: Scenario, point: YPoint, rng: SeedStream):
    """Random tangent: resample g_dot on infeasibility, last resort regular."""
    suite = scenario.suite
    for attempt in range(_TANGENT_ATTEMPTS):
        sub = rng.child("attempt", attempt)
        if attempt < _TANGENT_ATTEMPTS - 1:
            recipe = suite.g_dot
        else:
            recipe = GdotRecipe(
                terms=suite.g_dot.terms,
                pole_order=0,
                degree=suite.g_dot.degree,
                max_num=suite.g_dot.max_num,
                max_den=suite.g_dot.max_den,
            )
        g_dot = [
            random_loop_algebra(scenario.rep.algebra, recipe, sub.child("g", i))
            for i in range(scenario.curve.n_points)
        ]
        try:
            space = build_tangent_space(point, g_dot, scenario.bounds)
        except Infeasible:
            continue
        s_dot = sample_affine(space, sub.child("s"), suite.sample_num, suite.sample_den)
        return make_y_tangent(point, g_dot, s_dot), attempt
    raise AssertionError("unreachable: a regular g_dot is always feasible")


def build_instance(scenario: Scenario, rng: SeedStream) -> Instance:
    """One random instance: bundle, section, and two tangents."""
    suite = scenario.suite
    bundle = None
    space = None
    attempts = 0
    for attempt in range(suite.max_attempts):
        attempts = attempt + 1
        candidate = _random_bundle(scenario, rng.child("bundle", attempt))
        space = build_section_space(
            scenario.curve, scenario.rep, candidate, scenario.bounds
        )
        bundle = candidate
        if space.dim >= suite.min_section_dim:
            break
    if space.dim:
        s_circ = sample_vector(space, rng.child("section"), suite.sample_num, suite.sample_den)
    else:
        s_circ = XVector.zero(scenario.rep.space.dim)
    point = make_y_point(scenario.curve, scenario.rep, bundle, s_circ)
    tangents = []
    retries = 0
    for j in (1, 2):
        t, used = _sample_tangent(scenario, point, rng.child("tangent", j))
        retries += used
        tangents.append(t)
    return Instance(point, tangents, space.dim, attempts, retries)


# ---------------------------------------------------------------------------
# scenario-pinned single instances (explicit bundle/section/tangents)
# ---------------------------------------------------------------------------


def scenario_point(scenario: Scenario, rng: SeedStream) -> YPoint:
    """The point described by the scenario's bundle/section blocks."""
    spec = scenario.section_spec
    if spec.get("kind") == "explicit":
        s_circ = spec["vector"]
    else:
        space = build_section_space(
            scenario.curve, scenario.rep, scenario.bundle, scenario.bounds
        )
        if space.dim == 0:
            s_circ = XVector.zero(scenario.rep.space.dim)
        else:
            s_circ = sample_vector(
                space,
                rng.child("section", spec.get("seed", 0)),
                scenario.suite.sample_num,
                scenario.suite.sample_den,
            )
    return make_y_point(scenario.curve, scenario.rep, scenario.bundle, s_circ)


def scenario_tangents(scenario: Scenario, point: YPoint, rng: SeedStream) -> list:
    out = []
    for k, spec in enumerate(scenario.y_tangent_specs):
        sub = rng.child("y_tangent", k, spec.get("seed", k))
        if "g_dot_elements" in spec:
            g_dot = spec["g_dot_elements"]
        else:
            g_dot = None
        if g_dot is None:
            tangent = None
            for attempt in range(_TANGENT_ATTEMPTS):
                asub = sub.child("attempt", attempt)
                recipe = scenario.suite.g_dot if attempt < _TANGENT_ATTEMPTS - 1 else GdotRecipe(pole_order=0)
                g_try = [
                    random_loop_algebra(scenario.rep.algebra, recipe, asub.child("g", i))
                    for i in range(scenario.curve.n_points)
                ]
                try:
                    space = build_tangent_space(point, g_try, scenario.bounds)
                except Infeasible:
                    continue
                if "s_circ_dot_vector" in spec:
                    s_dot = spec["s_circ_dot_vector"]
                else:
                    s_dot = sample_affine(space, asub.child("s"))
                tangent = make_y_tangent(point, g_try, s_dot)
                break
            out.append(tangent)
            continue
        if "s_circ_dot_vector" in spec:
            s_dot = spec["s_circ_dot_vector"]
        else:
            space = build_tangent_space(point, g_dot, scenario.bounds)
            s_dot = sample_affine(space, sub.child("s"))
        out.append(make_y_tangent(point, g_dot, s_dot))
    return out


def scenario_higgs(scenario: Scenario):
    """The Higgs point and tangents pinned by the scenario's higgs block."""
    hs = scenario.higgs_spec
    if hs is None:
        return None, []
    algebra = scenario.rep.algebra
    bundle = hs.get("bundle", scenario.bundle)
    phi = algebra.coadjoint(hs["phi_circ"])
    point = make_higgs_point(scenario.curve, algebra, bundle, phi)
    tangents = []
    for tb in hs["tangents"]:
        if tb.get("ambient"):
            tangents.append(
                ambient_higgs_tangent(
                    point,
                    tb["g_dot"],
                    algebra.coadjoint(tb["phi_circ_dot"]),
                    [algebra.coadjoint(m) for m in tb["phi_prime_dot"]],
                )
            )
        else:
            tangents.append(
                make_higgs_tangent(
                    point, tb["g_dot"], algebra.coadjoint(tb["phi_circ_dot"])
                )
            )
    return point, tangents


def random_higgs_pair(scenario: Scenario, rng: SeedStream):
    """A random Higgs point with two random tangents over the scenario bundle."""
    algebra = scenario.rep.algebra
    bundle = scenario.bundle
    fields = build_higgs_field_space(scenario.curve, algebra, bundle, scenario.bounds)
    if fields:
        phi = sample_vector(fields, rng.child("phi"))
    else:
        phi = algebra.coadjoint(
            [[RatFunc.const(0)] * algebra.n for _ in range(algebra.n)]
        )
    point = make_higgs_point(scenario.curve, algebra, bundle, phi)
    tangents = []
    for j in (1, 2):
        sub = rng.child("tangent", j)
        for attempt in range(_TANGENT_ATTEMPTS):
            asub = sub.child("attempt", attempt)
            recipe = scenario.suite.g_dot if attempt < _TANGENT_ATTEMPTS - 1 else GdotRecipe(pole_order=0)
            g_dot = [
                random_loop_algebra(algebra, recipe, asub.child("g", i))
                for i in range(scenario.curve.n_points)
            ]
            try:
                space = build_higgs_tangent_space(point, g_dot, scenario.bounds)
            except Infeasible:
                continue
            phi_dot = sample_affine(space, asub.child("phi"))
            tangents.append(make_higgs_tangent(point, g_dot, phi_dot))
            break
        else:
            raise AssertionError("unreachable: a regular g_dot is always feasible")
    return point, tangents


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


@dataclass
class TrialRecord:
    index: int
    section_dim: int
    bundle_attempts: int
    tangent_retries: int
    pullback: GaussRat = GQ_ZERO
    identity_ok: bool = False
    residuals_zero: bool = False
    alpha_residue_sum: GaussRat = GQ_ZERO
    disk_ok: bool = False
    residual_texts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pullback.is_zero() and self.identity_ok


def run_random_suite(scenario: Scenario, seed: int, trials: int) -> list:
    """The main theorem suite: random instances, exact zero expected on all."""
    root = SeedStream("random-suite", seed)
    records = []
    for t in range(trials):
        inst = build_instance(scenario, root.child("trial", t))
        rec = TrialRecord(
            index=t,
            section_dim=inst.section_dim,
            bundle_attempts=inst.bundle_attempts,
            tangent_retries=inst.tangent_retries,
        )
        t1, t2 = inst.tangents
        rec.pullback = pullback_omega(inst.point, t1, t2)
        ident = identity_check(inst.point, t1, t2)
        rec.residuals_zero = all(r.is_zero() for r in ident.residuals)
        rec.alpha_residue_sum = ident.alpha_residue_sum
        rec.disk_ok = all(ident.disk_regular) and all(
            r.is_zero() for r in ident.disk_residues
        )
        rec.identity_ok = ident.ok
        if not ident.ok:
            # keep the offending intermediate values for the report
            rec.residual_texts = [r.to_text("u") for r in ident.residuals]
        records.append(rec)
    return records


@dataclass
class CorruptRecord:
    index: int
    violations: int
    omega: GaussRat
    detected: bool


def run_corrupt_suite(scenario: Scenario, seed: int, trials: int) -> list:
    """Negative control: perturbed disk deformations must be caught."""
    root = SeedStream("corrupt-suite", seed)
    records = []
    for t in range(trials):
        rng = root.child("trial", t)
        inst = build_instance(scenario, rng)
        t1, t2 = inst.tangents
        # perturb sdot'_i at a random point/coordinate with a nonzero germ
        i = rng.randint(0, scenario.curve.n_points - 1)
        r = rng.randint(0, scenario.rep.space.dim - 1)
        delta = rng.nonzero_gauss(2, 1)
        power = rng.randint(0, 1)
        u = RatFunc.x()
        bad_prime = list(t1.s_prime_dot)
        coords = list(bad_prime[i].coords)
        coords[r] = coords[r] + delta * u ** power
        bad_prime[i] = XVector(coords)
        corrupted = unchecked_y_tangent(t1.base, t1.g_dot, t1.s_circ_dot, bad_prime)
        violations = validate_y_tangent(corrupted)
        # evaluate the pairing on the corrupted data without re-validation
        h = higgs_from_y(inst.point)
        h1 = _raw_pushforward(corrupted, h)
        h2 = _raw_pushforward(t2, h)
        omega = symplectic_omega(h, h1, h2)
        records.append(
            CorruptRecord(
                index=t,
                violations=len(violations),
                omega=omega,
                detected=bool(violations) or not omega.is_zero(),
            )
        )
    return records


def _raw_pushforward(t: YTangent, h: HiggsPoint) -> HiggsTangent:
    """dmu-image of tangent data without the cocycle consistency re-check.

    Only the corrupt suite uses this: corrupted data must still be
    evaluated to show the pairing detects it.
    """
    rep = t.base.rep
    phi_circ_dot = rep.dmoment(t.base.s_circ, t.s_circ_dot)
    phi_prime_dot = [
        rep.dmoment(t.base.s_prime[i], t.s_prime_dot[i])
        for i in range(t.base.curve.n_points)
    ]
    return HiggsTangent(h, t.g_dot, phi_circ_dot, phi_prime_dot)

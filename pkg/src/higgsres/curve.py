"""The marked projective line with a trivializing 1-form and square-root twists.

A MarkedCurve fixes the distinct marked points, the 1-form alpha used to
trivialize the canonical bundle over the complement, and per-point
transition functions T_i for the chosen square root.  Two exact
invariants tie the data together:

  * alpha has neither zeros nor poles away from the marked points;
  * at each marked point, the localized coefficient of alpha equals
    T_i(u)^-2 as a reduced rational function.

The square root itself is never materialized as a bundle; its transition
data is all any computation downstream consumes.  The sign of each T_i
is genuinely extra data (both branches satisfy the square relation), so
it is part of the curve description rather than derived.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .field import RatFunc
from .residues import INFINITY, LocalChart, OneForm, P1Point, local_coordinate, localize


@dataclass
class CurveReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class MarkedCurve:
    """P^1 with marked points, the trivializing form alpha, and twists T_i."""

    def __init__(self, marked_points, alpha, transitions):
        self.marked_points: list[P1Point] = list(marked_points)
        if not self.marked_points:
            raise ValidationError("at least one marked point is required")
        if len({hash(p) for p in self.marked_points}) != len(self.marked_points):
            raise ValidationError("marked points must be distinct")
        self.alpha: OneForm = alpha if isinstance(alpha, OneForm) else OneForm(alpha)
        if isinstance(transitions, dict):
            self.transitions = [transitions[p] for p in self.marked_points]
        else:
            self.transitions = list(transitions)
        if len(self.transitions) != len(self.marked_points):
            raise ValidationError("one transition T_i per marked point is required")
        self.transitions = [
            t if isinstance(t, RatFunc) else RatFunc(t) for t in self.transitions
        ]

    @property
    def n_points(self) -> int:
        return len(self.marked_points)

    def chart(self, i: int) -> LocalChart:
        return local_coordinate(self.marked_points[i])

    def transition(self, i: int) -> RatFunc:
        return self.transitions[i]

    def alpha_local(self, i: int) -> RatFunc:
        """The coefficient a_i(u) with alpha = a_i(u) du at marked point i."""
        return localize(self.alpha, self.marked_points[i])

    def is_regular_on_complement(self, f: RatFunc) -> bool:
        """True iff f has no poles on P^1 minus the marked points."""
        if f.is_zero():
            return True
        den = f.den
        if den.degree() >= 1:
            remaining = den
            for p in self.marked_points:
                if p.is_infinity:
                    continue
                a = p.value
                x_minus_a = remaining.__class__([-a, 1])
                while remaining.degree() >= 1:
                    q, r = divmod(remaining, x_minus_a)
                    if not r.is_zero():
                        break
                    remaining = q
            if remaining.degree() >= 1:
                return False
        if INFINITY not in self.marked_points:
            v = LocalChart(INFINITY).pull(f).valuation()
            if v is not None and v < 0:
                return False
        return True

    def __repr__(self):
        pts = ", ".join(str(p) for p in self.marked_points)
        return f"MarkedCurve([{pts}])"


def curve_validate(curve: MarkedCurve) -> CurveReport:
    """Exact verification of both curve invariants; failures are reported."""
    report = CurveReport()
    coeff = curve.alpha.coeff
    if coeff.is_zero():
        report.violations.append("alpha is identically zero")
        return report

    # zeros and poles of alpha away from the marked set
    for poly, what in ((coeff.num, "zero"), (coeff.den, "pole")):
        remaining = poly
        for p in curve.marked_points:
            if p.is_infinity:
                continue
            a = p.value
            x_minus_a = poly.__class__([-a, 1])
            while remaining.degree() >= 1:
                q, r = divmod(remaining, x_minus_a)
                if not r.is_zero():
                    break
                remaining = q
        if remaining.degree() >= 1:
            report.violations.append(
                f"alpha has a {what} away from the marked points "
                f"(unaccounted factor of degree {remaining.degree()})"
            )
    if INFINITY not in curve.marked_points:
        v = localize(curve.alpha, INFINITY).valuation()
        if v is None or v != 0:
            kind = "pole" if (v is not None and v < 0) else "zero"
            report.violations.append(f"alpha has a {kind} at the unmarked point inf")

    # T_i^-2 must match the localized coefficient exactly
    for i, p in enumerate(curve.marked_points):
        t = curve.transition(i)
        if t.is_zero():
            report.violations.append(f"transition T at {p} is zero")
            continue
        if curve.alpha_local(i) != t.inverse() * t.inverse():
            report.violations.append(
                f"localized alpha at {p} differs from T^-2"
            )
    return report

"""Registry of the verification scenarios run by the harness.

Every scenario maps a RunConfig and its tolerance to an ordered list of
reports.Sample. Samples that compare two verdicts carry an agreement
indicator (0 agree, 1 disagree) with tolerance AGREEMENT_TOLERANCE.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import OrderedDict, namedtuple
import logging
import math

import numpy as np

from fracslice.algebra.geometry import (
    SlicePoint,
    UnitImaginary,
    complete_basis,
    reassemble,
    split,
)
from fracslice.algebra.multivector import Multivector
from fracslice.calculus.fractional import (
    caputo_derivative_left,
    caputo_derivative_right,
    fd_prime,
    frac_integral_left,
    frac_integral_right,
    rl_derivative_left,
    rl_derivative_right,
)
from fracslice.calculus.gamma import power_law_derivative, power_law_integral
from fracslice.engines.factories import SweepFactory
from fracslice.error_message import ConfigError, FracSliceError, UnknownScenarioError
from fracslice.harness.families import (
    constant_cross_function,
    exp_slice_function,
    linear_cross_function,
    random_constants,
    scalar_test_functions,
    sm_lambda_function,
    smooth_cross_function,
    smooth_slice_function,
)
from fracslice.harness.reports import Sample, ScenarioReport
from fracslice.harness.utils import time_logger
from fracslice.monogenic.integrals import (
    Contour,
    cauchy_value,
    contour_integral,
    morera_classify,
)
from fracslice.monogenic.operators import (
    cr_residual,
    exp_conjugation_residual,
    representation_combine,
    splitting_holomorphy_check,
)
from fracslice.monogenic.series import series_fit
from fracslice.operators.caputo import (
    caputo_characterization_check,
    caputo_h_identity_residual,
    caputo_member_construct,
    caputo_operator,
    is_caputo_member,
    mixed_operator,
)
from fracslice.operators.config import (
    A_PLUS,
    CAPUTO,
    LEFT,
    RIGHT,
    RL,
    ZERO_PLUS,
    CornerVariant,
    MixedVariant,
)
from fracslice.operators.properties import (
    cross_recovery_check,
    frac_cauchy_check,
    frac_cauchy_theorem_check,
    frac_morera_check,
    frac_representation_check,
    frac_series_fit,
    frac_splitting_check,
)
from fracslice.operators.riemann_liouville import (
    fracprop1_residual,
    hmap_function,
    is_frac_slice_monogenic,
    member_construct,
    perturb,
    rl_operator,
)

logger = logging.getLogger(__name__)

Scenario = namedtuple("Scenario", ["name", "func", "tolerance", "topic", "anchor"])

SCENARIOS = OrderedDict()

AGREEMENT_TOLERANCE = 0.5
# Perturbation of the built-in negative controls.
CONTROL_EPSILON = 0.1
# Residuals below this are rounding noise when comparing two of them.
NOISE_FLOOR = 1e-8
SERIES_DEGREES = tuple(range(2, 9))
MAX_IDENTITY_POINTS = 10


def register(name, tolerance, topic, anchor):
    def decorator(func):
        SCENARIOS[name] = Scenario(name, func, tolerance, topic, anchor)
        return func

    return decorator


def _indicator(agree):
    return 0.0 if agree else 1.0


def _agreement(I, u, v, agree):
    return Sample(I, u, v, _indicator(agree), AGREEMENT_TOLERANCE)


def _margin(box):
    return 0.1 * min(box.b - box.a, box.c)


def _random_points(box, count, random_state):
    """count (u, v, I) triples inside the upper half of the box slices."""
    margin = _margin(box)
    points = []
    for _ in range(count):
        u = random_state.uniform(box.a + margin, box.b - margin)
        v = random_state.uniform(margin, box.c - margin)
        points.append((u, v))
    return points


def _random_samples(run, box, count, random_state):
    points = _random_points(box, count, random_state)
    return [(UnitImaginary.random(run["n"], random_state), u, v) for u, v in points]


def _disk(box):
    """Center and radius of a disk in the upper half of the box slices."""
    radius = 0.3 * min(box.b - box.a, box.c)
    return complex(0.5 * (box.a + box.b), 0.5 * box.c), radius


def _member(run, cfg, variant=None, random_state=None):
    random_state = random_state or np.random.RandomState(run["seed"])
    C0 = random_constants(run["n"], 1, random_state)[0]
    member = member_construct(C0, cfg, variant)
    if run["perturbation"]:
        member = perturb(member, run["perturbation"], cfg)
    return member, C0


def _control(run, cfg):
    """The (a+, 0+, left) member plus CONTROL_EPSILON u, a negative control."""
    C0 = random_constants(run["n"], 1, np.random.RandomState(run["seed"]))[0]
    return perturb(member_construct(C0, cfg), CONTROL_EPSILON, cfg)


@register(
    "clifford-axioms",
    1e-12,
    "generator anticommutation, associativity and I^2 = -1",
    "defining relations of R_n",
)
def clifford_axioms(run, tol):
    random_state = np.random.RandomState(run["seed"])
    samples = []
    for n in sorted({2, 3, 4, run["n"]}):
        generators = [Multivector.basis(n, i) for i in range(1, n + 1)]
        for i, ei in enumerate(generators):
            for j, ej in enumerate(generators):
                delta = 2.0 if i == j else 0.0
                samples.append(Sample(None, None, None, (ei * ej + ej * ei + delta).norm(), tol))
        worst = 0.0
        for x, y, z in (random_constants(n, 3, random_state) for _ in range(1000)):
            worst = max(worst, ((x * y) * z - x * (y * z)).norm())
        samples.append(Sample(None, None, None, worst, tol))
    for _ in range(run["slices"]):
        I = UnitImaginary.random(run["n"], random_state)
        samples.append(Sample(I, None, None, (I.as_multivector() * I.as_multivector() + 1.0).norm(), tol))
    return samples


@register(
    "power-law",
    1e-8,
    "fractional integral of (g - g(a))^sigma against its closed form",
    "fractional integral of a power of g - g(a)",
)
def power_law(run, tol):
    samples = []
    for _, cfg in run.families:
        g, a = cfg.g, cfg.box.a
        ga = float(g(a))
        for sigma in (0.0, 0.5, 1.0, 2.0):
            for alpha in (0.25, 0.5, 0.75):
                f = lambda t, sigma=sigma: max(float(g(t)) - ga, 0.0) ** sigma
                for x in np.linspace(a, cfg.box.b, 22)[1:]:
                    value = frac_integral_left(f, a, alpha, g, x, cfg.quad)
                    exact = power_law_integral(sigma, alpha, float(g(x)) - ga)
                    samples.append(Sample(None, x, None, abs(value - exact) / abs(exact), tol))
    return samples


def _interior(box, count=7):
    margin = _margin(box)
    return np.linspace(box.a + margin, box.b - margin, count)


@register(
    "fund-theorem",
    1e-4,
    "RL derivative of the fractional integral recovers f, both sides",
    "fundamental theorem of fractional calculus with respect to g",
)
def fund_theorem(run, tol):
    tasks = []
    for _, cfg in run.families:
        for _, f, _ in scalar_test_functions():
            for x in _interior(cfg.box):
                tasks.append((cfg, f, float(x)))

    def residual(task):
        cfg, f, x = task
        a, b, alpha, g, quad = cfg.box.a, cfg.box.b, cfg.alpha, cfg.g, cfg.quad
        left = rl_derivative_left(
            lambda t: frac_integral_left(f, a, alpha, g, t, quad), a, alpha, g, x, quad
        )
        right = rl_derivative_right(
            lambda t: frac_integral_right(f, b, alpha, g, t, quad), b, alpha, g, x, quad
        )
        return abs(left - f(x)), abs(right - f(x))

    samples = []
    for (_, _, x), (left, right) in zip(tasks, SweepFactory.map(residual, tasks)):
        samples.append(Sample(None, x, None, left, tol))
        samples.append(Sample(None, x, None, right, tol))
    return samples


@register(
    "rl-caputo-bridge",
    1e-4,
    "Caputo versus Riemann-Liouville derivatives on both sides",
    "Riemann-Liouville to Caputo relation",
)
def rl_caputo_bridge(run, tol):
    samples = []
    for _, cfg in run.families:
        a, b, alpha, g, quad = cfg.box.a, cfg.box.b, cfg.alpha, cfg.g, cfg.quad
        nested = quad.shrinking()
        ga, gb = float(g(a)), float(g(b))
        for _, f, f_prime in scalar_test_functions():
            left_mass = lambda t, f=f: frac_integral_left(f, a, 1.0 - alpha, g, t, quad)
            right_mass = lambda t, f=f: frac_integral_right(f, b, 1.0 - alpha, g, t, quad)
            left_prime = fd_prime(left_mass, a, b, quad.fd)
            right_prime = fd_prime(right_mass, a, b, quad.fd)
            for x in _interior(cfg.box, 5):
                x = float(x)
                # Caputo of the complementary integral against the integral of RL.
                lhs = caputo_derivative_left(None, left_prime, a, alpha, g, x, quad)
                rhs = frac_integral_left(
                    lambda t, f=f: rl_derivative_left(f, a, alpha, g, t, nested),
                    a, 1.0 - alpha, g, x, quad,
                )
                samples.append(Sample(None, x, None, abs(lhs - rhs), tol))
                lhs = caputo_derivative_right(None, right_prime, b, alpha, g, x, quad)
                rhs = frac_integral_right(
                    lambda t, f=f: rl_derivative_right(f, b, alpha, g, t, nested),
                    b, 1.0 - alpha, g, x, quad,
                )
                samples.append(Sample(None, x, None, abs(lhs - rhs), tol))
                # Caputo = RL minus the boundary value times the RL derivative of 1.
                caputo = caputo_derivative_left(f, f_prime, a, alpha, g, x, quad)
                rl = rl_derivative_left(f, a, alpha, g, x, quad)
                jump = f(a) * power_law_derivative(0.0, alpha, float(g(x)) - ga)
                samples.append(Sample(None, x, None, abs(caputo - (rl - jump)), tol))
                caputo = caputo_derivative_right(f, f_prime, b, alpha, g, x, quad)
                rl = rl_derivative_right(f, b, alpha, g, x, quad)
                jump = f(b) * power_law_derivative(0.0, alpha, gb - float(g(x)))
                samples.append(Sample(None, x, None, abs(caputo - (rl - jump)), tol))
    return samples


@register(
    "exp-conjugation",
    1e-6,
    "exp(lam u) conjugation of the lambda residual",
    "exp(lam u) f is slice monogenic iff f is in SM_lambda",
)
def exp_conjugation(run, tol):
    random_state = np.random.RandomState(run["seed"])
    box = run.box
    f = smooth_slice_function(run["n"], random_state, box)
    tasks = []
    for lam in (0.0, run["exp_lambda"], -0.3):
        for I, u, v in _random_samples(run, box, run["points"], random_state):
            tasks.append((lam, SlicePoint(u, v, I)))
    fd = run.quad.fd
    residuals = SweepFactory.map(
        lambda task: exp_conjugation_residual(f, task[1], task[0], fd).norm(), tasks
    )
    return [Sample(p.I, p.u, p.v, res, tol) for (_, p), res in zip(tasks, residuals)]


def _sm_lambda(run, random_state):
    coefficients = random_constants(run["n"], 4, random_state, scale=0.5)
    lam = run["exp_lambda"]
    return sm_lambda_function(coefficients, lam, run.box), lam


@register(
    "representation",
    1e-8,
    "representation formula on a closed-form SM_lambda function",
    "representation formula for SM_lambda",
)
def representation(run, tol):
    random_state = np.random.RandomState(run["seed"])
    F, _ = _sm_lambda(run, random_state)
    samples = []
    for I, u, v in _random_samples(run, run.box, run["points"], random_state):
        Ix = UnitImaginary.random(run["n"], random_state)
        residual = (representation_combine(F, u, v, I, Ix) - F(u, v, Ix)).norm()
        samples.append(Sample(Ix, u, v, residual, tol))
    return samples


@register("splitting", 1e-6, "splitting into holomorphic components and back", "splitting lemma")
def splitting(run, tol):
    random_state = np.random.RandomState(run["seed"])
    F, lam = _sm_lambda(run, random_state)
    samples = []
    for I, u, v in _random_samples(run, run.box, run["slices"] * 4, random_state):
        basis = complete_basis(I, run["seed"])
        value = F(u, v, I)
        roundtrip = (reassemble(split(value, basis), basis) - value).norm()
        samples.append(Sample(I, u, v, roundtrip, 1e-10))
        holomorphy = splitting_holomorphy_check(F, I, basis, lam, [(u, v)], run.quad.fd)
        samples.append(Sample(I, u, v, holomorphy, tol))
    return samples


@register(
    "cauchy-formula",
    1e-6,
    "slice Cauchy formula with 512 contour nodes",
    "slice Cauchy integral formula",
)
def cauchy_formula(run, tol):
    random_state = np.random.RandomState(run["seed"])
    F, lam = _sm_lambda(run, random_state)
    box = run.box
    center = complex(0.5 * (box.a + box.b), 0.0)
    radius = 0.4 * min(box.b - box.a, box.c)
    samples = []
    for _ in range(run["slices"] * 4):
        I = UnitImaginary.random(run["n"], random_state)
        rho, phi = 0.5 * radius * random_state.uniform(), math.pi * random_state.uniform()
        p = SlicePoint(center.real + rho * math.cos(phi), rho * math.sin(phi), I)
        residual = (cauchy_value(F, center, radius, p, lam, 512) - F.at(p)).norm()
        samples.append(Sample(I, p.u, p.v, residual, tol))
    return samples


@register(
    "cauchy-theorem",
    1e-8,
    "weighted integral over closed circles and rectangles vanishes",
    "slice Cauchy theorem",
)
def cauchy_theorem(run, tol):
    random_state = np.random.RandomState(run["seed"])
    F, lam = _sm_lambda(run, random_state)
    box = run.box
    center = complex(0.5 * (box.a + box.b), 0.0)
    radius = 0.4 * min(box.b - box.a, box.c)
    weight = lambda w: math.exp(lam * w.real)
    samples = []
    for _ in range(run["slices"]):
        I = UnitImaginary.random(run["n"], random_state)
        circle = Contour.circle(center, radius, I)
        samples.append(Sample(I, center.real, center.imag, contour_integral(weight, circle, F).norm(), tol))
        rectangle = Contour.rectangle(center.real - radius, center.real + radius, -radius, radius, I)
        samples.append(Sample(I, center.real, center.imag, contour_integral(weight, rectangle, F).norm(), tol))
    return samples


@register(
    "morera",
    1e-8,
    "Morera surrogate separates SM_lambda from generic functions",
    "slice Morera theorem",
)
def morera(run, tol):
    random_state = np.random.RandomState(run["seed"])
    F, lam = _sm_lambda(run, random_state)
    verdict = morera_classify(F, lam, trials=8, seed=run["seed"], tol=tol)
    control = morera_classify(
        smooth_slice_function(run["n"], random_state, run.box), lam, trials=8, seed=run["seed"], tol=tol
    )
    return [Sample(None, None, None, verdict.worst, tol), _agreement(None, None, None, not control.passed)]


@register(
    "fracprop1",
    1e-3,
    "corner operator against dbar of the signed hmap, all corners",
    "corner operator as dbar of the signed hmap",
)
def fracprop1(run, tol):
    random_state = np.random.RandomState(run["seed"])
    variants = CornerVariant.all()
    tasks = []
    for _, cfg in run.families:
        f = smooth_slice_function(run["n"], random_state, cfg.box)
        for k, (I, u, v) in enumerate(_random_samples(run, cfg.box, run["points"], random_state)):
            tasks.append((f, variants[k % len(variants)], SlicePoint(u, v, I), cfg))
    residuals = SweepFactory.map(lambda task: fracprop1_residual(*task).norm(), tasks)
    return [Sample(p.I, p.u, p.v, res, tol) for (_, _, p, _), res in zip(tasks, residuals)]


def _hmap_cr_samples(f, cfg, grid, tol, variant=None):
    variant = variant or CornerVariant()
    H = hmap_function(f, cfg, variant)
    samples = []
    for I, u, v in grid.samples(cfg.box, f.n):
        residual = cr_residual(H, SlicePoint(u, v, I), cfg.lam, cfg.quad.fd, side=variant.mult_side)
        samples.append(Sample(I, u, v, residual.norm(), tol))
    return samples


def _membership_samples(report):
    return [Sample(I, u, v, res, report.tolerance) for I, u, v, res in report.records]


@register(
    "fracprop2",
    1e-3,
    "kernel membership agrees with SM_lambda certification of hmap",
    "membership iff hmap is in SM_lambda",
)
def fracprop2(run, tol):
    cfg = run.kernel
    member, _ = _member(run, cfg)
    control = _control(run, cfg)
    samples = []
    verdicts = []
    for f, keep in ((member, True), (control, False)):
        report = is_frac_slice_monogenic(f, CornerVariant(), cfg, run.grid, tol, with_hmap=False)
        certification = _hmap_cr_samples(f, cfg, run.grid, tol)
        certified = all(sample.residual <= tol for sample in certification)
        if keep:
            samples.extend(_membership_samples(report))
            samples.extend(certification)
        samples.append(_agreement(None, None, None, report.verdict == certified))
        verdicts.append(report.verdict)
    samples.append(_agreement(None, None, None, not verdicts[1]))
    return samples


@register(
    "member-kernel",
    1e-3,
    "constructed members lie in the kernel of every corner operator",
    "non-trivial members of the fractional kernel",
)
def member_kernel(run, tol):
    cfg = run.kernel
    samples = []
    for variant in CornerVariant.all():
        member, _ = _member(run, cfg, variant)
        report = is_frac_slice_monogenic(member, variant, cfg, run.grid, tol, with_hmap=False)
        samples.extend(_membership_samples(report))
        samples.extend(_hmap_cr_samples(member, cfg, run.grid, tol, variant))
    n = run["n"]
    if n >= 2:
        e1, I = Multivector.basis(n, 1), UnitImaginary.basis(n, 2)
        member = member_construct(e1, cfg)
        for u, v in run.grid.points(cfg.box):
            residual = rl_operator(member, CornerVariant(), SlicePoint(u, v, I), cfg).norm()
            samples.append(Sample(I, u, v, residual, tol))
    return samples


@register(
    "frac-representation",
    1e-3,
    "representation formula for hmap of a member",
    "fractional representation formula",
)
def frac_representation(run, tol):
    cfg = run.kernel
    random_state = np.random.RandomState(run["seed"])
    member, _ = _member(run, cfg, random_state=random_state)
    samples = []
    for u, v in run.grid.points(cfg.box):
        Ix = UnitImaginary.random(run["n"], random_state)
        I = UnitImaginary.random(run["n"], random_state)
        p = SlicePoint(u, v, Ix)
        samples.append(Sample(I, u, v, frac_representation_check(member, p, I, cfg), tol))
    u, v = run.grid.points(cfg.box)[0]
    samples.append(Sample(Ix, u, v, frac_representation_check(member, SlicePoint(u, v, Ix), Ix, cfg), 1e-12))
    return samples


@register(
    "frac-splitting",
    1e-3,
    "split hmap of a member into holomorphic components",
    "fractional splitting",
)
def frac_splitting(run, tol):
    cfg = run.kernel
    member, _ = _member(run, cfg)
    control = _control(run, cfg)
    points = run.grid.points(cfg.box)
    samples = []
    for I in run.grid.imaginaries(run["n"]):
        basis = complete_basis(I, run["seed"])
        samples.append(Sample(I, None, None, frac_splitting_check(member, I, basis, cfg, points), tol))
    I = run.grid.imaginaries(run["n"])[0]
    flagged = frac_splitting_check(control, I, complete_basis(I, run["seed"]), cfg, points) > tol
    samples.append(_agreement(I, None, None, flagged))
    return samples


@register(
    "frac-series",
    1e-3,
    "power series fit of hmap and its convergence in the degree",
    "fractional power series",
)
def frac_series(run, tol):
    cfg = run.kernel
    member, _ = _member(run, cfg)
    center, radius = _disk(cfg.box)
    I = run.grid.imaginaries(run["n"])[0]
    samples = []
    previous = None
    for degree in SERIES_DEGREES:
        fit = frac_series_fit(member, center, radius, degree, cfg, I)
        samples.append(Sample(I, center.real, center.imag, fit.residual, tol))
        samples.append(
            _agreement(I, center.real, center.imag, fit.holdout_residual <= max(2 * fit.residual, NOISE_FLOOR))
        )
        if previous is not None:
            samples.append(
                _agreement(I, center.real, center.imag, fit.residual <= max(previous, NOISE_FLOOR))
            )
        previous = fit.residual
    # Strict decrease on a function with infinitely many nonzero coefficients.
    generic = exp_slice_function(Multivector.scalar(run["n"], 1.0), cfg.box)
    residuals = [series_fit(generic, center, radius, degree, I).residual for degree in SERIES_DEGREES]
    for coarse, fine in zip(residuals, residuals[1:]):
        samples.append(_agreement(I, center.real, center.imag, fine < coarse))
    return samples


@register(
    "frac-cauchy",
    1e-3,
    "Cauchy formula reproduces hmap of a member",
    "fractional Cauchy formula",
)
def frac_cauchy(run, tol):
    cfg = run.kernel
    random_state = np.random.RandomState(run["seed"])
    member, _ = _member(run, cfg, random_state=random_state)
    center, radius = _disk(cfg.box)
    samples = []
    for I in run.grid.imaginaries(run["n"]):
        rho, phi = 0.5 * radius * random_state.uniform(), 2 * math.pi * random_state.uniform()
        p = SlicePoint(center.real + rho * math.cos(phi), center.imag + rho * math.sin(phi), I)
        samples.append(Sample(I, p.u, p.v, frac_cauchy_check(member, center, radius, p, cfg), tol))
    return samples


@register(
    "frac-cauchy-thm",
    1e-3,
    "closed contour integrals of hmap of a member vanish",
    "fractional Cauchy theorem",
)
def frac_cauchy_thm(run, tol):
    cfg = run.kernel
    member, _ = _member(run, cfg)
    control = _control(run, cfg)
    center, radius = _disk(cfg.box)
    samples = []
    for I in run.grid.imaginaries(run["n"]):
        circle = Contour.circle(center, radius, I, nodes=128)
        rectangle = Contour.rectangle(
            center.real - radius, center.real + radius, center.imag - radius, center.imag + radius, I, 32
        )
        for contour in (circle, rectangle):
            samples.append(Sample(I, center.real, center.imag, frac_cauchy_theorem_check(member, contour, cfg), tol))
    I = run.grid.imaginaries(run["n"])[0]
    flagged = frac_cauchy_theorem_check(control, Contour.circle(center, radius, I, nodes=128), cfg) > tol
    samples.append(_agreement(I, center.real, center.imag, flagged))
    return samples


@register(
    "frac-morera",
    1e-3,
    "Morera surrogate on hmap accepts members and rejects perturbations",
    "fractional Morera theorem",
)
def frac_morera(run, tol):
    cfg = run.kernel
    member, _ = _member(run, cfg)
    control = _control(run, cfg)
    verdict = frac_morera_check(member, cfg, trials=4, seed=run["seed"], tol=tol)
    rejected = frac_morera_check(control, cfg, trials=4, seed=run["seed"], tol=tol)
    return [Sample(None, None, None, verdict.worst, tol), _agreement(None, None, None, not rejected.passed)]


@register(
    "cross-recovery",
    1e-2,
    "recover f on the cross from the series of hmap",
    "recovery of f on the cross",
)
def cross_recovery(run, tol):
    cfg = run.kernel
    random_state = np.random.RandomState(run["seed"])
    member, _ = _member(run, cfg, random_state=random_state)
    center, radius = _disk(cfg.box)
    I = run.grid.imaginaries(run["n"])[0]
    fit = frac_series_fit(member, center, radius, 3, cfg, I)
    fine_quad = cfg.quad.with_order(2 * cfg.quad.order)
    samples = []
    for Ix, u, v in _random_samples(run, cfg.box, run["slices"], random_state):
        p = SlicePoint(u, v, Ix)
        coarse = cross_recovery_check(member, p, cfg, center, radius, I=I, fit=fit)
        fine = cross_recovery_check(member, p, cfg, center, radius, I=I, fit=fit, quad=fine_quad)
        samples.append(Sample(Ix, u, v, coarse, tol))
        samples.append(_agreement(Ix, u, v, fine <= max(coarse, NOISE_FLOOR)))
    return samples


def _caputo_member(run, cfg, random_state):
    C0, K = random_constants(run["n"], 2, random_state)
    member = caputo_member_construct(C0, cfg, offset=K)
    if run["perturbation"]:
        member = perturb(member, run["perturbation"], cfg)
    return member, K


@register(
    "caputo-kernel",
    1e-3,
    "constants and shifted members in the Caputo kernel",
    "constants in the Caputo kernel",
)
def caputo_kernel(run, tol):
    cfg = run.kernel
    random_state = np.random.RandomState(run["seed"])
    member, K = _caputo_member(run, cfg, random_state)
    constant = constant_cross_function(K, cfg)
    samples = []
    for I, u, v in run.grid.samples(cfg.box, run["n"]):
        residual = caputo_operator(constant, None, CornerVariant(), SlicePoint(u, v, I), cfg).norm()
        samples.append(Sample(I, u, v, residual, 1e-10))
    report = is_caputo_member(member, cfg, run.grid, tol)
    samples.extend(_membership_samples(report))
    rl_report = is_frac_slice_monogenic(member, CornerVariant(), cfg, run.grid, tol, with_hmap=False)
    samples.append(_agreement(None, None, None, not rl_report.verdict))
    return samples


@register(
    "caputo-h-identity",
    1e-2,
    "Caputo derivative of H f against H of the RL derivative",
    "Caputo operator through the H operator",
)
def caputo_h_identity(run, tol):
    cfg = run.primary
    random_state = np.random.RandomState(run["seed"])
    f = smooth_slice_function(run["n"], random_state, cfg.box)
    count = min(run["points"], MAX_IDENTITY_POINTS)
    tasks = [SlicePoint(u, v, I) for I, u, v in _random_samples(run, cfg.box, count, random_state)]
    residuals = SweepFactory.map(lambda p: caputo_h_identity_residual(f, p, cfg).norm(), tasks)
    return [Sample(p.I, p.u, p.v, res, tol) for p, res in zip(tasks, residuals)]


@register(
    "caputo-characterization",
    1e-2,
    "H-based characterization of the Caputo kernel",
    "H characterization of the Caputo kernel",
)
def caputo_characterization(run, tol):
    cfg = run.kernel
    random_state = np.random.RandomState(run["seed"])
    member, K = _caputo_member(run, cfg, random_state)
    outsider = linear_cross_function(K, cfg)
    samples = []
    for I, u, v in _random_samples(run, cfg.box, run["slices"], random_state):
        p = SlicePoint(u, v, I)
        first, second = caputo_characterization_check(member, p, cfg)
        samples.append(Sample(I, u, v, first, tol))
        samples.append(Sample(I, u, v, second, tol))
        flagged = caputo_characterization_check(outsider, p, cfg)[0] > 10 * tol
        samples.append(_agreement(I, u, v, flagged))
    return samples


def _rl_gap(f, variant, p, cfg):
    """RL minus Caputo for the directions of variant that are RL."""
    corner = variant.corner
    n = f.n
    u_gap = Multivector.zeros(n)
    v_gap = Multivector.zeros(n)
    if variant.u_kind == RL:
        if corner.u_side == A_PLUS:
            end, distance = cfg.box.a, float(cfg.g(p.u)) - float(cfg.g(cfg.box.a))
        else:
            end, distance = cfg.box.b, float(cfg.g(cfg.box.b)) - float(cfg.g(p.u))
        u_gap = power_law_derivative(0.0, cfg.alpha, distance) * f.horizontal(end, cfg.s, p.I)
    if variant.v_kind == RL:
        if corner.v_side == ZERO_PLUS:
            end, distance = 0.0, float(cfg.h(p.v)) - float(cfg.h(0.0))
        else:
            end, distance = cfg.box.c, float(cfg.h(cfg.box.c)) - float(cfg.h(p.v))
        v_gap = power_law_derivative(0.0, cfg.beta, distance) * f.vertical(cfg.r, end, p.I)
    Imv = p.I.as_multivector()
    if corner.mult_side == LEFT:
        return u_gap + Imv * v_gap
    return u_gap + v_gap * Imv


@register(
    "mixed-operators",
    1e-3,
    "mixed RL/Caputo operators against the pure ones",
    "mixed Riemann-Liouville and Caputo operators",
)
def mixed_operators(run, tol):
    cfg = run.primary
    random_state = np.random.RandomState(run["seed"])
    f = smooth_cross_function(run["n"], random_state, cfg)
    constant = constant_cross_function(random_constants(run["n"], 1, random_state)[0], cfg)
    samples = []
    triples = _random_samples(run, cfg.box, run["slices"], random_state)
    for variant in MixedVariant.all(LEFT) + MixedVariant.all(RIGHT):
        corner = variant.corner
        for I, u, v in triples:
            p = SlicePoint(u, v, I)
            mixed = mixed_operator(f, None, variant, p, cfg)
            caputo = caputo_operator(f, None, corner, p, cfg)
            if variant.u_kind == CAPUTO and variant.v_kind == CAPUTO:
                samples.append(Sample(I, u, v, (mixed - caputo).norm(), 1e-12))
                continue
            # RL and Caputo differ by the boundary value times the RL derivative of 1.
            gap = _rl_gap(f, variant, p, cfg)
            samples.append(Sample(I, u, v, (mixed - caputo - gap).norm(), tol))
            # On constants only the RL directions survive.
            residual = mixed_operator(constant, None, variant, p, cfg) - _rl_gap(constant, variant, p, cfg)
            samples.append(Sample(I, u, v, residual.norm(), tol))
    return samples


def check_tolerances(run):
    """Tolerance overrides may only name registered scenarios."""
    unknown = [name for name in run.tolerances if name not in SCENARIOS]
    if unknown:
        raise ConfigError("Tolerance given for unknown scenarios: {}".format(", ".join(unknown)))


def run_scenario(name, run):
    """Run one registered scenario.

    Returns:
        ScenarioReport; identical configurations give identical reports. A
        numerical error inside the scenario gives a failed report carrying
        the error message.
    """
    if name not in SCENARIOS:
        raise UnknownScenarioError("Unknown scenario {!r}; see `fracslice list`".format(name))
    check_tolerances(run)
    scenario = SCENARIOS[name]
    tolerance = run.tolerance(name, scenario.tolerance)
    samples, error = [], None
    with time_logger("Scenario: {}".format(name)) as timing:
        try:
            samples = scenario.func(run, tolerance)
        except ConfigError:
            raise
        except FracSliceError as err:
            logger.error("Scenario %s stopped: %s: %s", name, type(err).__name__, err)
            error = "{}: {}".format(type(err).__name__, err)
    report = ScenarioReport(name, run.echo(), samples, timing["seconds"], error=error)
    logger.debug("%r", report)
    return report


def run_all(run):
    check_tolerances(run)
    return [run_scenario(name, run) for name in SCENARIOS]

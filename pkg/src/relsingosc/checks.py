"""Named verification checks over the model, shared by the CLI and the test
suite.

Grid-scoped checks take one validated parameter point (through a context
that caches the eigenstates and operators for that point); global checks
carry their own fixed parameter sets. Every check reduces to a single
scalar residual compared against a tolerance, with the convention that
smaller is always better: negative controls (which must observe a LARGE
residual) report the margin ratio threshold/observed against tolerance 1.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import planewaves, specfun
from .operators import (
    AnalyticFunction,
    compose,
    identity_op,
    linear_combination,
    op_sum,
    scale,
    taylor_limit_check,
)
from .oscillator import (
    RHO_SAMPLES,
    InvalidParametersError,
    ModelParams,
    derive_params,
    eigen_residual,
    energy,
    hamiltonian_radial_N,
    hamiltonian_reduced,
    nonrel_energy,
    quasipotential_scaled,
    radial_wavefunction,
    state_decay_hint,
)
from .quadrature import DecayHint, gram_matrix, integrate_halfline
from .symmetry import (
    CoefficientState,
    LadderCoefficients,
    build_a_minus,
    build_a_plus,
    build_A_minus,
    build_A_plus,
    build_momentum,
    casimir,
    commutator_residual,
    generate_state_via_ladder,
    k_lower_pointwise,
    k_raise_pointwise,
)

__all__ = [
    "CheckOutcome",
    "CheckDef",
    "GridContext",
    "CHECKS",
    "DEFAULT_GRID",
    "default_grid_points",
    "run_point",
    "run_global",
    "NEGATIVE_CONTROL_THRESHOLD",
]

NEGATIVE_CONTROL_THRESHOLD = 1e-3
_GUARD = 1e-300

# default verification grid; invalid combinations are auto-skipped
DEFAULT_GRID = {
    "dims": (2, 3, 5, 8),
    "l": (0, 1, 2),
    "n_max": 5,
    "omega0": (0.05, 0.2, 1.0),
    "g0": (0.1, 1.0),
}

# fixed superposition coefficients for commutator test functions
_SUPERPOSITIONS = (
    (1.0, 0.5, -0.25, 0.125),
    (0.3 + 0.4j, -0.7, 0.2j, 0.1),
)


@dataclass(frozen=True)
class CheckOutcome:
    """One report entry; status 'skipped' entries carry a reason instead of numbers.

    params is a plain snapshot dict {N, l, omega0, g0} (None for global checks)
    so outcomes serialize directly.
    """

    check_id: str
    params: dict | None
    residual: float | None
    tolerance: float | None
    passed: bool | None
    runtime_ms: float
    status: str = "ran"
    reason: str = ""


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    scope: str  # "grid" or "global"
    default_tol: float
    runner: Callable
    description: str


class GridContext:
    """Per-parameter-point cache of eigenstates and operator chains."""

    def __init__(self, params: ModelParams, n_max: int = 5, rho_samples=RHO_SAMPLES):
        self.params = params
        self.n_max = int(n_max)
        self.rho_samples = tuple(rho_samples)
        self.derived = derive_params(params)
        self._states: dict[int, object] = {}
        self._ops: dict[str, object] = {}
        self._memo: dict[str, object] = {}

    def state(self, n: int):
        if n not in self._states:
            self._states[n] = radial_wavefunction(self.params, n)
        return self._states[n]

    def states(self, up_to: int):
        return {n: self.state(n) for n in range(up_to + 1)}

    def op(self, name: str):
        if name not in self._ops:
            builders = {
                "H": lambda: hamiltonian_reduced(self.params),
                "a-": lambda: build_a_minus(self.params),
                "a+": lambda: build_a_plus(self.params),
                "A-": lambda: build_A_minus(self.params),
                "A+": lambda: build_A_plus(self.params),
                "P": lambda: build_momentum(self.params),
            }
            self._ops[name] = builders[name]()
        return self._ops[name]

    def energy_of(self, n: int) -> float:
        return energy(n, self.derived, self.params.omega0)

    def superpositions(self, up_to: int = 3):
        states = self.states(up_to)
        fns = [states[n].fn for n in range(up_to + 1)]
        return [linear_combination(cs, fns) for cs in _SUPERPOSITIONS]


# --------------------------------------------------------------------------
# grid-scoped checks
# --------------------------------------------------------------------------

def check_eigen_residual(ctx: GridContext) -> float:
    H = ctx.op("H")
    worst = 0.0
    for n in range(ctx.n_max + 1):
        st = ctx.state(n)
        worst = max(worst, eigen_residual(H, st.fn, st.energy, ctx.rho_samples))
    return worst


def check_eigen_negative_control(ctx: GridContext) -> float:
    """Perturb E by 0.1 omega0; the eigen-residual must EXCEED the threshold.

    Reported residual is threshold/observed so that pass <=> residual <= 1.
    """
    H = ctx.op("H")
    observed = np.inf
    for n in range(ctx.n_max + 1):
        st = ctx.state(n)
        r = eigen_residual(H, st.fn, st.energy + 0.1 * ctx.params.omega0, ctx.rho_samples)
        observed = min(observed, r)
    return NEGATIVE_CONTROL_THRESHOLD / max(observed, _GUARD)


def check_orthonormality(ctx: GridContext) -> tuple[float, float]:
    """Returns (max |G - I| entry, quadrature est_error)."""
    if "gram" not in ctx._memo:
        states = ctx.states(ctx.n_max)
        fns = [states[n].fn for n in range(ctx.n_max + 1)]
        hint = state_decay_hint(ctx.derived, ctx.n_max)
        G, est = gram_matrix(fns, hint)
        dev = float(np.max(np.abs(G - np.eye(len(fns)))))
        ctx._memo["gram"] = (dev, est)
    return ctx._memo["gram"]


def check_factorization(ctx: GridContext) -> float:
    sigma = ctx.derived.alpha + ctx.derived.nu
    op = compose(scale(ctx.params.omega0), op_sum(
        compose(ctx.op("a+"), ctx.op("a-")),
        compose(scale(sigma), identity_op()),
    ))
    worst = 0.0
    for n in range(ctx.n_max + 1):
        st = ctx.state(n)
        worst = max(worst, eigen_residual(op, st.fn, st.energy, ctx.rho_samples))
    return worst


def check_commutator_hamiltonian_ladder(ctx: GridContext) -> float:
    """[H, A+-] = +-2 omega0 A+- pointwise on eigenbasis superpositions."""
    H = ctx.op("H")
    fns = ctx.superpositions(3)
    pts = ctx.rho_samples
    two_w = 2.0 * ctx.params.omega0
    r_plus = commutator_residual(H, ctx.op("A+"), compose(scale(two_w), ctx.op("A+")), fns, pts)
    r_minus = commutator_residual(H, ctx.op("A-"), compose(scale(-two_w), ctx.op("A-")), fns, pts)
    return max(r_plus, r_minus)


def check_commutator_ladder_pair(ctx: GridContext) -> float:
    """[A-, A+] on eigencomponents, in exact coefficient arithmetic:

        f(E_{n+1}) kappa_{n+1}^2 - f(E_n) kappa_n^2
            = omega0 E_n { 1 + (2/omega0^2)(E_n^2 - 1) }.
    """
    lc = LadderCoefficients.from_params(ctx.params, ctx.derived)
    om0 = ctx.params.omega0
    worst = 0.0
    for n in range(ctx.n_max + 1):
        e_n = ctx.energy_of(n)
        lhs = lc.f_energy(n + 1) * lc.kappa(n + 1) ** 2
        if n > 0:
            lhs -= lc.f_energy(n) * lc.kappa(n) ** 2
        rhs = om0 * e_n * (1.0 + 2.0 / om0 ** 2 * (e_n ** 2 - 1.0))
        worst = max(worst, abs(lhs - rhs) / (abs(rhs) + _GUARD))
    return worst


def check_su11_ladder_bracket(ctx: GridContext) -> float:
    """kappa_{n+1}^2 - kappa_n^2 = 2n + alpha + nu, exactly, n <= 50."""
    lc = LadderCoefficients.from_params(ctx.params, ctx.derived)
    sigma = ctx.derived.alpha + ctx.derived.nu
    worst = 0.0
    for n in range(51):
        lhs = lc.kappa(n + 1) ** 2 - lc.kappa(n) ** 2
        rhs = 2 * n + sigma
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return worst


def check_casimir(ctx: GridContext) -> float:
    s = ctx.derived.s
    target = s * (s - 1.0)
    states = [CoefficientState({n: 1.0}, ctx.params) for n in range(4)]
    states.append(CoefficientState({0: 0.5, 1: -0.3 + 0.1j, 2: 0.2, 3: 0.7j}, ctx.params))
    worst = 0.0
    for st in states:
        q = casimir(st)
        worst = max(worst, abs(q - target) / (abs(target) + _GUARD))
    return worst


def _pointwise_match(got, want, floor_scale: float) -> float:
    """Max |got-want| / (|want| + 1e-3 * scale): relative, with a floor that
    keeps accidental proximity to a polynomial node from dividing by ~0."""
    got = np.asarray(got)
    want = np.asarray(want)
    den = np.abs(want) + 1e-3 * floor_scale + _GUARD
    return float(np.max(np.abs(got - want) / den))


def check_ladder_action(ctx: GridContext) -> float:
    """Pointwise K+ R_n vs kappa_{n+1} R_{n+1} and K- R_n vs kappa_n R_{n-1}."""
    lc = LadderCoefficients.from_params(ctx.params, ctx.derived)
    pts = np.asarray(ctx.rho_samples)
    worst = 0.0
    top = min(4, ctx.n_max)
    for n in range(top + 1):
        st = ctx.state(n)
        up = k_raise_pointwise(st)(pts)
        want_up = lc.kappa(n + 1) * np.asarray(ctx.state(n + 1).fn(pts))
        worst = max(worst, _pointwise_match(up, want_up, float(np.max(np.abs(want_up)))))
        down = k_lower_pointwise(st)(pts)
        if n == 0:
            scale0 = float(np.max(np.abs(np.asarray(st.fn(pts)))))
            worst = max(worst, float(np.max(np.abs(down))) / scale0)
        else:
            want_dn = lc.kappa(n) * np.asarray(ctx.state(n - 1).fn(pts))
            worst = max(worst, _pointwise_match(down, want_dn, float(np.max(np.abs(want_dn)))))
    return worst


def check_state_generation(ctx: GridContext) -> float:
    """Ladder-generated R_n vs direct evaluation, pointwise, n <= 4."""
    pts = np.asarray(ctx.rho_samples)
    worst = 0.0
    for n in range(1, min(4, ctx.n_max) + 1):
        gen = generate_state_via_ladder(ctx.params, n)
        want = np.asarray(ctx.state(n).fn(pts))
        got = np.asarray(gen.fn(pts))
        worst = max(worst, _pointwise_match(got, want, float(np.max(np.abs(want)))))
    return worst


def check_state_generation_norm(ctx: GridContext) -> float:
    """|quadrature norm - 1| of ladder-generated states, n <= 4."""
    worst = 0.0
    hint = state_decay_hint(ctx.derived, 4)
    for n in range(1, min(4, ctx.n_max) + 1):
        gen = generate_state_via_ladder(ctx.params, n)
        val, _ = integrate_halfline(lambda r: np.abs(gen.fn(r)) ** 2, hint)
        worst = max(worst, abs(val - 1.0))
    return worst


def check_reduction_chain(ctx: GridContext) -> float:
    """psi = multiplier * R satisfies the unreduced N-dimensional radial
    eigen-equation at the sample points, n <= 2."""
    p = ctx.params
    H_N = hamiltonian_radial_N(p)
    worst = 0.0
    for n in range(min(2, ctx.n_max) + 1):
        st = ctx.state(n)

        def psi_eval(z, _f=st.fn.fn):
            return planewaves.reduction_multiplier(z, p.N) * _f(z)

        psi = AnalyticFunction(psi_eval, st.fn.strip_halfwidth)
        worst = max(worst, eigen_residual(H_N, psi, st.energy, ctx.rho_samples))
    return worst


def check_momentum_routes(ctx: GridContext) -> float:
    """Explicit momentum operator vs its commutator definition i[H, rho]."""
    pts = np.asarray(ctx.rho_samples)
    st = ctx.state(0)
    explicit = np.asarray(ctx.op("P").apply(st.fn)(pts))
    comm = np.asarray(build_momentum(ctx.params, route="commutator").apply(st.fn)(pts))
    den = np.abs(explicit) + _GUARD
    return float(np.max(np.abs(explicit - comm) / den))


# --------------------------------------------------------------------------
# global checks (own fixed parameter sets)
# --------------------------------------------------------------------------

def _loglog_slope(xs, ys) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def check_nonrel_spectrum_limit() -> float:
    """(E_0 - 1)/omega0 approaches the nonrelativistic value linearly in omega0."""
    omegas = (0.1, 0.05, 0.025)
    worst = 0.0
    for (N, l, g0) in ((3, 0, 0.1), (3, 1, 1.0), (5, 1, 0.5)):
        devs = []
        for om0 in omegas:
            p = ModelParams(N=N, l=l, omega0=om0, g0=g0)
            d = derive_params(p)
            devs.append(abs((energy(0, d, om0) - 1.0) / om0 - nonrel_energy(0, d.L, g0)))
        worst = max(worst, abs(_loglog_slope(omegas, devs) - 1.0))
    return worst


def check_taylor_limit() -> float:
    """(cosh(i lam d) - 1) f + lam^2 f''/2 scales as lam^4 on Gaussians."""
    pts = np.linspace(-2.0, 2.0, 9)
    cases = (
        (lambda z: np.exp(-z ** 2), lambda x: (4 * x ** 2 - 2) * np.exp(-x ** 2)),
        (lambda z: np.exp(-0.5 * (z - 1.0) ** 2),
         lambda x: ((x - 1.0) ** 2 - 1.0) * np.exp(-0.5 * (x - 1.0) ** 2)),
    )
    lams = (0.1, 0.05, 0.025)
    worst = 0.0
    for f, fpp in cases:
        resids = [taylor_limit_check(f, fpp, lam, pts) for lam in lams]
        worst = max(worst, abs(_loglog_slope(lams, resids) - 4.0))
    return worst


def _planewave_samples():
    thetas = np.linspace(0.3, np.pi - 0.3, 7)
    return [(rho, th) for rho in (1.0, 3.0, 10.0) for th in thetas]


def check_planewave_eigenvalue() -> float:
    samples = _planewave_samples()
    worst = 0.0
    for N in (2, 3, 5):
        for chi in (0.2, 0.5, 1.0):
            pw = planewaves.PlaneWaveParams(chi=chi, N=N)
            worst = max(worst, planewaves.free_hamiltonian_residual(pw, samples))
    return worst


def check_planewave_eigenvalue_rest() -> float:
    samples = _planewave_samples()
    worst = 0.0
    for N in (2, 3, 5):
        pw = planewaves.PlaneWaveParams(chi=0.0, N=N)
        worst = max(worst, planewaves.free_hamiltonian_residual(pw, samples))
    return worst


def check_planewave_nonrel_limit() -> float:
    lams = (1e-2, 5e-3, 2.5e-3)
    devs = [planewaves.xi_nonrel_deviation(1.3, 2.0, 0.4, lam) for lam in lams]
    return abs(_loglog_slope(lams, devs) - 1.0)


def check_quasipotential_limit() -> float:
    """Interaction operator approaches omega^2 r^2/2 + g/r^2 linearly in the step."""
    f = AnalyticFunction(lambda z: np.exp(-0.25 * z ** 2), np.inf)
    radii = np.asarray((0.8, 1.5, 3.0))
    lams = (1e-2, 1e-3)
    devs = []
    for lam in lams:
        op = quasipotential_scaled(1.0, 1.0, 5, lam)
        got = np.asarray(op.apply(f)(radii))
        want = (0.5 * radii ** 2 + 1.0 / radii ** 2) * f(radii)
        devs.append(float(np.max(np.abs(got - want))))
    return abs(_loglog_slope(lams, devs) - 1.0)


def check_gamma_identities() -> float:
    """Functional equation and reflection formula at seeded random points."""
    rng = np.random.default_rng(20260810)
    re = rng.uniform(0.1, 50.0, size=1000)
    im = rng.uniform(-50.0, 50.0, size=1000)
    z = re + 1j * im
    func = np.abs(np.exp(specfun.log_gamma(z + 1.0) - specfun.log_gamma(z) - np.log(z)) - 1.0)

    re2 = rng.uniform(-4.0, 4.0, size=500)
    re2 = np.where(np.abs(re2 - np.round(re2)) < 0.05, re2 + 0.1, re2)
    im2 = rng.uniform(-20.0, 20.0, size=500)
    w = re2 + 1j * im2
    refl = np.abs(np.exp(specfun.log_gamma(w) + specfun.log_gamma(1.0 - w)
                         + np.log(np.sin(np.pi * w) / np.pi)) - 1.0)
    return float(max(np.max(func), np.max(refl)))


def check_cdh_norms() -> float:
    """Closed-form orthogonality norms vs half-line quadrature, n <= 4."""
    triples = (
        specfun.CdhParams(0.5, 0.5, 0.5),
        specfun.CdhParams(1.3, 2.1, 0.4),
        specfun.CdhParams(2.603388468743137, 10.301824164386872, 0.5),
    )
    worst = 0.0
    for p in triples:
        for n in range(5):
            hint = DecayHint(power=2 * (p.a + p.b + p.c) + 4 * n, rate=math.pi)
            val, _ = integrate_halfline(
                lambda x: specfun.cdh_poly(n, x ** 2, p) ** 2 * specfun.cdh_weight(x, p)
                / (2 * math.pi),
                hint,
            )
            closed = specfun.cdh_norm(n, p)
            worst = max(worst, abs(val / closed - 1.0))
    return worst


def check_reduction_weight_identity() -> float:
    """w_3 = 1 and |multiplier|^2 w_N rho^(N-1) = 1 on the real axis."""
    rhos = np.asarray((0.2, 0.7, 1.3, 4.0, 9.5))
    worst = float(np.max(np.abs(planewaves.weight_wN(rhos, 3) - 1.0)))
    for N in (2, 3, 5, 8):
        m = planewaves.reduction_multiplier(rhos, N)
        w = planewaves.weight_wN(rhos, N)
        prod = np.abs(m) ** 2 * w * rhos ** (N - 1)
        worst = max(worst, float(np.max(np.abs(prod - 1.0))))
    return worst


# --------------------------------------------------------------------------
# registry and runners
# --------------------------------------------------------------------------

def _grid(check_id, tol, runner, description):
    return CheckDef(check_id, "grid", tol, runner, description)


def _global(check_id, tol, runner, description):
    return CheckDef(check_id, "global", tol, runner, description)


CHECKS: dict[str, CheckDef] = {c.check_id: c for c in [
    _grid("eigen-residual", 1e-9, check_eigen_residual,
          "H R_n = E_n R_n pointwise, n <= n_max"),
    _grid("eigen-negative-control", 1.0, check_eigen_negative_control,
          "perturbing E by 0.1 omega0 must raise the residual above 1e-3 "
          "(reports threshold/observed)"),
    _grid("orthonormality", 1e-6, check_orthonormality,
          "Gram matrix of R_0..R_nmax vs identity (quadrature)"),
    _grid("orthonormality-quadrature-error", 1e-8, check_orthonormality,
          "reported quadrature refinement error of the Gram matrix"),
    _grid("factorization", 1e-8, check_factorization,
          "omega0 (a+ a- + alpha + nu) R_n = E_n R_n pointwise"),
    _grid("commutator-hamiltonian-ladder", 1e-7, check_commutator_hamiltonian_ladder,
          "[H, A+-] = +-2 omega0 A+- on superpositions"),
    _grid("commutator-ladder-pair", 1e-8, check_commutator_ladder_pair,
          "[A-, A+] eigenvalues vs the cubic-in-H right side (coefficient arithmetic)"),
    _grid("su11-ladder-bracket", 1e-12, check_su11_ladder_bracket,
          "kappa_{n+1}^2 - kappa_n^2 = 2n + alpha + nu, n <= 50"),
    _grid("casimir-bargmann", 1e-10, check_casimir,
          "Casimir Rayleigh quotient equals s(s-1) on pure and mixed states"),
    _grid("ladder-action", 1e-7, check_ladder_action,
          "pointwise K+- R_n vs kappa R_{n+-1}, n <= 4"),
    _grid("state-generation", 1e-7, check_state_generation,
          "ladder-generated R_n matches direct evaluation pointwise, n <= 4"),
    _grid("state-generation-norm", 1e-6, check_state_generation_norm,
          "ladder-generated R_n has unit quadrature norm, n <= 4"),
    _grid("reduction-chain", 1e-8, check_reduction_chain,
          "multiplier-mapped R_n solves the unreduced N-dimensional equation"),
    _grid("momentum-routes", 1e-9, check_momentum_routes,
          "explicit momentum operator vs its commutator definition"),
    _global("nonrel-spectrum-limit", 0.3, check_nonrel_spectrum_limit,
            "log-log slope 1 of the spectrum deviation in omega0"),
    _global("taylor-limit", 0.3, check_taylor_limit,
            "log-log slope 4 of the small-step kinetic residual"),
    _global("planewave-eigenvalue", 1e-6, check_planewave_eigenvalue,
            "free-Hamiltonian eigenvalue residual, N in {2,3,5}, chi in {0.2,0.5,1}"),
    _global("planewave-eigenvalue-rest", 1e-12, check_planewave_eigenvalue_rest,
            "free-Hamiltonian residual at chi = 0"),
    _global("planewave-nonrel-limit", 0.3, check_planewave_nonrel_limit,
            "log-log slope 1 of the plane-wave deviation in lambda_bar"),
    _global("quasipotential-limit", 0.3, check_quasipotential_limit,
            "log-log slope 1 of the interaction-operator deviation in the step"),
    _global("gamma-identities", 1e-11, check_gamma_identities,
            "gamma functional equation and reflection formula at random points"),
    _global("cdh-norms", 1e-8, check_cdh_norms,
            "closed-form polynomial norms vs quadrature, n <= 4"),
    _global("reduction-weight-identity", 1e-12, check_reduction_weight_identity,
            "w_3 = 1 and |multiplier|^2 w_N rho^(N-1) = 1"),
]}


def default_grid_points(grid: dict | None = None):
    """Cartesian product of the grid lists, as (N, l, omega0, g0) tuples."""
    g = dict(DEFAULT_GRID)
    if grid:
        g.update(grid)
    return [
        (N, l, om0, g0)
        for N in g["dims"]
        for l in g["l"]
        for om0 in g["omega0"]
        for g0 in g["g0"]
    ]


def _make_params(point):
    N, l, om0, g0 = point
    p = ModelParams(N=int(N), l=int(l), omega0=float(om0), g0=float(g0))
    derive_params(p)  # validates the spectrum regime
    return p


def _snapshot(point) -> dict:
    N, l, om0, g0 = point
    return {"N": int(N), "l": int(l), "omega0": float(om0), "g0": float(g0)}


def run_point(point, check_ids, tolerances: dict[str, float] | None = None,
              n_max: int = 5, rho_samples=RHO_SAMPLES) -> list[CheckOutcome]:
    """Run the selected grid-scoped checks at one grid point.

    Invalid parameter combinations produce one skipped outcome per check
    with the validation reason; check exceptions become failed entries.
    """
    tolerances = tolerances or {}
    grid_ids = [cid for cid in check_ids if CHECKS[cid].scope == "grid"]
    snap = _snapshot(point)
    try:
        params = _make_params(point)
    except InvalidParametersError as exc:
        return [
            CheckOutcome(cid, snap, None, None, None, 0.0,
                         status="skipped", reason=f"skipped: {exc}")
            for cid in grid_ids
        ]

    ctx = GridContext(params, n_max=n_max, rho_samples=rho_samples)
    outcomes = []
    for cid in grid_ids:
        cdef = CHECKS[cid]
        tol = tolerances.get(cid, cdef.default_tol)
        start = time.perf_counter()
        try:
            result = cdef.runner(ctx)
            if cid == "orthonormality":
                residual = float(result[0])
            elif cid == "orthonormality-quadrature-error":
                residual = float(result[1])
            else:
                residual = float(result)
            outcomes.append(CheckOutcome(
                cid, snap, residual, tol, residual <= tol,
                (time.perf_counter() - start) * 1e3,
            ))
        except Exception as exc:  # noqa: BLE001 - individual failures must not crash the run
            outcomes.append(CheckOutcome(
                cid, snap, float("inf"), tol, False,
                (time.perf_counter() - start) * 1e3,
                reason=f"error: {type(exc).__name__}: {exc}",
            ))
    return outcomes


def run_global(check_ids, tolerances: dict[str, float] | None = None) -> list[CheckOutcome]:
    tolerances = tolerances or {}
    outcomes = []
    for cid in check_ids:
        cdef = CHECKS[cid]
        if cdef.scope != "global":
            continue
        tol = tolerances.get(cid, cdef.default_tol)
        start = time.perf_counter()
        try:
            residual = float(cdef.runner())
            outcomes.append(CheckOutcome(
                cid, None, residual, tol, residual <= tol,
                (time.perf_counter() - start) * 1e3,
            ))
        except Exception as exc:  # noqa: BLE001
            outcomes.append(CheckOutcome(
                cid, None, float("inf"), tol, False,
                (time.perf_counter() - start) * 1e3,
                reason=f"error: {type(exc).__name__}: {exc}",
            ))
    return outcomes

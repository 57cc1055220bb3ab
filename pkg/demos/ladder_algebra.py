"""The dynamical symmetry: factorization, ladder operators, su(1,1).

The Hamiltonian factorizes through half-shift operators a+-, and a pair of
quadratic ladder operators A+- moves between neighboring levels. Rescaled
spectrally, they close the su(1,1) algebra: K+- shift the level index with
coefficients kappa_n = sqrt(n (n + alpha + nu - 1)) and K0 is the
Hamiltonian in units of 2 hbar omega. The whole spectrum then follows
algebraically from the Casimir value s(s-1).
"""

import numpy as np

from relsingosc import (
    CoefficientState,
    K_action,
    LadderCoefficients,
    ModelParams,
    build_A_minus,
    build_A_plus,
    build_a_minus,
    build_a_plus,
    casimir,
    derive_params,
    generate_state_via_ladder,
    hamiltonian_reduced,
    radial_wavefunction,
)
from relsingosc.operators import compose, identity_op, op_sum, scale

p = ModelParams(N=3, l=1, omega0=0.1, g0=1.0)
d = derive_params(p)
pts = np.array([0.5, 1.0, 2.0, 5.0])
states = [radial_wavefunction(p, n) for n in range(4)]

print("=" * 72)
print("1. Factorization: H = omega0 (a+ a- + alpha + nu)")
print("=" * 72)
fact = compose(scale(p.omega0), op_sum(
    compose(build_a_plus(p), build_a_minus(p)),
    compose(scale(d.alpha + d.nu), identity_op()),
))
H = hamiltonian_reduced(p)
f0 = states[0].fn
print("  H R_0 vs factorized form at sample points:")
for r, a, b in zip(pts, H.apply(f0)(pts), fact.apply(f0)(pts)):
    print(f"    rho = {r:4.1f}: {a:+.6e}  vs  {b:+.6e}")
am_on_ground = compose(build_a_plus(p), build_a_minus(p)).apply(f0)(pts)
print(f"  a+ a- annihilates the ground state: max |a+ a- R_0| / |R_0| = "
      f"{np.max(np.abs(am_on_ground)) / np.max(np.abs(f0(pts))):.2e}")

print()
print("=" * 72)
print("2. Ladder operators connect neighboring levels")
print("=" * 72)
lc = LadderCoefficients.from_params(p, d)
Ap = build_A_plus(p)
for n in (0, 1, 2):
    image = Ap.apply(states[n].fn)(pts)
    ratio = np.asarray(image) / np.asarray(states[n + 1].fn(pts))
    expect = -np.sqrt(lc.f_energy(n + 1)) * lc.kappa(n + 1)
    print(f"  A+ R_{n} / R_{n + 1} = {ratio[0]:+.8f} (constant across rho; "
          f"predicted {expect:+.8f})")
Am = build_A_minus(p)
down = Am.apply(states[0].fn)(pts)
print(f"  A- R_0 = 0: max |A- R_0| / |R_0| = "
      f"{np.max(np.abs(down)) / np.max(np.abs(states[0].fn(pts))):.2e}")

print()
print("=" * 72)
print("3. su(1,1) in coefficient space (exact arithmetic)")
print("=" * 72)
st = CoefficientState({0: 0.6, 1: -0.3 + 0.2j, 2: 0.4}, p)
k0 = K_action("0", st)
print("  K0 multiplies component n by (n + s):")
for n in sorted(st.coeffs):
    print(f"    n = {n}: ratio = {k0.coeffs[n] / st.coeffs[n]:.6f} "
          f"(n + s = {n + d.s:.6f})")
comm = {}
lhs = K_action("-", K_action("+", st))
rhs = K_action("+", K_action("-", st))
for n in st.coeffs:
    comm[n] = lhs.coeffs.get(n, 0) - rhs.coeffs.get(n, 0)
print("  [K-, K+] = 2 K0 componentwise:",
      all(np.isclose(comm[n], 2 * k0.coeffs[n]) for n in st.coeffs))
q = casimir(st)
print(f"  Casimir on a mixed state: {q.real:.10f}  "
      f"(s(s-1) = {d.s * (d.s - 1):.10f})")

print()
print("=" * 72)
print("4. Building excited states by raising the ground state")
print("=" * 72)
for n in (1, 2, 3):
    gen = generate_state_via_ladder(p, n)
    got = np.asarray(gen.fn(pts))
    want = np.asarray(states[n].fn(pts))
    print(f"  (K+)^{n} route vs direct formula: max rel diff = "
          f"{np.max(np.abs(got - want)) / np.max(np.abs(want)):.2e}")

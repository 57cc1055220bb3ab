"""Walk through the model parameters and the bound-state spectrum.

The model has two couplings: an oscillator strength omega0 = hbar omega/mc^2
and an inverse-square coupling g0 = m g / hbar^2. Together with the
effective angular momentum L = l + (N-3)/2 they fix two indices alpha, nu,
and the whole spectrum is E_n = omega0 (2n + alpha + nu): an exactly
equidistant ladder with spacing 2 omega0, just like the nonrelativistic
singular oscillator, but with relativistic indices.
"""

import numpy as np

from relsingosc import (
    InvalidParametersError,
    ModelParams,
    derive_params,
    energy,
    nonrel_energy,
)

print("=" * 72)
print("1. Derived indices across dimensions")
print("=" * 72)
print(f"{'N':>3} {'l':>3} {'L':>6} {'alpha':>10} {'nu':>10} {'s':>10} {'E0/mc^2':>12}")
for N in (1, 2, 3, 5, 8):
    for l in (0, 1):
        if N == 1 and l > 0:
            continue  # one dimension has no angular momentum
        try:
            p = ModelParams(N=N, l=l, omega0=0.1, g0=0.5)
            d = derive_params(p)
        except InvalidParametersError as exc:
            print(f"{N:>3} {l:>3}   -- invalid: {exc}")
            continue
        print(f"{N:>3} {l:>3} {d.L:>6.1f} {d.alpha:>10.5f} {d.nu:>10.5f} "
              f"{d.s:>10.5f} {energy(0, d, p.omega0):>12.7f}")

print()
print("=" * 72)
print("2. The spectrum is exactly equidistant")
print("=" * 72)
p = ModelParams(N=5, l=1, omega0=0.08, g0=1.2)
d = derive_params(p)
levels = [energy(n, d, p.omega0) for n in range(6)]
print("levels:", np.array2string(np.array(levels), precision=8))
print("gaps  :", np.array2string(np.diff(levels), precision=12),
      f"(should all be 2*omega0 = {2 * p.omega0})")

print()
print("=" * 72)
print("3. Strong coupling collapses the discriminant")
print("=" * 72)
# D = 1 - 8 g0 w^2 - 4 w^2 L(L+1) must stay non-negative; beyond it the
# oscillatory-collapse regime begins and construction is rejected.
om0, N, l = 0.25, 5, 1
L = l + (N - 3) / 2
g_star = (1 - 4 * om0 ** 2 * L * (L + 1)) / (8 * om0 ** 2)
print(f"critical coupling g* = {g_star:.6f} at omega0={om0}, N={N}, l={l}")
for g0 in (0.5 * g_star, 0.99 * g_star, g_star, 1.01 * g_star):
    try:
        d = derive_params(ModelParams(N=N, l=l, omega0=om0, g0=g0))
        print(f"  g0 = {g0:9.5f}: D = {d.D:+.3e}, nu - alpha = {d.nu - d.alpha:.3e}")
    except InvalidParametersError as exc:
        print(f"  g0 = {g0:9.5f}: rejected ({exc})")

print()
print("=" * 72)
print("4. Weak-coupling limit recovers the nonrelativistic spectrum")
print("=" * 72)
# (E_0 - mc^2)/(hbar omega) tends to 1 + sqrt((L+1/2)^2 + 2 g0), linearly
# in omega0
N, l, g0 = 3, 1, 1.0
target = nonrel_energy(0, l, g0)
print(f"target (omega0 -> 0): {target:.8f}")
for om0 in (0.2, 0.1, 0.05, 0.025, 0.0125):
    p = ModelParams(N=N, l=l, omega0=om0, g0=g0)
    d = derive_params(p)
    excitation = (energy(0, d, om0) - 1.0) / om0
    print(f"  omega0 = {om0:7.4f}: (E0-1)/omega0 = {excitation:.8f}   "
          f"deviation = {excitation - target:+.2e}")
print("the deviation halves with omega0: a clean first-order approach")

"""Tour of the model: potential surfaces, initial states and their
gauge-invariant fields.

Run:  python demos/01_model_tour.py
Writes figures to demos/out/ when matplotlib is available.
"""

import numpy as np

from ciphase.grid import Grid
from ciphase.model import (ModelParams, eval_potential, initial_state,
                           vortex_momentum_field)
from ciphase.observables import density, momentum_field, polarization

params = ModelParams.default()
print("model parameters (atomic units)")
print(f"  mass   = {params.mass:.6f}")
print(f"  omega  = {params.omega:.6e}")
print(f"  kappa  = {params.kappa}")
print(f"  valley radius r* = {params.r_min:.4f} bohr")
print(f"  well depth        = {params.well_depth:.4f} hartree")
print(f"  packet center x0  = {params.x0:.4f} bohr, width = {params.sigma:.5f} bohr")

grid = Grid(256, 256, 20.0, 20.0)
pot = eval_potential(params, grid)
print(f"\nsurfaces on a {grid.nx}^2 grid over {grid.lx} bohr")
print(f"  E- range: [{pot.e_minus.min():.4f}, {pot.e_minus.max():.4f}] hartree")
print(f"  gap at the intersection node: {pot.bmag.min():.1e}")

# both gauges share the density; only the momentum field differs
sa = initial_state("a", params, grid)
sb = initial_state("b", params, grid)
na, nb = density(sa), density(sb)
print(f"\nmax |n_a - n_b| = {np.abs(na - nb).max():.2e} (same density)")

pia = momentum_field(sa)
pib = momentum_field(sb)
ana = vortex_momentum_field(grid)
m = pib.mask
print(f"case (a): max |pi| on unmasked nodes = {np.abs(pia.data[:, pia.mask]).max():.2e}")
print(f"case (b): max rel. deviation from the -hbar/(2r) vortex = "
      f"{np.abs(pib.data[:, m] - ana.data[:, m]).max() / np.abs(ana.data[:, m]).max():.2e}")

s, ms = polarization(sa)
X, Y = grid.meshgrid()
r = np.hypot(X, Y)
r[r == 0] = 1.0
print(f"polarization field: max |s + x/r| = "
      f"{max(np.abs(s[0][ms] + (X / r)[ms]).max(), np.abs(s[1][ms] + (Y / r)[ms]).max()):.2e}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from pathlib import Path

    Path("demos/out").mkdir(parents=True, exist_ok=True)
    fig, axes = plt.subplots(1, 3, figsize=(13, 4))
    im = axes[0].imshow(pot.e_minus, extent=(-10, 10, -10, 10), origin="lower",
                        cmap="viridis")
    axes[0].set_title("lower adiabatic surface")
    fig.colorbar(im, ax=axes[0])
    axes[1].imshow(np.log10(na + 1e-30), extent=(-10, 10, -10, 10),
                   origin="lower", vmin=-8, cmap="magma")
    axes[1].set_title("initial density (log10)")
    step = 8
    axes[2].quiver(X[::step, ::step], Y[::step, ::step],
                   np.where(m, pib.data[0], np.nan)[::step, ::step],
                   np.where(m, pib.data[1], np.nan)[::step, ::step], scale=2)
    axes[2].set_xlim(-8, -2)
    axes[2].set_ylim(-3, 3)
    axes[2].set_title("case (b) momentum field (clockwise vortex)")
    fig.tight_layout()
    fig.savefig("demos/out/model_tour.png", dpi=120)
    print("\nwrote demos/out/model_tour.png")
except ImportError:
    print("\nmatplotlib not available; skipped figures")

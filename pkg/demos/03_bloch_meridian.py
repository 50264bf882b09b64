"""The pi jump of the chained-overlap phase on the Bloch sphere.

Parallel-transporting the ground state down a meridian and back up the
antimeridian returns it with a flipped sign; the discrete chained-overlap
phase picks up exactly pi, and the jump happens abruptly when the moving
state passes through orthogonality at the south pole.

Run:  python demos/03_bloch_meridian.py
"""

import numpy as np

from ciphase.model import spin_ground_state
from ciphase.phases import pancharatnam_chain

# full loop: meridian down, antimeridian up
for n in (64, 256, 1024):
    half = n // 2
    thetas = np.concatenate([np.linspace(0, np.pi, half),
                             np.linspace(np.pi, 0, n - half + 1)[1:]])
    phis = np.concatenate([np.zeros(half), np.full(n - half, np.pi)])
    value = pancharatnam_chain(spin_ground_state(thetas, phis))
    print(f"meridian loop with {n:5d} samples: phase = {value:+.9f} "
          f"(pi = {np.pi:.9f})")

# watch the phase as the chain is extended point by point past the pole
print("\nphase of the partial chain vs polar angle of its moving end")
thetas = np.linspace(0, np.pi, 9)
for k in range(2, 10):
    th = np.concatenate([np.linspace(0, np.pi, 8), np.linspace(np.pi, 0, 8)[1:]])
    ph = np.concatenate([np.zeros(8), np.full(7, np.pi)])
    chain = spin_ground_state(th[:k], ph[:k])
    val = pancharatnam_chain(chain, warn_floor=0.0)
    endpoint = th[k - 1] if k <= 8 else 2 * np.pi - th[k - 1]
    print(f"  chain length {k:2d} (end at theta-along-path {endpoint:.2f}): "
          f"phase = {val:+.6f}")

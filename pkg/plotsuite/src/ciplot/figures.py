"""Figure builders: density/field-line snapshot panels and the three-panel
phase time series with its +-2pi images.

All content is read from run files; nothing is recomputed. Density maps are
shown on a log10 scale relative to their maximum, momentum field lines as
black streamlines, electronic polarization (when present) as grey
streamlines and the probe path as a red curve.
"""

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

STREAM_FLOOR = 1e-6  # visual density floor for field lines
TWO_PI = 2.0 * np.pi


def _panel(ax, run, entry, log_range, extent):
    planes, t_au = run.observables_at(entry)
    n = planes["n"]
    scale = n.max()
    logn = np.log10(np.maximum(n / scale, 1e-300))
    im = ax.imshow(logn, origin="lower", extent=extent, cmap="inferno",
                   vmin=log_range[0], vmax=log_range[1], interpolation="nearest")
    g = run.grid
    xs = np.linspace(extent[0], extent[1], g["nx"], endpoint=False)
    ys = np.linspace(extent[2], extent[3], g["ny"], endpoint=False)
    visible = n > STREAM_FLOOR * scale
    px = np.where(visible, planes["pi_x"], np.nan)
    py = np.where(visible, planes["pi_y"], np.nan)
    if np.isfinite(px).any() and (np.nanmax(np.hypot(px, py)) > 0):
        ax.streamplot(xs, ys, px, py, color="black", density=0.7,
                      linewidth=0.5, arrowsize=0.6)
    if "s_x" in planes:
        sx = np.where(visible, planes["s_x"], np.nan)
        sy = np.where(visible, planes["s_y"], np.nan)
        ax.streamplot(xs, ys, sx, sy, color="0.6", density=0.5,
                      linewidth=0.5, arrowsize=0.5)
    pts = run.path_at(t_au)
    ax.plot(pts[:, 0], pts[:, 1], color="red", lw=1.4)
    ax.plot(*pts[0], marker="o", ms=3, color="red")
    ax.plot(*pts[-1], marker="o", ms=3, color="red")
    ax.set_xlim(extent[0], extent[1])
    ax.set_ylim(extent[2], extent[3])
    ax.set_title(f"t = {t_au / 41.341373335182:.0f} fs", fontsize=9)
    return im


def plot_snapshots(spec):
    """Density + field-line panels: one row per run, one column per time."""
    if not spec.times_fs:
        return None
    nrows, ncols = len(spec.runs), len(spec.times_fs)
    fig, axes = plt.subplots(nrows, ncols,
                             figsize=(3.1 * ncols + 1.2, 3.0 * nrows),
                             squeeze=False)
    tol = spec.time_tol_fs
    if tol is None:
        stride = spec.runs[0].manifest["config_resolved"]["stride_steps"] * \
            spec.runs[0].manifest["config_resolved"]["dt"]
        tol = max(0.5, 0.5 * stride / 41.341373335182
                  * spec.runs[0].manifest["config_resolved"][
                      "snapshot_every_samples"])
    im = None
    for i, run in enumerate(spec.runs):
        extent = run.extent
        for j, t_fs in enumerate(spec.times_fs):
            entry = run.snapshot_near(t_fs, tol)
            im = _panel(axes[i][j], run, entry, spec.log_range, extent)
        axes[i][0].set_ylabel(spec.labels[i])
    if im is not None:
        fig.colorbar(im, ax=[ax for row in axes for ax in row],
                     label=r"$\log_{10}(n / n_{\max})$", shrink=0.8)
    fig.savefig(spec.out, dpi=130)
    return fig


def _series_with_images(ax, t, y, ok, color, label=None, marker="."):
    """Plot a phase series, gap invalid samples, add +-2pi images."""
    y = np.where(ok, y, np.nan)
    for shift, alpha in ((0.0, 1.0), (TWO_PI, 0.35), (-TWO_PI, 0.35)):
        ax.plot(t, y + shift, marker, ms=2.5, color=color, alpha=alpha,
                label=label if shift == 0.0 else None)


def plot_phases(spec):
    """Three stacked phase panels plus the final paths over the lower
    adiabatic surface."""
    fig = plt.figure(figsize=(9.5, 10.5))
    gs = fig.add_gridspec(4, 1, height_ratios=(1, 1, 1, 1.6), hspace=0.35)
    ax_n, ax_el, ax_th = (fig.add_subplot(gs[k]) for k in range(3))
    ax_map = fig.add_subplot(gs[3])

    colors_exact = {"gamma_n": "black", "gamma_el": "tab:green",
                    "theta_ab": "deepskyblue"}
    colors_bo = {"gamma_n": "0.55", "theta_ab": "tab:red"}
    for run, label in zip(spec.runs, spec.labels):
        cols = run.phases()
        t = cols["t_fs"]
        ok = cols["valid"] & ~cols["path_masked"]
        is_bo = run.manifest["config_resolved"]["mode"] == "bo"
        palette = colors_bo if is_bo else colors_exact
        if not is_bo:
            _series_with_images(ax_el, t, cols["gamma_el"], ok,
                                palette["gamma_el"], label=label)
        _series_with_images(ax_n, t, cols["gamma_n"], ok, palette["gamma_n"],
                            label=label)
        _series_with_images(ax_th, t, cols["theta_ab"], ok,
                            palette["theta_ab"], label=label)
    for ax, name in ((ax_n, r"$\Gamma_n$"), (ax_el, r"$\Gamma_{el}$"),
                     (ax_th, r"$\Theta_{ab}$")):
        ax.set_ylabel(name + " (rad)")
        ax.set_ylim(-2.2 * np.pi, 2.2 * np.pi)
        ax.axhline(0, color="0.85", lw=0.5, zorder=0)
        ax.axhline(np.pi, color="0.85", lw=0.5, zorder=0)
        ax.axhline(-np.pi, color="0.85", lw=0.5, zorder=0)
        if ax.get_legend_handles_labels()[0]:
            ax.legend(loc="upper left", fontsize=7)
    ax_th.set_xlabel("t (fs)")

    surface = spec.runs[0].potential()
    extent = spec.runs[0].extent
    ax_map.imshow(surface, origin="lower", extent=extent, cmap="viridis")
    path_colors = ("cyan", "red", "orange", "white")
    for run, label, color in zip(spec.runs, spec.labels, path_colors):
        pts = run.final_path()
        ax_map.plot(pts[:, 0], pts[:, 1], color=color, lw=1.6, label=label)
        ax_map.annotate("a", pts[0], color=color, fontsize=10)
        ax_map.annotate("b", pts[-1], color=color, fontsize=10)
    ax_map.legend(fontsize=7)
    ax_map.set_title("final paths over the lower surface", fontsize=9)
    fig.savefig(spec.out, dpi=130)
    return fig


def render(spec):
    if spec.kind == "snapshots":
        return plot_snapshots(spec)
    return plot_phases(spec)

"""Readers for the simulator's documented output formats.

This package consumes runs purely through their files; the layouts below
mirror the format notes shipped with the simulator and are implemented
independently here (the plot suite computes no physics and imports none of
the simulation code).

All binary files are little-endian. Headers start with an 8-byte magic:

snapshot      b"CIPHSNP1" | u32 version | u32 nx | u32 ny | u32 ncomp
              | f64 t_au | ncomp * ny * nx complex128, row-major, x fast
observables   b"CIPHOBS1" | u32 version | u32 nx | u32 ny | u32 nplanes
              | f64 t_au | nplanes * ny * nx float64 planes in the order
              n, pi_x, pi_y, mask, [s_x, s_y, s_z]
potential     b"CIPHPOT1" | same header, one plane (lower surface)
path          b"CIPHPTH1" | u32 version | records of f64 t_au, u32 npts,
              npts * (f64 x, f64 y) until EOF
phase table   CSV: t_fs, gamma_n, gamma_el, gamma_el_pancharatnam,
              theta_ab, n_a, n_b, valid, path_masked
manifest      JSON with grid geometry and the per-run file index
"""

import json
import struct
from pathlib import Path

import numpy as np

FORMAT_VERSION = 1
PHASE_COLUMNS = ("t_fs", "gamma_n", "gamma_el", "gamma_el_pancharatnam",
                 "theta_ab", "n_a", "n_b", "valid", "path_masked")


class FormatError(ValueError):
    pass


def _read_header(fh, magic, path):
    got = fh.read(8)
    if got != magic:
        raise FormatError(f"{path}: bad magic {got!r} (expected {magic!r})")
    version, nx, ny, count, t_au = struct.unpack("<IIIId", fh.read(24))
    if version != FORMAT_VERSION:
        raise FormatError(f"{path}: unsupported format version {version}")
    return nx, ny, count, t_au


def read_snapshot(path):
    with open(path, "rb") as fh:
        nx, ny, ncomp, t_au = _read_header(fh, b"CIPHSNP1", path)
        raw = fh.read(16 * ncomp * ny * nx)
        if len(raw) != 16 * ncomp * ny * nx:
            raise FormatError(f"{path}: truncated snapshot")
        return np.frombuffer(raw, "<c16").reshape(ncomp, ny, nx), t_au


def read_observables(path):
    with open(path, "rb") as fh:
        nx, ny, nplanes, t_au = _read_header(fh, b"CIPHOBS1", path)
        raw = fh.read(8 * nplanes * ny * nx)
        if len(raw) != 8 * nplanes * ny * nx:
            raise FormatError(f"{path}: truncated observables")
        planes = np.frombuffer(raw, "<f8").reshape(nplanes, ny, nx)
    names = ["n", "pi_x", "pi_y", "mask", "s_x", "s_y", "s_z"][:nplanes]
    return dict(zip(names, planes)), t_au


def read_potential(path):
    with open(path, "rb") as fh:
        nx, ny, nplanes, _ = _read_header(fh, b"CIPHPOT1", path)
        raw = fh.read(8 * nplanes * ny * nx)
        return np.frombuffer(raw, "<f8").reshape(nplanes, ny, nx)[0]


def read_path_file(path):
    out = []
    with open(path, "rb") as fh:
        if fh.read(8) != b"CIPHPTH1":
            raise FormatError(f"{path}: bad path-file magic")
        (version,) = struct.unpack("<I", fh.read(4))
        if version != FORMAT_VERSION:
            raise FormatError(f"{path}: unsupported path version {version}")
        while True:
            head = fh.read(12)
            if not head:
                break
            t_au, npts = struct.unpack("<dI", head)
            raw = fh.read(16 * npts)
            out.append((t_au, np.frombuffer(raw, "<f8").reshape(npts, 2)))
    return out


def read_phase_table(path):
    with open(path) as fh:
        header = tuple(fh.readline().strip().split(","))
        if header != PHASE_COLUMNS:
            raise FormatError(f"{path}: unexpected phase-table header")
        rows = [line.strip().split(",") for line in fh if line.strip()]
    arr = (np.array(rows, dtype=float) if rows
           else np.zeros((0, len(PHASE_COLUMNS))))
    cols = {}
    for j, name in enumerate(PHASE_COLUMNS):
        col = arr[:, j] if len(arr) else np.zeros(0)
        cols[name] = col.astype(bool) if name in ("valid", "path_masked") else col
    return cols


class RunFiles:
    """A finished run, addressed through its manifest."""

    def __init__(self, manifest_path):
        self.manifest_path = Path(manifest_path)
        if not self.manifest_path.exists():
            raise FormatError(f"missing manifest: {manifest_path}")
        self.dir = self.manifest_path.parent
        with open(self.manifest_path) as fh:
            self.manifest = json.load(fh)
        self.grid = self.manifest["grid"]
        self.label = "{mode} ({case})".format(**self.manifest["config_resolved"])

    @property
    def extent(self):
        g = self.grid
        return (g["x0c"] - g["lx"] / 2, g["x0c"] + g["lx"] / 2,
                g["y0c"] - g["ly"] / 2, g["y0c"] + g["ly"] / 2)

    def snapshot_near(self, t_fs, tol_fs):
        aut_per_fs = 41.341373335182
        best, best_dt = None, np.inf
        for entry in self.manifest["snapshots"]:
            dt = abs(entry["t_au"] / aut_per_fs - t_fs)
            if dt < best_dt:
                best, best_dt = entry, dt
        if best is None or best_dt > tol_fs:
            raise FormatError(
                f"{self.dir}: no snapshot within {tol_fs} fs of t = {t_fs} fs")
        return best

    def observables_at(self, entry):
        if "obs_file" not in entry:
            raise FormatError(f"{self.dir}: snapshot entry has no obs_file")
        return read_observables(self.dir / entry["obs_file"])

    def path_at(self, t_au):
        for t, pts in read_path_file(self.dir / self.manifest["path_file"]):
            if abs(t - t_au) < 1e-9:
                return pts
        raise FormatError(f"{self.dir}: no path dump at t = {t_au} a.u.")

    def phases(self):
        return read_phase_table(self.dir / self.manifest["phase_table"])

    def potential(self):
        return read_potential(self.dir / self.manifest["potential_file"])

    def final_path(self):
        records = read_path_file(self.dir / self.manifest["path_file"])
        return records[-1][1]


FIGSPEC_KEYS = {
    "kind": str,          # snapshots | phases
    "manifests": str,     # comma-separated manifest paths
    "labels": str,        # optional comma-separated row labels
    "times_fs": str,      # comma-separated snapshot times (snapshots only)
    "log_range": str,     # two comma-separated log10 limits, default -6, 0
    "time_tol_fs": float, # snapshot matching tolerance (default half stride)
    "out": str,           # output image path
}


class FigureSpec:
    """Flat key = value figure description; unknown keys are rejected."""

    def __init__(self, kind, manifests, out, times_fs=(), labels=None,
                 log_range=(-6.0, 0.0), time_tol_fs=None, base_dir="."):
        if kind not in ("snapshots", "phases"):
            raise FormatError(f"kind must be snapshots|phases, got {kind!r}")
        if not manifests:
            raise FormatError("at least one manifest is required")
        self.kind = kind
        self.runs = [RunFiles(Path(base_dir) / m) for m in manifests]
        g0 = self.runs[0].grid
        for r in self.runs[1:]:
            if r.grid != g0:
                raise FormatError("manifests do not share grid dimensions")
        self.labels = labels or [r.label for r in self.runs]
        self.times_fs = list(times_fs)
        self.log_range = tuple(log_range)
        self.time_tol_fs = time_tol_fs
        self.out = Path(base_dir) / out

    @classmethod
    def from_file(cls, path):
        values = {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise FormatError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in FIGSPEC_KEYS:
                raise FormatError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = FIGSPEC_KEYS[key](value)
        def split(s):
            return [x.strip() for x in s.split(",") if x.strip()]
        if "kind" not in values or "out" not in values:
            raise FormatError(f"{path}: 'kind' and 'out' are required")
        kw = {
            "kind": values["kind"],
            "manifests": split(values.get("manifests", "")),
            "out": values["out"],
            "base_dir": Path(path).parent,
        }
        if "labels" in values:
            kw["labels"] = split(values["labels"])
        if "times_fs" in values:
            kw["times_fs"] = [float(x) for x in split(values["times_fs"])]
        if "log_range" in values:
            lo, hi = [float(x) for x in split(values["log_range"])]
            kw["log_range"] = (lo, hi)
        if "time_tol_fs" in values:
            kw["time_tol_fs"] = values["time_tol_fs"]
        return cls(**kw)

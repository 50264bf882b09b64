import json
import struct

import numpy as np
import pytest

from ciplot.formats import (FigureSpec, FormatError, RunFiles,
                            read_observables, read_path_file,
                            read_phase_table, read_potential, read_snapshot)


def write_snapshot_bytes(path, data, t_au):
    arr = np.asarray(data, dtype="<c16")
    ncomp, ny, nx = arr.shape
    with open(path, "wb") as fh:
        fh.write(b"CIPHSNP1")
        fh.write(struct.pack("<IIIId", 1, nx, ny, ncomp, t_au))
        fh.write(arr.tobytes())


def write_planes_bytes(path, magic, planes, t_au):
    arr = np.asarray(planes, dtype="<f8")
    nplanes, ny, nx = arr.shape
    with open(path, "wb") as fh:
        fh.write(magic)
        fh.write(struct.pack("<IIIId", 1, nx, ny, nplanes, t_au))
        fh.write(arr.tobytes())


def write_path_bytes(path, records):
    with open(path, "wb") as fh:
        fh.write(b"CIPHPTH1")
        fh.write(struct.pack("<I", 1))
        for t_au, pts in records:
            arr = np.asarray(pts, dtype="<f8")
            fh.write(struct.pack("<dI", t_au, len(arr)))
            fh.write(arr.tobytes())


PHASE_HEADER = ("t_fs,gamma_n,gamma_el,gamma_el_pancharatnam,theta_ab,"
                "n_a,n_b,valid,path_masked")


def test_read_snapshot(tmp_path):
    rng = np.random.default_rng(0)
    data = rng.normal(size=(2, 4, 6)) + 1j * rng.normal(size=(2, 4, 6))
    f = tmp_path / "snap.bin"
    write_snapshot_bytes(f, data, 7.5)
    back, t = read_snapshot(f)
    assert t == 7.5
    assert np.allclose(back, data)


def test_read_snapshot_rejects_bad_magic(tmp_path):
    f = tmp_path / "bad.bin"
    f.write_bytes(b"WRONGMAG" + b"\0" * 40)
    with pytest.raises(FormatError):
        read_snapshot(f)


def test_read_observables(tmp_path):
    planes = np.arange(7 * 3 * 5, dtype=float).reshape(7, 3, 5)
    f = tmp_path / "obs.bin"
    write_planes_bytes(f, b"CIPHOBS1", planes, 2.0)
    out, t = read_observables(f)
    assert t == 2.0
    assert list(out) == ["n", "pi_x", "pi_y", "mask", "s_x", "s_y", "s_z"]
    assert np.array_equal(out["s_z"], planes[6])


def test_read_potential(tmp_path):
    plane = np.linspace(-1, 1, 12).reshape(1, 3, 4)
    f = tmp_path / "pot.bin"
    write_planes_bytes(f, b"CIPHPOT1", plane, 0.0)
    assert np.array_equal(read_potential(f), plane[0])


def test_read_path_file(tmp_path):
    recs = [(0.0, [[0.0, 1.0], [2.0, 3.0]]),
            (20.5, [[1.0, 1.0], [2.0, 2.0], [3.0, 3.0]])]
    f = tmp_path / "path.bin"
    write_path_bytes(f, recs)
    out = read_path_file(f)
    assert len(out) == 2
    assert out[1][0] == 20.5
    assert out[1][1].shape == (3, 2)


def test_read_phase_table(tmp_path):
    f = tmp_path / "phases.csv"
    f.write_text(PHASE_HEADER + "\n0,0.1,0.2,0.21,0.3,1e-3,2e-3,1,0\n"
                 "0.5,0.4,3.1,3.1,3.0,1e-3,2e-3,0,1\n")
    cols = read_phase_table(f)
    assert cols["valid"].tolist() == [True, False]
    assert cols["gamma_el"][1] == 3.1


def test_read_phase_table_rejects_header(tmp_path):
    f = tmp_path / "phases.csv"
    f.write_text("nope,columns\n1,2\n")
    with pytest.raises(FormatError):
        read_phase_table(f)


def make_run_dir(tmp_path, name, nx=8):
    d = tmp_path / name
    d.mkdir()
    manifest = {
        "grid": {"nx": nx, "ny": nx, "lx": 20.0, "ly": 20.0, "x0c": 0.0,
                 "y0c": 0.0},
        "config_resolved": {"mode": "exact", "case": "a", "stride_steps": 41,
                            "dt": 0.5, "snapshot_every_samples": 1},
        "snapshots": [{"sample": 0, "t_au": 0.0, "file": "snap0.bin",
                       "obs_file": "obs0.bin"}],
        "phase_table": "phases.csv",
        "path_file": "path.bin",
        "potential_file": "potential.bin",
    }
    (d / "manifest.json").write_text(json.dumps(manifest))
    write_snapshot_bytes(d / "snap0.bin", np.ones((2, nx, nx), complex), 0.0)
    write_planes_bytes(d / "obs0.bin", b"CIPHOBS1",
                       np.ones((7, nx, nx)), 0.0)
    write_planes_bytes(d / "potential.bin", b"CIPHPOT1",
                       np.zeros((1, nx, nx)), 0.0)
    write_path_bytes(d / "path.bin", [(0.0, [[0.0, 0.0], [1.0, 1.0]])])
    (d / "phases.csv").write_text(
        PHASE_HEADER + "\n0,0,0,0,0,1e-3,1e-3,1,0\n")
    return d


def test_runfiles_and_figurespec(tmp_path):
    d1 = make_run_dir(tmp_path, "r1")
    d2 = make_run_dir(tmp_path, "r2")
    spec = FigureSpec("snapshots", [str(d1 / "manifest.json"),
                                    str(d2 / "manifest.json")],
                      out="fig.png", times_fs=[0.0], base_dir=tmp_path)
    assert len(spec.runs) == 2
    entry = spec.runs[0].snapshot_near(0.0, 1.0)
    planes, t = spec.runs[0].observables_at(entry)
    assert t == 0.0


def test_figurespec_grid_mismatch(tmp_path):
    d1 = make_run_dir(tmp_path, "r1", nx=8)
    d2 = make_run_dir(tmp_path, "r2", nx=16)
    with pytest.raises(FormatError):
        FigureSpec("snapshots", [str(d1 / "manifest.json"),
                                 str(d2 / "manifest.json")],
                   out="fig.png", base_dir=tmp_path)


def test_figurespec_missing_manifest(tmp_path):
    with pytest.raises(FormatError):
        FigureSpec("phases", [str(tmp_path / "nope" / "manifest.json")],
                   out="fig.png", base_dir=tmp_path)


def test_figurespec_file_parsing(tmp_path):
    d1 = make_run_dir(tmp_path, "r1")
    spec_file = tmp_path / "fig.spec"
    spec_file.write_text(f"""
    kind = snapshots        # panels
    manifests = r1/manifest.json
    times_fs = 0, 25, 50
    log_range = -5, 0
    out = out.png
    """)
    spec = FigureSpec.from_file(spec_file)
    assert spec.kind == "snapshots"
    assert spec.times_fs == [0.0, 25.0, 50.0]
    assert spec.log_range == (-5.0, 0.0)
    bad = tmp_path / "bad.spec"
    bad.write_text("kind = snapshots\nout = x.png\nwhatnot = 3\n")
    with pytest.raises(FormatError):
        FigureSpec.from_file(bad)
    missing = tmp_path / "missing.spec"
    missing.write_text("kind = phases\n")
    with pytest.raises(FormatError):
        FigureSpec.from_file(missing)


def test_snapshot_near_tolerance(tmp_path):
    d1 = make_run_dir(tmp_path, "r1")
    run = RunFiles(d1 / "manifest.json")
    with pytest.raises(FormatError):
        run.snapshot_near(50.0, tol_fs=1.0)

import json
import math

import numpy as np
import pytest

from impulse.config import CSV_HEADER
from impulse.errors import ExperimentError, SizeError
from impulse.imaging.bench import (
    BenchReport,
    ExperimentSpec,
    emit_csv,
    emit_plot_series,
    emit_table,
    read_csv,
    run_experiment,
    save_metadata,
    save_plot_data,
    save_tables,
)
from impulse.imaging.filters import mdb_filter, parse_filter
from impulse.imaging.image import GrayImage
from impulse.imaging.metrics import MetricsRow
from impulse.imaging.noise import NoiseSpec, derive_seed, inject_salt_pepper
from impulse.imaging.pgm import load_pgm, save_pgm

from .conftest import portrait_like

HEADER_LINE = ",".join(CSV_HEADER).encode() + b"\n"


def choices(*names):
    return [parse_filter(n) for n in names]


def spec_for(filters, levels, **kwargs):
    return ExperimentSpec(image_path="<memory>", filters=choices(*filters), noise_levels=levels, **kwargs)


def row(name="mdb", level=30, psnr=24.3714, **overrides):
    values = dict(pona=99.2028, posp=13.566, snr_restored=18.8912, snr_noisy=5.926, snri=12.9652)
    values.update(overrides)
    return MetricsRow(filter_name=name, noise_percent=level, psnr=psnr, **values)


# --- run_experiment ---


def test_mdb_on_constant_image_repairs_every_isolated_interior_impulse():
    img = GrayImage(np.full((8, 8), 128, dtype=np.uint8))
    spec = spec_for(["mdb"], [5], seed=42)
    report = run_experiment(spec, image=img)
    assert len(report.rows) == 1
    result = report.rows[0]

    noisy, mask = inject_salt_pepper(img, NoiseSpec(0.05, 0.5, derive_seed(42, 5, 0)))
    n = noisy.pixels.astype(int)
    repaired = 0
    for r, c in zip(*np.nonzero(mask.flags)):
        if 0 < r < 7 and 0 < c < 7:
            rest = np.delete(n[r - 1 : r + 2, c - 1 : c + 2].ravel(), 4)
            if n[r, c] < rest.min() or n[r, c] > rest.max():
                repaired += 1
    assert result.pona == pytest.approx(100.0 * repaired / mask.flags.sum())
    assert result.posp == 0.0


def test_row_count_and_order(smooth_image):
    spec = spec_for(["mdb", "median", "cwm:2"], [20, 5, 10], seed=3)
    report = run_experiment(spec, image=smooth_image)
    assert [(r.filter_name, r.noise_percent) for r in report.rows] == [
        ("mdb", 5.0),
        ("mdb", 10.0),
        ("mdb", 20.0),
        ("median", 5.0),
        ("median", 10.0),
        ("median", 20.0),
        ("cwm:2", 5.0),
        ("cwm:2", 10.0),
        ("cwm:2", 20.0),
    ]


def test_runs_are_byte_identical(smooth_image):
    spec = spec_for(["median", "cwm:1", "mdb"], [5, 30], seed=11, trials=2)
    first = emit_csv(run_experiment(spec, image=smooth_image))
    second = emit_csv(run_experiment(spec, image=smooth_image))
    assert first == second


def test_adding_a_level_keeps_other_levels(smooth_image):
    small = run_experiment(spec_for(["mdb"], [10], seed=5), image=smooth_image)
    large = run_experiment(spec_for(["mdb"], [5, 10, 30], seed=5), image=smooth_image)
    assert small.rows[0] == large.rows[1]


def test_filters_share_the_noisy_image(smooth_image):
    # snr_noisy depends only on the corrupted image, so it must agree across filters
    report = run_experiment(spec_for(["median", "cwm:1", "mdb"], [15], seed=8), image=smooth_image)
    assert len({r.snr_noisy for r in report.rows}) == 1


def test_trials_are_averaged(smooth_image):
    report = run_experiment(spec_for(["mdb"], [10], seed=1, trials=3), image=smooth_image)
    assert report.rows[0].trials == 3
    assert report.metadata["trials"] == 3
    assert len(report.metadata["derived_seeds"]) == 3


def test_spoilage_nesting_and_monotonic_psnr(smooth_image):
    levels = [5, 15, 20, 25, 30]
    for seed in (1, 2):
        report = run_experiment(spec_for(["cwm:1", "cwm:2", "mdb"], levels, seed=seed), image=smooth_image)
        cells = {(r.filter_name, r.noise_percent): r for r in report.rows}
        for level in levels:
            assert cells[("mdb", level)].posp <= cells[("cwm:2", level)].posp <= cells[("cwm:1", level)].posp
            if level >= 20:
                assert cells[("cwm:1", level)].pona > cells[("cwm:2", level)].pona
        for name in ("cwm:2", "mdb"):
            series = [cells[(name, level)].psnr for level in levels]
            assert series == sorted(series, reverse=True)
        for r in report.rows:
            assert abs(r.snri - (r.snr_restored - r.snr_noisy)) <= 1e-9


def test_full_density_records_undefined_posp_as_nan():
    report = run_experiment(spec_for(["median", "mdb"], [100], seed=1), image=portrait_like(16))
    for r in report.rows:
        assert math.isnan(r.posp)
        assert 0.0 <= r.pona <= 100.0
        assert math.isfinite(r.psnr)
    data = emit_csv(report)
    assert data.splitlines()[1].split(b",")[3] == b"nan"
    assert all(math.isnan(r.posp) for r in read_csv(data))


def test_tiny_image_without_impulses_records_undefined_pona_as_nan():
    img = GrayImage(np.full((3, 3), 128, dtype=np.uint8))
    report = run_experiment(spec_for(["median", "mdb"], [5]), image=img)
    for r in report.rows:
        assert math.isnan(r.pona)
        assert r.posp == 0.0
        assert (r.psnr, r.snri) == (math.inf, 0.0)
    assert emit_table(report, "pona") == b"noise_percent,median,mdb\n5,nan,nan\n"


def test_saves_first_trial_images(tmp_path, smooth_image):
    out = tmp_path / "images"
    spec = spec_for(["cwm:1", "mdb"], [5, 12.5], seed=4, trials=2)
    run_experiment(spec, image=smooth_image, image_dir=out)
    assert sorted(p.name for p in out.iterdir()) == [
        "cwm-k1_12.5.pgm",
        "cwm-k1_5.pgm",
        "mdb_12.5.pgm",
        "mdb_5.pgm",
        "noisy_12.5.pgm",
        "noisy_5.pgm",
    ]
    noisy, _ = inject_salt_pepper(smooth_image, NoiseSpec(0.05, 0.5, derive_seed(4, 5, 0)))
    assert load_pgm(out / "noisy_5.pgm") == noisy
    assert load_pgm(out / "mdb_5.pgm") == mdb_filter(noisy)


def test_metadata(smooth_image):
    report = run_experiment(spec_for(["mdb"], [5], seed=9, salt_ratio=0.25), image=smooth_image)
    meta = report.metadata
    assert (meta["width"], meta["height"]) == (96, 96)
    assert meta["seed"] == 9
    assert meta["salt_ratio"] == 0.25
    assert meta["derived_seeds"] == {"5/0": derive_seed(9, 5, 0)}


def test_reads_image_from_disk(tmp_path, smooth_image):
    path = tmp_path / "clean.pgm"
    save_pgm(path, smooth_image)
    spec = ExperimentSpec(image_path=str(path), filters=choices("mdb"), noise_levels=[10])
    in_memory = run_experiment(spec, image=smooth_image)
    assert run_experiment(spec).rows == in_memory.rows


def test_missing_image(tmp_path):
    spec = ExperimentSpec(image_path=str(tmp_path / "nope.pgm"), filters=choices("mdb"))
    with pytest.raises(ExperimentError):
        run_experiment(spec)


def test_undersized_image():
    with pytest.raises(SizeError):
        run_experiment(spec_for(["mdb"], [5]), image=GrayImage(np.zeros((2, 2), dtype=np.uint8)))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(filters=[]),
        dict(noise_levels=[0]),
        dict(noise_levels=[101]),
        dict(noise_levels=[]),
        dict(noise_levels=[5, 5]),
        dict(trials=0),
        dict(passes=0),
        dict(salt_ratio=1.5),
        dict(seed=-1),
        dict(filters=choices("mdb", "mdb")),
    ],
)
def test_invalid_experiment(kwargs):
    base = dict(image_path="x.pgm", filters=choices("mdb"))
    base.update(kwargs)
    with pytest.raises(ExperimentError):
        ExperimentSpec(**base)


def test_default_experiment():
    spec = ExperimentSpec(image_path="x.pgm", filters=choices("mdb"))
    assert spec.noise_levels == (5.0, 10.0, 15.0, 20.0, 25.0, 30.0)
    assert (spec.trials, spec.passes, spec.salt_ratio) == (1, 1, 0.5)


# --- serialization ---


def test_csv_empty_report_is_header_only():
    assert emit_csv(BenchReport(rows=[])) == HEADER_LINE


def test_csv_row_formatting():
    data = emit_csv(BenchReport(rows=[row()]))
    assert data == HEADER_LINE + b"mdb,30,99.2028,13.5660,18.8912,5.9260,12.9652,24.3714\n"


def test_csv_infinity_and_fractional_level():
    data = emit_csv(BenchReport(rows=[row(level=12.5, psnr=math.inf, snri=-math.inf)]))
    assert data.endswith(b"mdb,12.5,99.2028,13.5660,18.8912,5.9260,-inf,inf\n")


def test_csv_without_header():
    assert emit_csv(BenchReport(rows=[row()]), header=False).startswith(b"mdb,30,")


def test_csv_parses_back():
    rows = [row(), row(name="cwm:1", level=5, psnr=math.inf, pona=98.75623)]
    back = read_csv(emit_csv(BenchReport(rows=rows)))
    assert [r.filter_name for r in back] == ["mdb", "cwm:1"]
    assert back[1].psnr == math.inf
    assert back[1].pona == pytest.approx(98.7562, abs=1e-9)
    assert back[0].noise_percent == 30.0


def small_report():
    return BenchReport(
        rows=[
            row(name="cwm:1", level=5, psnr=27.4687),
            row(name="cwm:1", level=10, psnr=26.5805),
            row(name="mdb", level=5, psnr=28.4385),
            row(name="mdb", level=10, psnr=27.7254),
        ],
        metadata={"seed": 42},
    )


def test_pivot_table():
    assert emit_table(small_report(), "psnr") == (
        b"noise_percent,cwm:1,mdb\n5,27.4687,28.4385\n10,26.5805,27.7254\n"
    )


def test_plot_series():
    assert emit_plot_series(small_report(), "psnr_vs_noise", "mdb") == (
        b"noise_percent,psnr\n5,28.4385\n10,27.7254\n"
    )


def test_output_files(tmp_path):
    report = small_report()
    tables = save_tables(tmp_path / "tables", report)
    assert sorted(p.name for p in tables) == sorted(
        f"{m}.csv" for m in ("pona", "posp", "snr_restored", "snr_noisy", "snri", "psnr")
    )
    series = save_plot_data(tmp_path / "plots", report)
    assert sorted(p.name for p in series) == [
        "pona_vs_noise_cwm-k1.csv",
        "pona_vs_noise_mdb.csv",
        "psnr_vs_noise_cwm-k1.csv",
        "psnr_vs_noise_mdb.csv",
    ]
    save_metadata(tmp_path / "meta.json", report)
    assert json.loads((tmp_path / "meta.json").read_text()) == {"seed": 42}


# --- reproduction against a public 256x256 LENA (skipped unless IMPULSE_LENA is set) ---


def test_lena_reproduction_properties(lena):
    levels = [5, 10, 15, 20, 25, 30]
    for seed in range(1, 6):
        report = run_experiment(spec_for(["cwm:1", "cwm:2", "mdb"], levels, seed=seed), image=lena)
        cells = {(r.filter_name, r.noise_percent): r for r in report.rows}
        for level in levels:
            mdb, k2, k1 = (cells[(n, level)] for n in ("mdb", "cwm:2", "cwm:1"))
            assert mdb.posp < k2.posp < k1.posp
            if level >= 20:
                assert k1.pona > k2.pona
        for name in ("cwm:1", "cwm:2", "mdb"):
            series = [cells[(name, level)].psnr for level in levels]
            assert series == sorted(series, reverse=True)
        for r in report.rows:
            assert abs(r.snri - (r.snr_restored - r.snr_noisy)) <= 1e-9

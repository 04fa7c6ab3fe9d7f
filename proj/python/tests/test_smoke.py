import json
import math
import subprocess


def test_rng_replays(lab):
    key = lab.StreamKey(42, 7, lab.NoisePurpose.Dynamics)
    a = lab.NoiseStream(key)
    b = lab.NoiseStream(key)
    assert [a.next() for _ in range(100)] == [b.next() for _ in range(100)]


def test_grid_and_sampling(lab):
    grid = lab.make_grid(2.0, 2.0, 0.1)
    assert grid.x_at(grid.origin_index) == 0.0
    stream = lab.NoiseStream(lab.StreamKey(1, 0, lab.NoisePurpose.InitialData))
    pair = lab.sample_nu_theta(stream, grid, 1.0)
    assert pair.f_minus.values[grid.origin_index] == 0.0
    assert pair.f_plus.values[grid.origin_index] == 0.0
    gaps = [p - m for p, m in zip(pair.f_plus.values, pair.f_minus.values)]
    assert all(b >= a - 1e-12 for a, b in zip(gaps, gaps[1:]))
    assert lab.hat_nu_weight(pair) > 0.0


def test_evolve_and_shock(lab):
    grid = lab.make_grid(3.0, 3.0, 0.1)
    fm, fp = lab.flat_pair(1.0, grid)
    st = lab.CoupledState()
    st.h_minus = lab.to_field(fm, -1.0, -1.0)
    st.h_plus = lab.to_field(fp, 1.0, 1.0)
    cfg = lab.SchemeConfig()
    cfg.record_times = [0.4]
    traj = lab.evolve_coupled(
        st, lab.StreamKey(5, 0, lab.NoisePurpose.Dynamics), 0.4, cfg
    )
    snap = traj.snapshots[-1]
    assert math.isclose(snap.t(), 0.4, rel_tol=1e-12)
    rec = lab.find_shock(snap)
    assert abs(rec.b) < 3.0
    assert lab.find_shock(st).b == 0.0


def test_stats_anchors(lab):
    assert abs(lab.gaussian_cdf(0.0, 0.0, 1.0) - 0.5) < 1e-14
    assert abs(lab.gamma_cdf(1.0, 1.0, 1.0) - (1.0 - math.exp(-1.0))) < 1e-12
    table = lab.tw_goe_table()
    assert abs(table.mean() + 1.2065) < 2e-3
    stream = lab.NoiseStream(lab.StreamKey(9, 0, lab.NoisePurpose.Dynamics))
    draws = stream.gaussian_slice(5000)
    assert lab.ks_distance_fn(draws, lambda x: lab.gaussian_cdf(x, 0.0, 1.0)) < 0.03


def test_halfline_closed_form(lab):
    v = lab.zero_noise_restriction_ratio(1.0, 1.0, 0.5)
    assert 0.0 < v < 1.0
    assert lab.zero_noise_restriction_ratio(1.0, 0.0, 0.5) == 0.0


def test_experiment_runs(lab):
    cfg = lab.ExperimentConfig()
    cfg.scenario = lab.Scenario.Stationary
    cfg.theta = 1.0
    cfg.times = [0.5]
    cfg.dx = 0.1
    cfg.replicas = 12
    cfg.seed = 7
    cfg.workers = 1
    res = lab.run_experiment(cfg)
    assert len(res.records) == 12
    assert res.summaries[0].var_j0 > 0.0
    assert res.target


def test_cli_stats_roundtrip(cli_path, tmp_path):
    out = subprocess.run([cli_path, "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "experiment" in out.stdout

    table = tmp_path / "goe.csv"
    out = subprocess.run(
        [cli_path, "stats", "table", "--which", "tw-goe", "--out", str(table)],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0, out.stderr
    assert table.exists()


def test_cli_sample(cli_path, tmp_path):
    out_dir = tmp_path / "samples"
    out = subprocess.run(
        [
            cli_path, "sample", "--law", "nu", "--theta", "1.0",
            "--n-samples", "3", "--seed", "11",
            "--output-dir", str(out_dir),
        ],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0, out.stderr
    summary = json.loads((out_dir / "summary.json").read_text())
    assert summary["law"] == "nu"
    assert len(summary["samples"]) == 3

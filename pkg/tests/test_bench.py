"""PRNG, random-operator generation, benchmark runner, CSV, slope fits."""

import csv
import math
import subprocess
import sys

import pytest

from paulialg import (
    BenchConfig,
    BenchRecord,
    SplitMix64,
    derive_seed,
    fit_scaling,
    random_hamiltonian,
    run_benchmark,
)
from paulialg.bench import CSV_HEADER, ConfigError


# ---- splitmix64 ----


def test_splitmix64_reference_vector():
    # first outputs of the reference stream seeded with 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_splitmix64_wraps_seed():
    assert SplitMix64(2**64).next_u64() == SplitMix64(0).next_u64()


def test_next_float_range():
    rng = SplitMix64(123)
    for _ in range(1000):
        v = rng.next_float()
        assert 0.0 <= v < 1.0


def test_derive_seed_deterministic_and_tag_sensitive():
    assert derive_seed(7, 1, 2, 3) == derive_seed(7, 1, 2, 3)
    assert derive_seed(7, 1, 2, 3) != derive_seed(7, 1, 2, 4)
    assert derive_seed(7, 1, 2, 3) != derive_seed(8, 1, 2, 3)


# ---- random_hamiltonian ----


def test_same_seed_identical_operator():
    a = random_hamiltonian(20, 50, SplitMix64(42))
    b = random_hamiltonian(20, 50, SplitMix64(42))
    assert a == b  # exact keys and coefficients


def test_single_term_contract():
    for seed in range(20):
        h = random_hamiltonian(1, 1, SplitMix64(seed))
        assert len(h) <= 1
        for key, c in h.terms.items():
            assert key[0] in (0, 1) and key[1] in (0, 1)
            assert abs(c) <= 1.0
            assert c.imag == 0.0


def test_letter_frequencies_uniform():
    # 1e5 sites: each letter count within 3 sigma of n/4,
    # sigma^2 = n * (1/4) * (3/4)
    num_qubits, num_terms = 100, 1000
    h = random_hamiltonian(num_qubits, num_terms, SplitMix64(1234))
    assert len(h) == num_terms  # collisions are essentially impossible here
    counts = {"I": 0, "X": 0, "Y": 0, "Z": 0}
    for (x, y) in h.terms:
        nx = x & ~y
        ny = y & ~x
        nz = x & y
        counts["X"] += nx.bit_count()
        counts["Y"] += ny.bit_count()
        counts["Z"] += nz.bit_count()
    total = num_qubits * num_terms
    counts["I"] = total - counts["X"] - counts["Y"] - counts["Z"]
    sigma = math.sqrt(total * 0.25 * 0.75)
    for letter, count in counts.items():
        assert abs(count - total / 4) <= 3 * sigma, (letter, count)


def test_complex_coeffs_flag():
    h = random_hamiltonian(5, 30, SplitMix64(7), complex_coeffs=True)
    assert any(c.imag != 0 for c in h.terms.values())
    for c in h.terms.values():
        assert abs(c.real) <= 1.0 and abs(c.imag) <= 1.0


def test_duplicates_merge():
    # with a single qubit only 4 distinct words exist
    h = random_hamiltonian(1, 500, SplitMix64(3))
    assert len(h) <= 4


def test_bad_arguments():
    with pytest.raises(ValueError):
        random_hamiltonian(0, 5, SplitMix64(0))
    with pytest.raises(ValueError):
        random_hamiltonian(5, 0, SplitMix64(0))


# ---- fit_scaling ----


def _records(pairs):
    return [BenchRecord("op-mul-size", p, 0, t, 0, 0) for p, t in pairs]


def test_fit_exact_quadratic():
    slope = fit_scaling(_records([(10, 100.0), (20, 400.0), (40, 1600.0), (80, 6400.0)]))
    assert abs(slope - 2.0) <= 1e-9


def test_fit_exact_linear():
    slope = fit_scaling(_records([(10, 10.0), (20, 20.0), (40, 40.0)]))
    assert abs(slope - 1.0) <= 1e-9


def test_fit_uses_mean_over_reps():
    records = _records([(10, 90.0), (10, 110.0), (20, 380.0), (20, 420.0), (40, 1600.0)])
    assert abs(fit_scaling(records) - 2.0) <= 0.01


def test_fit_needs_three_params():
    with pytest.raises(ValueError):
        fit_scaling(_records([(10, 1.0), (20, 2.0)]))


# ---- run_benchmark ----


def test_record_counts_and_csv(tmp_path):
    out = tmp_path / "bench.csv"
    cfg = BenchConfig(
        mode="op-mul-size", sizes=[10, 20], string_length=16,
        repetitions=2, seed=5, out_path=str(out),
    )
    records = run_benchmark(cfg)
    assert len(records) == 4
    assert all(r.seconds > 0 for r in records)
    with open(out, newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == list(CSV_HEADER)
    assert len(rows) == 5
    for rec, row in zip(records, rows[1:]):
        assert row[0] == rec.mode
        assert int(row[1]) == rec.param
        assert int(row[4]) == rec.out_terms <= rec.param**2
        assert int(row[5]) == rec.peak_terms >= rec.out_terms


def test_benchmark_reproducible_inputs(tmp_path):
    cfg = dict(mode="op-mul-length", sizes=[8, 12], ham_size=15, repetitions=2, seed=77)
    r1 = run_benchmark(BenchConfig(out_path=str(tmp_path / "a.csv"), **cfg))
    r2 = run_benchmark(BenchConfig(out_path=str(tmp_path / "b.csv"), **cfg))
    rows1 = [(r.mode, r.param, r.rep, r.out_terms, r.peak_terms) for r in r1]
    rows2 = [(r.mode, r.param, r.rep, r.out_terms, r.peak_terms) for r in r2]
    assert rows1 == rows2


def test_benchmark_dla_modes():
    records = run_benchmark(BenchConfig(mode="dla-closure", sizes=[2, 3], repetitions=1, seed=0))
    assert [r.out_terms for r in records] == [6, 15]
    records = run_benchmark(BenchConfig(mode="dla-structconst", sizes=[2], repetitions=1, seed=0))
    assert records[0].out_terms == 24  # 12 anticommuting pairs, both orientations


def test_benchmark_threads_same_outputs():
    base = dict(mode="op-mul-size", sizes=[12], string_length=10, repetitions=1, seed=3)
    seq = run_benchmark(BenchConfig(**base))
    par = run_benchmark(BenchConfig(threads=4, **base))
    assert [(r.out_terms, r.peak_terms) for r in seq] == [(r.out_terms, r.peak_terms) for r in par]


def test_config_validation():
    with pytest.raises(ConfigError):
        run_benchmark(BenchConfig(mode="nope", sizes=[1]))
    with pytest.raises(ConfigError):
        run_benchmark(BenchConfig(mode="op-mul-size", sizes=[]))
    with pytest.raises(ConfigError):
        run_benchmark(BenchConfig(mode="op-mul-size", sizes=[10], repetitions=0))
    with pytest.raises(ConfigError):
        run_benchmark(BenchConfig(mode="dla-closure", sizes=[1]))
    with pytest.raises(ConfigError):
        run_benchmark(BenchConfig(mode="op-mul-size", sizes=[5], out_path="/nonexistent-dir/x.csv"))


# ---- CLI ----


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "paulialg.bench", *args],
        capture_output=True, text=True,
    )


def test_cli_success(tmp_path):
    out = tmp_path / "r.csv"
    proc = _run_cli(
        "--mode", "op-mul-size", "--sizes", "5,10", "--length", "8",
        "--reps", "1", "--seed", "9", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    assert out.exists()
    assert "param=5" in proc.stdout


def test_cli_bad_mode_exits_2(tmp_path):
    proc = _run_cli("--mode", "bogus", "--sizes", "5", "--out", str(tmp_path / "x.csv"))
    assert proc.returncode == 2


def test_cli_bad_config_exits_2(tmp_path):
    proc = _run_cli(
        "--mode", "op-mul-size", "--sizes", "5", "--reps", "0",
        "--out", str(tmp_path / "x.csv"),
    )
    assert proc.returncode == 2
    assert "repetitions" in proc.stderr


def test_cli_unwritable_out_exits_2():
    proc = _run_cli("--mode", "op-mul-size", "--sizes", "5", "--length", "4",
                    "--reps", "1", "--out", "/nonexistent-dir/x.csv")
    assert proc.returncode == 2
    assert "cannot write" in proc.stderr


def test_cli_warmup_and_slope_output(tmp_path):
    out = tmp_path / "r.csv"
    proc = _run_cli(
        "--mode", "op-mul-size", "--sizes", "4,8,16", "--length", "6",
        "--reps", "2", "--seed", "1", "--warmup", "1", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    assert "log-log slope" in proc.stdout
    with open(out, newline="") as f:
        rows = list(csv.reader(f))
    assert len(rows) == 1 + 3 * 2  # warmup reps are not recorded

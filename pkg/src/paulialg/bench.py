"""Benchmark harness: random-operator generation, timed runs, CSV output,
and log-log scaling fits.

Randomness comes from splitmix64 so that any implementation of the same
scheme reproduces identical operators byte for byte:

    state' = state + 0x9E3779B97F4A7C15            (mod 2^64)
    z = state'
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9       (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB       (mod 2^64)
    output = z ^ (z >> 31)

Operator generation, per term: qubit sites are drawn 32 per 64-bit
output, two bits per site starting at the least significant bit, with
site code 0/1/2/3 meaning I/X/Y/Z (bit 0 of the code is the x bit, bit 1
the y bit); leftover high bits of the last site draw are discarded. The
coefficient follows as one draw mapped through (output >> 11) * 2^-53
onto [0, 1) and scaled to [-1, 1); with complex coefficients enabled the
imaginary part is one further draw. Duplicate words merge by addition.

Per-repetition seeds derive from the root seed by absorbing
(mode_index, parameter, repetition, input_index) tags one splitmix64
step at a time. Timing covers only the measured operation; generation
is done before the clock starts.

CSV schema: ``mode,param,rep,seconds,out_terms,peak_terms``.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .dla import build_so2n_generators, lie_closure, structure_constants
from .operator import PauliOperator, multiply_with_stats

__all__ = [
    "SplitMix64",
    "derive_seed",
    "random_hamiltonian",
    "BenchConfig",
    "BenchRecord",
    "run_benchmark",
    "fit_scaling",
    "main",
    "MODES",
    "CSV_HEADER",
]

_M64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

MODES = ("op-mul-size", "op-mul-length", "dla-closure", "dla-structconst")
CSV_HEADER = ("mode", "param", "rep", "seconds", "out_terms", "peak_terms")


class SplitMix64:
    """splitmix64 stream with the constants documented in the module docstring."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _M64
        z = ((z ^ (z >> 27)) * _MIX2) & _M64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def derive_seed(seed: int, *tags: int) -> int:
    """Deterministic child seed: absorb each tag with one splitmix64 step."""
    s = seed & _M64
    for t in tags:
        s = SplitMix64(s ^ (t & _M64)).next_u64()
    return s


def random_hamiltonian(
    num_qubits: int,
    num_terms: int,
    rng: SplitMix64,
    complex_coeffs: bool = False,
) -> PauliOperator:
    """Random operator: every site uniform over {I, X, Y, Z}, coefficients
    uniform in [-1, 1); duplicate words merge, so the term count can come
    out below num_terms."""
    if num_qubits < 1 or num_terms < 1:
        raise ValueError("num_qubits and num_terms must be >= 1")
    acc: dict = {}
    for _ in range(num_terms):
        x = 0
        y = 0
        for base in range(0, num_qubits, 32):
            w = rng.next_u64()
            for k in range(min(32, num_qubits - base)):
                code = (w >> (2 * k)) & 3
                if code & 1:
                    x |= 1 << (base + k)
                if code & 2:
                    y |= 1 << (base + k)
        re = 2.0 * rng.next_float() - 1.0
        if complex_coeffs:
            c = complex(re, 2.0 * rng.next_float() - 1.0)
        else:
            c = complex(re, 0.0)
        key = (x, y)
        prev = acc.get(key)
        acc[key] = c if prev is None else prev + c
    return PauliOperator._raw(num_qubits, {k: c for k, c in acc.items() if c != 0})


class ConfigError(ValueError):
    """Invalid benchmark configuration."""


@dataclass
class BenchConfig:
    mode: str
    sizes: list[int]
    string_length: int = 500
    ham_size: int = 500
    repetitions: int = 1
    seed: int = 0
    out_path: Optional[str] = None
    threads: int = 1
    complex_coeffs: bool = False
    warmup: int = 0

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r} (expected one of {', '.join(MODES)})")
        if not self.sizes:
            raise ConfigError("at least one parameter value is required")
        if any(s < 1 for s in self.sizes):
            raise ConfigError("all parameter values must be >= 1")
        if self.mode.startswith("dla") and any(s < 2 for s in self.sizes):
            raise ConfigError("dla modes need parameter values >= 2")
        if self.string_length < 1 or self.ham_size < 1:
            raise ConfigError("string length and hamiltonian size must be >= 1")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be >= 1")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        if self.warmup < 0:
            raise ConfigError("warmup must be >= 0")
        if not 0 <= self.seed <= _M64:
            raise ConfigError("seed must fit in 64 bits")


@dataclass
class BenchRecord:
    mode: str
    param: int
    rep: int
    seconds: float
    out_terms: int
    peak_terms: int

    def row(self) -> tuple:
        return (self.mode, self.param, self.rep, repr(self.seconds), self.out_terms, self.peak_terms)


def _one_run(cfg: BenchConfig, param: int, rep: int) -> tuple[float, int, int]:
    """Generate inputs (untimed), run and time the measured operation."""
    mode_id = MODES.index(cfg.mode)
    if cfg.mode in ("op-mul-size", "op-mul-length"):
        if cfg.mode == "op-mul-size":
            num_qubits, num_terms = cfg.string_length, param
        else:
            num_qubits, num_terms = param, cfg.ham_size
        a = random_hamiltonian(
            num_qubits, num_terms,
            SplitMix64(derive_seed(cfg.seed, mode_id, param, rep, 0)),
            cfg.complex_coeffs,
        )
        b = random_hamiltonian(
            num_qubits, num_terms,
            SplitMix64(derive_seed(cfg.seed, mode_id, param, rep, 1)),
            cfg.complex_coeffs,
        )
        t0 = time.perf_counter()
        out, peak = multiply_with_stats(a, b, threads=cfg.threads)
        dt = time.perf_counter() - t0
        return dt, len(out.terms), peak
    if cfg.mode == "dla-closure":
        gens = build_so2n_generators(param)
        t0 = time.perf_counter()
        basis = lie_closure(gens)
        dt = time.perf_counter() - t0
        return dt, len(basis), len(basis)
    # dla-structconst
    basis = lie_closure(build_so2n_generators(param))
    t0 = time.perf_counter()
    constants = structure_constants(basis)
    dt = time.perf_counter() - t0
    return dt, len(constants.entries), len(constants.entries)


def run_benchmark(cfg: BenchConfig) -> list[BenchRecord]:
    """Run all (parameter, repetition) cells; write CSV if configured."""
    cfg.validate()
    records: list[BenchRecord] = []
    for param in cfg.sizes:
        for rep in range(-cfg.warmup, cfg.repetitions):
            dt, out_terms, peak = _one_run(cfg, param, rep)
            if rep >= 0:
                records.append(
                    BenchRecord(cfg.mode, param, rep, max(dt, 1e-9), out_terms, peak)
                )
    if cfg.out_path:
        try:
            with open(cfg.out_path, "w", encoding="utf-8", newline="") as f:
                writer = csv.writer(f)
                writer.writerow(CSV_HEADER)
                for rec in records:
                    writer.writerow(rec.row())
        except OSError as exc:
            raise ConfigError(f"cannot write output file {cfg.out_path!r}: {exc}") from exc
    return records


def fit_scaling(records: Iterable[BenchRecord]) -> float:
    """Least-squares slope of log(mean seconds) against log(parameter)."""
    by_param: dict[int, list[float]] = {}
    for rec in records:
        by_param.setdefault(rec.param, []).append(rec.seconds)
    if len(by_param) < 3:
        raise ValueError("need at least 3 distinct parameter values to fit a slope")
    xs = []
    ys = []
    for param, times in sorted(by_param.items()):
        xs.append(math.log(param))
        ys.append(math.log(sum(times) / len(times)))
    x_mean = sum(xs) / len(xs)
    y_mean = sum(ys) / len(ys)
    sxx = sum((x - x_mean) ** 2 for x in xs)
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    return sxy / sxx


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r} (expected e.g. 100,200,400)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench",
        description="Time Pauli-operator products and Lie-algebra closures over a parameter sweep.",
    )
    parser.add_argument("--mode", required=True, choices=MODES)
    parser.add_argument("--sizes", required=True, type=_parse_sizes, metavar="A,B,C",
                        help="comma-separated parameter values swept by the chosen mode")
    parser.add_argument("--length", type=int, default=500, dest="length",
                        help="fixed Pauli string length (qubit count) for op-mul-size")
    parser.add_argument("--ham-size", type=int, default=500, dest="ham_size",
                        help="fixed term count for op-mul-length")
    parser.add_argument("--reps", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True, help="CSV output path")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--complex-coeffs", action="store_true")
    parser.add_argument("--warmup", type=int, default=0, metavar="K",
                        help="untimed repetitions before each measured cell")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = BenchConfig(
        mode=args.mode,
        sizes=args.sizes,
        string_length=args.length,
        ham_size=args.ham_size,
        repetitions=args.reps,
        seed=args.seed,
        out_path=args.out,
        threads=args.threads,
        complex_coeffs=args.complex_coeffs,
        warmup=args.warmup,
    )
    try:
        records = run_benchmark(cfg)
    except ConfigError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return 2
    by_param: dict[int, list[float]] = {}
    for rec in records:
        by_param.setdefault(rec.param, []).append(rec.seconds)
    for param, times in sorted(by_param.items()):
        mean = sum(times) / len(times)
        print(f"{cfg.mode} param={param} reps={len(times)} mean={mean:.6g}s")
    if len(by_param) >= 3:
        print(f"log-log slope: {fit_scaling(records):.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Monte Carlo and exact logical-failure rates, plus measurement-count
comparisons against the Shor-style construction.

Randomness is counter based: trial t of a run with master seed s draws its
uniforms from a Philox stream keyed by s at block offset t * blocks_per_trial.
A trial's error pattern is therefore a pure function of (seed, trial index),
so results are identical no matter how trials are batched or spread over
workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .classical import LinearCode
from .builder import SubsystemCode
from .pauli import PauliGrid
from .recovery import recover

_MAX_SEED = (1 << 64) - 1
_EXACT_MAX_N = 20
_TABLE_ARRAY_MAX_BITS = 20


@dataclass(frozen=True)
class NoiseModel:
    """A single-qubit Pauli channel applied independently per site.

    Use the factory classmethods; ``p`` is the total error probability for
    the single-parameter kinds, ``p_x``/``p_z`` the marginals for
    ``independent_xz``.
    """

    kind: str
    p: float = 0.0
    p_x: float = 0.0
    p_z: float = 0.0

    @staticmethod
    def _check(p: float, label: str = "p"):
        if not (0.0 <= p <= 1.0):
            raise ValueError(f"{label}={p} is not a probability")

    @classmethod
    def depolarizing(cls, p: float) -> "NoiseModel":
        """X, Y, Z each with probability p/3."""
        cls._check(p)
        return cls("depolarizing", p=p)

    @classmethod
    def x_only(cls, p: float) -> "NoiseModel":
        cls._check(p)
        return cls("x_only", p=p)

    @classmethod
    def z_only(cls, p: float) -> "NoiseModel":
        cls._check(p)
        return cls("z_only", p=p)

    @classmethod
    def independent_xz(cls, p_x: float, p_z: float) -> "NoiseModel":
        cls._check(p_x, "p_x")
        cls._check(p_z, "p_z")
        return cls("independent_xz", p_x=p_x, p_z=p_z)

    @property
    def draws_per_site(self) -> int:
        return 2 if self.kind == "independent_xz" else 1

    def errors_from_uniforms(self, u: np.ndarray, n: int) -> tuple:
        """Map per-trial uniforms (shape (t, draws)) to (z, x) bit arrays."""
        if self.kind == "x_only":
            return np.zeros_like(u, dtype=np.uint8), (u < self.p).astype(np.uint8)
        if self.kind == "z_only":
            return (u < self.p).astype(np.uint8), np.zeros_like(u, dtype=np.uint8)
        if self.kind == "independent_xz":
            x = (u[:, :n] < self.p_x).astype(np.uint8)
            z = (u[:, n:] < self.p_z).astype(np.uint8)
            return z, x
        if self.kind == "depolarizing":
            # [0,p/3) -> X, [p/3,2p/3) -> Y, [2p/3,p) -> Z
            x = (u < 2 * self.p / 3).astype(np.uint8)
            z = ((u >= self.p / 3) & (u < self.p)).astype(np.uint8)
            return z, x
        raise ValueError(f"unknown noise kind {self.kind!r}")

    def describe(self) -> dict:
        if self.kind == "independent_xz":
            return {"kind": self.kind, "p_x": self.p_x, "p_z": self.p_z}
        return {"kind": self.kind, "p": self.p}


@dataclass(frozen=True)
class TrialReport:
    trials: int
    logical_failures: int
    rate: float
    std_error: float
    seed: int
    code_params: tuple  # (n, k, gauge_qubits, stabilizer_count)


def _trial_uniforms(seed: int, t0: int, t1: int, draws: int) -> np.ndarray:
    """Uniforms for trials [t0, t1); row t-t0 belongs to trial t.

    Each trial owns ceil(draws/4) Philox blocks of the stream keyed by
    ``seed``, so the rows depend only on (seed, trial index).
    """
    blocks = max(1, (draws + 3) // 4)
    bg = np.random.Philox(key=seed)
    bg.advance(t0 * blocks)
    u = np.random.Generator(bg).random((t1 - t0) * blocks * 4)
    return u.reshape(t1 - t0, blocks * 4)[:, :draws]


def _decode_array(code: LinearCode) -> np.ndarray:
    """Dense decode table: row s is the coset leader for syndrome int s."""
    cached = getattr(code, "_decode_array_cache", None)
    if cached is not None:
        return cached
    m = code.n - code.k
    if m > _TABLE_ARRAY_MAX_BITS:
        raise ValueError(f"decode table for {m} syndrome bits is too large")
    table = np.zeros((1 << m, code.n), dtype=np.uint8)
    for key in range(1 << m):
        bits = (key >> np.arange(m, dtype=np.int64)) & 1
        table[key] = code.decode(bits.astype(np.uint8))
    code._decode_array_cache = table
    return table


def _batch_failures(code: SubsystemCode, z: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Vectorized recovery over a batch of errors; True where recovery
    leaves a logical error.  Exactly matches :func:`subqec.recovery.recover`
    trial for trial (pinned by tests)."""
    c1, c2 = code.c1, code.c2
    t1 = _decode_array(c1)
    t2 = _decode_array(c2)
    m1, m2 = c1.n - c1.k, c2.n - c2.k
    p1, g1 = c1.check, c1.generator
    p1c = c1.check_complement
    p2, g2 = c2.check, c2.generator
    p2c = c2.check_complement

    s_z = np.einsum("ai,tij,bj->tab", p1, x, g2) & 1
    idx = np.tensordot(s_z, 1 << np.arange(m1, dtype=np.int64), axes=([1], [0]))
    chat = t1[idx].transpose(0, 2, 1)
    bx = np.einsum("tik,kj->tij", chat, p2c) & 1
    resid_x = np.einsum("ai,tij,bj->tab", p1c, x ^ bx, g2) & 1

    s_x = np.einsum("ai,tij,bj->tab", g1, z, p2) & 1
    idx2 = np.tensordot(s_x, 1 << np.arange(m2, dtype=np.int64), axes=([2], [0]))
    fhat = t2[idx2]
    az = np.einsum("ai,taj->tij", p1c, fhat) & 1
    resid_z = np.einsum("ai,tij,bj->tab", g1, z ^ az, p2c) & 1

    return resid_x.any(axis=(1, 2)) | resid_z.any(axis=(1, 2))


def _count_chunk(code: SubsystemCode, noise: NoiseModel, seed: int,
                 t0: int, t1: int, batch_size: int) -> int:
    n = code.n
    draws = noise.draws_per_site * n
    failures = 0
    for b0 in range(t0, t1, batch_size):
        b1 = min(b0 + batch_size, t1)
        u = _trial_uniforms(seed, b0, b1, draws)
        zbits, xbits = noise.errors_from_uniforms(u, n)
        zgrid = zbits.reshape(-1, code.n1, code.n2)
        xgrid = xbits.reshape(-1, code.n1, code.n2)
        failures += int(_batch_failures(code, zgrid, xgrid).sum())
    return failures


def run_trials(code: SubsystemCode, noise: NoiseModel, trials: int, seed: int,
               workers: int = 1, batch_size: int = 8192) -> TrialReport:
    """Monte Carlo estimate of the logical failure rate.

    Deterministic in (code, noise, trials, seed): splitting the same run
    over any number of workers or any batch size returns a byte-identical
    report.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not (0 <= seed <= _MAX_SEED):
        raise ValueError("seed must fit in 64 bits")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    # Touch the decode tables before fanning out so threads share them.
    _decode_array(code.c1)
    _decode_array(code.c2)

    bounds = np.linspace(0, trials, workers + 1).astype(int)
    ranges = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
    if workers == 1 or len(ranges) == 1:
        counts = [_count_chunk(code, noise, seed, a, b, batch_size)
                  for a, b in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(
                lambda r: _count_chunk(code, noise, seed, r[0], r[1], batch_size),
                ranges))
    failures = int(sum(counts))
    rate = failures / trials
    std_error = math.sqrt(rate * (1.0 - rate) / trials)
    return TrialReport(
        trials=trials,
        logical_failures=failures,
        rate=rate,
        std_error=std_error,
        seed=seed,
        code_params=(code.n, code.k, code.gauge_qubits, len(code.stabilizers)),
    )


def exact_rate_enumeration(code: SubsystemCode, noise: NoiseModel) -> float:
    """Exact logical failure rate for a single-axis channel by enumerating
    all 2**n error patterns through the reference recovery path.

    Only ``x_only`` and ``z_only`` channels factorize this way; the grid is
    capped at 20 sites (2**20 patterns).
    """
    if noise.kind not in ("x_only", "z_only"):
        raise ValueError("exact enumeration needs an x_only or z_only channel")
    n = code.n
    if n > _EXACT_MAX_N:
        raise ValueError(f"{n} sites would mean 2**{n} patterns; too many")
    p = noise.p
    zero = np.zeros((code.n1, code.n2), np.uint8)
    shifts = np.arange(n, dtype=np.int64)
    rate = 0.0
    for pattern in range(1 << n):
        bits = ((pattern >> shifts) & 1).astype(np.uint8)
        grid = bits.reshape(code.n1, code.n2)
        if noise.kind == "x_only":
            err = PauliGrid(zero, grid)
        else:
            err = PauliGrid(grid, zero)
        if not recover(code, err).logical_ok:
            w = int(bits.sum())
            rate += (p ** w) * ((1.0 - p) ** (n - w))
    return rate


def _subsystem_stab_count(n1: int, k1: int, n2: int, k2: int) -> int:
    return (n1 - k1) * k2 + k1 * (n2 - k2)


def _shor_stab_count(n1: int, k1: int, n2: int, k2: int) -> int:
    return (n1 - k1) * n2 + k1 * (n2 - k2)


def _classical_summary(c: LinearCode) -> dict:
    d = c.d
    if d is None:
        try:
            d = c.min_distance()
        except ValueError:
            d = None
    return {"n": c.n, "k": c.k, "d": d}


def compare_report(c1: LinearCode, c2: LinearCode) -> dict:
    """Stabilizer-measurement comparison for the grid built from (c1, c2).

    Counts come from the closed-form formulas; tests pin them against the
    built generating sets.  For the hamming x hamming grid the report also
    lists the composed schemes that trade extra qubits for distance, with
    their stabilizer counts split inner + outer.
    """
    sub = _subsystem_stab_count(c1.n, c1.k, c2.n, c2.k)
    shor = _shor_stab_count(c1.n, c1.k, c2.n, c2.k)
    report = {
        "code1": _classical_summary(c1),
        "code2": _classical_summary(c2),
        "grid": {
            "n": c1.n * c2.n,
            "k": c1.k * c2.k,
            "gauge_qubits": (c1.n - c1.k) * (c2.n - c2.k),
            "distance": (min(c1.d, c2.d)
                         if c1.d is not None and c2.d is not None else None),
        },
        "subsystem_stabilizers": sub,
        "shor_stabilizers": shor,
        "stabilizers_saved": shor - sub,
    }
    if (c1.n, c1.k) == (7, 4) and (c2.n, c2.k) == (7, 4):
        rep4_outer = _subsystem_stab_count(4, 1, 4, 1)
        rep3_outer = _subsystem_stab_count(3, 1, 3, 1)
        steane_block = 6  # a [[7,1,3]] code measures 7 - 1 stabilizers
        report["composed_schemes"] = [
            {
                "scheme": "hamming grid + rep4 grid outer layer",
                "inner_stabilizers": sub,
                "outer_stabilizers": rep4_outer,
                "total": sub + rep4_outer,
            },
            {
                "scheme": "hamming grid + rep3 grid outer layer on 9 logicals",
                "inner_stabilizers": sub,
                "outer_stabilizers": rep3_outer,
                "total": sub + rep3_outer,
            },
            {
                "scheme": "steane-in-steane concatenation",
                "inner_stabilizers": 7 * steane_block,
                "outer_stabilizers": steane_block,
                "total": 7 * steane_block + steane_block,
            },
        ]
    return report

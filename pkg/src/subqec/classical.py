"""Classical binary linear codes with coset-leader decoding.

A ``LinearCode`` carries four matrices that together form a dual basis of
the length-n bit space:

    generator             k x n      rows span the code
    check                 (n-k) x n  rows span the dual (syndrome map)
    check_complement      k x n      pairs with generator: C_c G^T = I
    generator_complement  (n-k) x n  pairs with check:     P G_c^T = I

The two complements are what make the code usable as one axis of a grid
code: ``check_complement`` rows play the role of encoded-Z operators and
``generator_complement`` rows the role of pure errors.
"""

from __future__ import annotations

import itertools
from typing import Optional

import numpy as np

from . import gf2

# Syndrome decoding uses a full coset-leader table when the block length
# allows one; above this the decoder falls back to bounded-weight search.
_TABLE_MAX_N = 16
_DISTANCE_MAX_K = 24
DEFAULT_DECODE_WEIGHT_CAP = 4


def _weight_lex_order(n: int) -> np.ndarray:
    """All length-n bit vectors ordered by (weight, lexicographic).

    Vectors are compared as tuples, i.e. position 0 is most significant.
    Returns an array of shape (2**n, n).
    """
    ints = np.arange(1 << n, dtype=np.int64)
    bits = ((ints[:, None] >> np.arange(n - 1, -1, -1)) & 1).astype(np.uint8)
    order = np.lexsort((ints, bits.sum(axis=1)))
    return bits[order]


class LinearCode:
    """An [n, k] binary linear code.

    Construct via :meth:`from_generator`, :meth:`from_parity`, or directly
    with both matrices.  Instances are immutable; the distance is computed
    lazily by :meth:`min_distance` and cached.
    """

    def __init__(self, generator=None, check=None, distance: Optional[int] = None,
                 name: Optional[str] = None,
                 decode_weight_cap: int = DEFAULT_DECODE_WEIGHT_CAP):
        if generator is None and check is None:
            raise ValueError("need a generator or a check matrix")
        if generator is not None:
            generator = gf2.as_bits(generator)
            if gf2.rank(generator) != generator.shape[0]:
                raise ValueError("generator rows are linearly dependent")
        if check is not None:
            check = gf2.as_bits(check)
            if gf2.rank(check) != check.shape[0]:
                raise ValueError("check rows are linearly dependent")
        if generator is None:
            generator = gf2.kernel_basis(check)
        if check is None:
            check = gf2.kernel_basis(generator)
        if generator.shape[1] != check.shape[1]:
            raise ValueError("generator and check column counts differ")
        n = generator.shape[1]
        if n < 1:
            raise ValueError("block length must be at least 1")
        if generator.shape[0] + check.shape[0] != n:
            raise ValueError("generator and check ranks do not add up to n")
        if np.any(gf2.mat_mul(check, generator.T)):
            raise ValueError("check matrix does not annihilate the generator")

        self.n = n
        self.k = generator.shape[0]
        self.generator = generator
        self.check = check
        self.check_complement, self.generator_complement = gf2.dual_complete(
            check, generator)
        self.name = name
        self.decode_weight_cap = decode_weight_cap
        for m in (self.generator, self.check, self.check_complement,
                  self.generator_complement):
            m.setflags(write=False)
        self._distance: Optional[int] = None
        self._table: Optional[dict] = None
        if distance is not None:
            if self.min_distance() != distance:
                raise ValueError(
                    f"claimed distance {distance} but true distance is "
                    f"{self._distance}")

    @classmethod
    def from_generator(cls, generator, **kwargs) -> "LinearCode":
        return cls(generator=generator, **kwargs)

    @classmethod
    def from_parity(cls, check, **kwargs) -> "LinearCode":
        return cls(check=check, **kwargs)

    @property
    def d(self) -> Optional[int]:
        """Minimum distance if it has been computed, else None."""
        return self._distance

    @property
    def params(self) -> tuple:
        return (self.n, self.k, self._distance)

    def __repr__(self):
        d = self._distance if self._distance is not None else "?"
        tag = f" {self.name!r}" if self.name else ""
        return f"<LinearCode{tag} [{self.n},{self.k},{d}]>"

    def min_distance(self) -> int:
        """Minimum Hamming weight over nonzero codewords, by enumeration.

        Caches the result.  Refuses k > 24 (the full 2**k sweep would not be
        desk-scale any more).
        """
        if self._distance is not None:
            return self._distance
        if self.k == 0:
            raise ValueError("the zero code has no nonzero codewords")
        if self.k > _DISTANCE_MAX_K:
            raise ValueError(
                f"refusing exhaustive distance computation for k={self.k} > "
                f"{_DISTANCE_MAX_K}")
        best = self.n
        chunk = 1 << min(self.k, 16)
        gen = self.generator.astype(np.int64)
        for start in range(0, 1 << self.k, chunk):
            msgs = np.arange(start, start + chunk, dtype=np.int64)
            if start == 0:
                msgs = msgs[1:]  # skip the zero codeword
            bits = ((msgs[:, None] >> np.arange(self.k)) & 1)
            words = (bits @ gen) & 1
            best = min(best, int(words.sum(axis=1).min()))
        self._distance = best
        return best

    def syndrome(self, e) -> np.ndarray:
        """Syndrome ``check @ e`` of an error vector of length n."""
        e = np.asarray(e, dtype=np.uint8).reshape(-1)
        if e.shape[0] != self.n:
            raise ValueError(f"error length {e.shape[0]} != n={self.n}")
        return (self.check @ e) & 1

    def decode(self, s) -> np.ndarray:
        """Coset-leader decoding: a minimum-weight error matching syndrome s.

        Deterministic; ties inside a weight class go to the
        lexicographically smallest vector.  For n <= 16 a full table over
        all 2**(n-k) syndromes is built once and reused.  For larger n the
        decoder searches weights 0..decode_weight_cap and raises if no error
        within the cap matches.
        """
        s = np.asarray(s, dtype=np.uint8).reshape(-1)
        if s.shape[0] != self.n - self.k:
            raise ValueError(
                f"syndrome length {s.shape[0]} != n-k={self.n - self.k}")
        if self.n <= _TABLE_MAX_N:
            if self._table is None:
                self._table = self._build_table()
            return self._table[self._syndrome_key(s)].copy()
        return self._bounded_search(s)

    def _syndrome_key(self, s: np.ndarray) -> int:
        return int(s @ (1 << np.arange(s.shape[0], dtype=np.int64)))

    def _build_table(self) -> dict:
        ordered = _weight_lex_order(self.n)
        syndromes = (ordered @ self.check.T.astype(np.int64)) & 1
        keys = syndromes @ (1 << np.arange(self.n - self.k, dtype=np.int64))
        table: dict = {}
        want = 1 << (self.n - self.k)
        for v, key in zip(ordered, keys):
            key = int(key)
            if key not in table:
                v = v.copy()
                v.setflags(write=False)
                table[key] = v
                if len(table) == want:
                    break
        return table

    def _bounded_search(self, s: np.ndarray) -> np.ndarray:
        for w in range(self.decode_weight_cap + 1):
            matches = []
            for support in itertools.combinations(range(self.n), w):
                v = np.zeros(self.n, dtype=np.uint8)
                v[list(support)] = 1
                if np.array_equal(self.syndrome(v), s):
                    matches.append(tuple(v))
            if matches:
                return np.array(min(matches), dtype=np.uint8)
        raise ValueError(
            f"no error of weight <= {self.decode_weight_cap} matches the "
            f"syndrome; raise decode_weight_cap")

    def codewords(self) -> np.ndarray:
        """All 2**k codewords as rows (guarded like min_distance)."""
        if self.k > _DISTANCE_MAX_K:
            raise ValueError(f"refusing to enumerate 2**{self.k} codewords")
        msgs = np.arange(1 << self.k, dtype=np.int64)
        bits = ((msgs[:, None] >> np.arange(self.k)) & 1).astype(np.uint8)
        return (bits @ self.generator) & 1


def repetition(n: int) -> LinearCode:
    """The [n, 1, n] repetition code with the bidiagonal check matrix."""
    if n < 1:
        raise ValueError("repetition length must be >= 1")
    g = np.ones((1, n), dtype=np.uint8)
    p = np.zeros((n - 1, n), dtype=np.uint8)
    for i in range(n - 1):
        p[i, i] = 1
        p[i, i + 1] = 1
    return LinearCode(generator=g, check=p, distance=n, name=f"rep{n}")


def hamming_7_4() -> LinearCode:
    """The [7, 4, 3] Hamming code; check column j is the binary digits of j+1."""
    p = np.zeros((3, 7), dtype=np.uint8)
    for j in range(1, 8):
        for i in range(3):
            p[i, j - 1] = (j >> i) & 1
    return LinearCode(check=p, distance=3, name="hamming7_4")


def builtin(spec: str) -> LinearCode:
    """Look up a named code family: ``rep:<n>`` or ``hamming:7-4``."""
    spec = spec.strip()
    if spec.startswith("rep:"):
        try:
            n = int(spec[4:])
        except ValueError:
            raise ValueError(f"bad repetition length in {spec!r}") from None
        return repetition(n)
    if spec == "hamming:7-4":
        return hamming_7_4()
    raise ValueError(f"unknown code family {spec!r} (try rep:<n> or hamming:7-4)")

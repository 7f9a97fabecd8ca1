"""Build subsystem and Shor-style grid codes from two classical codes.

Qubits live on an n1 x n2 grid.  Code 1 runs down the columns and protects
against bit flips; code 2 runs along the rows and protects against phase
flips.  Writing P/G for check/generator matrices and P_c/G_c for their dual
complements (see :mod:`subqec.classical`), the generating sets are outer
products:

    Z stabilizer (a,b):  z = outer(P1[a],  G2[b])     a < n1-k1, b < k2
    X stabilizer (a,b):  x = outer(G1[a],  P2[b])     a < k1,    b < n2-k2
    Z gauge      (a,b):  z = outer(P1[a],  G2_c[b])   a < n1-k1, b < n2-k2
    X gauge      (a,b):  x = outer(G1_c[a], P2[b])    same index range
    logical X    (i,j):  x = outer(G1[i],  P2_c[j])   i < k1,    j < k2
    logical Z    (i,j):  z = outer(P1_c[i], G2[j])    same index range

Every Pauli on the grid splits into eight coefficient blocks along this
double dual basis (:class:`PauliDecomposition`); the stabilizer and gauge
blocks act trivially on the encoded qubits, the detect blocks are what the
stabilizers can see, and the logical blocks are encoded errors.

The Shor-style variant measures a column-local Z check for every column
instead of spreading checks over codewords of code 2; it encodes the same
logical qubits with the same logical operators but needs
(n1-k1)*n2 + k1*(n2-k2) stabilizers instead of (n1-k1)*k2 + k1*(n2-k2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import gf2
from .classical import LinearCode
from .pauli import PauliGrid


@dataclass(frozen=True, eq=False)
class PauliDecomposition:
    """Coefficient blocks of a grid Pauli along the double dual basis.

    Block shapes (k1, k2 from code 1/2):

        z_stab    (n1-k1, k2)      z_gauge   (n1-k1, n2-k2)
        z_logical (k1, k2)         z_detect  (k1, n2-k2)
        x_stab    (k1, n2-k2)      x_gauge   (n1-k1, n2-k2)
        x_logical (k1, k2)         x_detect  (n1-k1, k2)

    ``z_detect`` is exactly the X-stabilizer syndrome of the operator and
    ``x_detect`` the Z-stabilizer syndrome.
    """

    z_stab: np.ndarray
    z_gauge: np.ndarray
    z_logical: np.ndarray
    z_detect: np.ndarray
    x_stab: np.ndarray
    x_gauge: np.ndarray
    x_logical: np.ndarray
    x_detect: np.ndarray
    phase: int

    def is_gauge(self) -> bool:
        """True when only stabilizer/gauge blocks are populated."""
        return not (self.z_logical.any() or self.z_detect.any()
                    or self.x_logical.any() or self.x_detect.any())


def _outer(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.outer(u, v).astype(np.uint8)


class SubsystemCode:
    """Subsystem code on an n1 x n2 grid built from two classical codes.

    The constructor verifies the group structure exhaustively: generator
    counts, the counting identity, linear independence, and every
    commutation relation between stabilizer, gauge, and logical generators.
    """

    shor = False

    def __init__(self, c1: LinearCode, c2: LinearCode):
        self.c1 = c1
        self.c2 = c2
        self.n1, self.n2 = c1.n, c2.n
        self.n = c1.n * c2.n
        self.k = c1.k * c2.k
        self.gauge_qubits = (c1.n - c1.k) * (c2.n - c2.k)
        self.distance: Optional[int] = None
        if c1.d is not None and c2.d is not None:
            self.distance = min(c1.d, c2.d)

        p1, g1 = c1.check, c1.generator
        p1c, g1c = c1.check_complement, c1.generator_complement
        p2, g2 = c2.check, c2.generator
        p2c, g2c = c2.check_complement, c2.generator_complement

        def grid(z=None, x=None):
            zero = np.zeros((self.n1, self.n2), np.uint8)
            return PauliGrid(zero if z is None else z, zero if x is None else x)

        self.z_stabilizers = [
            grid(z=_outer(p1[a], g2[b]))
            for a in range(c1.n - c1.k) for b in range(c2.k)
        ]
        self.x_stabilizers = [
            grid(x=_outer(g1[a], p2[b]))
            for a in range(c1.k) for b in range(c2.n - c2.k)
        ]
        self.z_gauges = [
            grid(z=_outer(p1[a], g2c[b]))
            for a in range(c1.n - c1.k) for b in range(c2.n - c2.k)
        ]
        self.x_gauges = [
            grid(x=_outer(g1c[a], p2[b]))
            for a in range(c1.n - c1.k) for b in range(c2.n - c2.k)
        ]
        self.logical_x = [
            [grid(x=_outer(g1[i], p2c[j])) for j in range(c2.k)]
            for i in range(c1.k)
        ]
        self.logical_z = [
            [grid(z=_outer(p1c[i], g2[j])) for j in range(c2.k)]
            for i in range(c1.k)
        ]
        self._verify()

    # -- generator access ------------------------------------------------

    @property
    def stabilizers(self) -> list:
        """All stabilizer generators, Z-type first."""
        return self.z_stabilizers + self.x_stabilizers

    @property
    def gauge_pairs(self) -> list:
        """Canonically conjugate (Z, X) gauge generator pairs."""
        return list(zip(self.z_gauges, self.x_gauges))

    @property
    def gauges(self) -> list:
        return self.z_gauges + self.x_gauges

    @property
    def logicals(self) -> list:
        out = []
        for i in range(self.c1.k):
            for j in range(self.c2.k):
                out.append(self.logical_x[i][j])
                out.append(self.logical_z[i][j])
        return out

    @property
    def params(self) -> tuple:
        return (self.n, self.k, self.distance)

    def __repr__(self):
        d = self.distance if self.distance is not None else "?"
        kind = "ShorCode" if self.shor else "SubsystemCode"
        return f"<{kind} [[{self.n},{self.k},{d}]] on {self.n1}x{self.n2}>"

    # -- decomposition ---------------------------------------------------

    def decompose(self, op: PauliGrid) -> PauliDecomposition:
        """Split ``op`` into its eight coefficient blocks."""
        if op.shape != (self.n1, self.n2):
            raise ValueError(f"operator shape {op.shape} is not "
                             f"({self.n1},{self.n2})")
        c1, c2 = self.c1, self.c2
        a, b = op.z, op.x
        mm = gf2.mat_mul
        return PauliDecomposition(
            z_stab=mm(mm(c1.generator_complement, a), c2.check_complement.T),
            z_gauge=mm(mm(c1.generator_complement, a), c2.check.T),
            z_logical=mm(mm(c1.generator, a), c2.check_complement.T),
            z_detect=mm(mm(c1.generator, a), c2.check.T),
            x_stab=mm(mm(c1.check_complement, b), c2.generator_complement.T),
            x_gauge=mm(mm(c1.check, b), c2.generator_complement.T),
            x_logical=mm(mm(c1.check_complement, b), c2.generator.T),
            x_detect=mm(mm(c1.check, b), c2.generator.T),
            phase=op.phase,
        )

    def recompose(self, dec: PauliDecomposition) -> PauliGrid:
        """Rebuild the grid Pauli from its coefficient blocks."""
        c1, c2 = self.c1, self.c2
        mm = gf2.mat_mul
        z = (mm(mm(c1.check.T, dec.z_stab), c2.generator)
             ^ mm(mm(c1.check.T, dec.z_gauge), c2.generator_complement)
             ^ mm(mm(c1.check_complement.T, dec.z_logical), c2.generator)
             ^ mm(mm(c1.check_complement.T, dec.z_detect),
                  c2.generator_complement))
        x = (mm(mm(c1.generator.T, dec.x_stab), c2.check)
             ^ mm(mm(c1.generator_complement.T, dec.x_gauge), c2.check)
             ^ mm(mm(c1.generator.T, dec.x_logical), c2.check_complement)
             ^ mm(mm(c1.generator_complement.T, dec.x_detect),
                  c2.check_complement))
        return PauliGrid(z, x, dec.phase)

    def contains_gauge(self, op: PauliGrid) -> bool:
        """Membership of ``op`` in the gauge group, up to phase."""
        return self.decompose(op).is_gauge()

    # -- verification ----------------------------------------------------

    def _symplectic_rows(self, ops) -> np.ndarray:
        return np.array(
            [np.concatenate([op.z.ravel(), op.x.ravel()]) for op in ops],
            dtype=np.uint8).reshape(len(ops), 2 * self.n)

    def _verify(self):
        c1, c2 = self.c1, self.c2
        n_stab = len(self.z_stabilizers) + len(self.x_stabilizers)
        expect_stab = (c1.n - c1.k) * c2.k + c1.k * (c2.n - c2.k)
        if n_stab != expect_stab:
            raise ValueError("internal error: stabilizer count mismatch")
        if self.gauge_qubits + n_stab + self.k != self.n:
            raise ValueError(
                "internal error: gauge + stabilizer + logical counts do not "
                "fill the grid")
        stab = self.stabilizers
        flat_logicals = self.logicals
        gens = stab + self.gauges + flat_logicals
        if gf2.rank(self._symplectic_rows(gens)) != len(gens):
            raise ValueError("internal error: generators are dependent")
        for s in stab:
            for other in gens:
                if not s.commutes(other):
                    raise ValueError(
                        "internal error: a stabilizer fails to commute")
        pairs = self.gauge_pairs
        for i, (zg, xg) in enumerate(pairs):
            for j, (zh, xh) in enumerate(pairs):
                if zg.commutes(xh) != (i != j):
                    raise ValueError(
                        "internal error: gauge pairs are not canonical")
                if not zg.commutes(zh) or not xg.commutes(xh):
                    raise ValueError(
                        "internal error: same-type gauge generators clash")
        for g in self.gauges:
            for l in flat_logicals:
                if not g.commutes(l):
                    raise ValueError(
                        "internal error: gauge disturbs a logical operator")
        for i in range(c1.k):
            for j in range(c2.k):
                for m in range(c1.k):
                    for l in range(c2.k):
                        want_anticommute = (i, j) == (m, l)
                        lx, lz = self.logical_x[i][j], self.logical_z[m][l]
                        if lx.commutes(lz) == want_anticommute:
                            raise ValueError(
                                "internal error: logical pairing is wrong")
                        if not self.logical_x[i][j].commutes(
                                self.logical_x[m][l]):
                            raise ValueError(
                                "internal error: logical X operators clash")
                        if not self.logical_z[i][j].commutes(
                                self.logical_z[m][l]):
                            raise ValueError(
                                "internal error: logical Z operators clash")


class ShorCode(SubsystemCode):
    """Shor-style subspace code: same grid, same logicals, column-local
    Z checks for every column of the grid."""

    shor = True

    def __init__(self, c1: LinearCode, c2: LinearCode):
        super().__init__(c1, c2)
        p1 = c1.check
        zero = np.zeros((self.n1, self.n2), np.uint8)
        z_stabs = []
        for j in range(self.n2):
            e_j = np.zeros(self.n2, np.uint8)
            e_j[j] = 1
            for a in range(c1.n - c1.k):
                z_stabs.append(PauliGrid(_outer(p1[a], e_j), zero))
        self.z_stabilizers = z_stabs
        # X stabilizers and logical operators are inherited unchanged; the
        # subsystem gauge generators play no role here.
        self.z_gauges = []
        self.x_gauges = []
        self.gauge_qubits = 0
        self._verify_shor()

    def _verify_shor(self):
        c1, c2 = self.c1, self.c2
        expect = (c1.n - c1.k) * c2.n + c1.k * (c2.n - c2.k)
        if len(self.z_stabilizers) + len(self.x_stabilizers) != expect:
            raise ValueError("internal error: Shor stabilizer count mismatch")
        if self.n - expect != self.k:
            raise ValueError("internal error: Shor code encodes wrong k")
        gens = self.stabilizers + self.logicals
        if gf2.rank(self._symplectic_rows(gens)) != len(gens):
            raise ValueError("internal error: Shor generators are dependent")
        for s in self.stabilizers:
            for other in gens:
                if not s.commutes(other):
                    raise ValueError(
                        "internal error: a Shor stabilizer fails to commute")

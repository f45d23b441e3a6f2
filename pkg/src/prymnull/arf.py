"""Brute-force parity counts from quadratic refinements over GF(2).

A theta characteristic is modelled as a quadratic form q on GF(2)^{2g}
refining the standard symplectic pairing, q(x + y) = q(x) + q(y) + <x, y>.
Its parity is the Arf invariant, and a Prym root is a nonzero vector eta
acting by q -> q + <., eta>.

Vectors are ints: bit 2j is the coordinate of a_j, bit 2j+1 that of b_j.
A form is stored as the int of its values on the 2g basis vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import CountTable

MAX_ORACLE_GENUS = 6

_EVEN_BITS = [sum(1 << (2 * j) for j in range(g)) for g in range(MAX_ORACLE_GENUS + 8)]


class OracleError(ValueError):
    pass


def pairing(g: int, x: int, y: int) -> int:
    """Standard symplectic pairing: <a_j, b_j> = 1, all other basis pairs 0."""
    mask = _EVEN_BITS[g]
    # x_a * y_b + x_b * y_a, summed over j
    return (bin((x & mask) & (y >> 1)).count("1") + bin((x >> 1) & mask & y).count("1")) & 1


def swap_ab(g: int, eta: int) -> int:
    """The vector J(eta) with <x, eta> = popcount(x & J(eta)) mod 2."""
    mask = _EVEN_BITS[g]
    return ((eta & mask) << 1) | ((eta >> 1) & mask)


@dataclass(frozen=True)
class QuadraticForm:
    g: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < 1 << (2 * self.g):
            raise OracleError(f"form bits {self.bits:#x} do not fit 2g = {2 * self.g}")

    def __call__(self, x: int) -> int:
        # polarisation: q(sum e_s) = sum q(e_s) + sum_{s<t} <e_s, e_t>
        support = [s for s in range(2 * self.g) if x >> s & 1]
        value = sum(self.bits >> s & 1 for s in support)
        for n, s in enumerate(support):
            for t in support[n + 1 :]:
                value += pairing(self.g, 1 << s, 1 << t)
        return value & 1

    def arf(self) -> int:
        return arf_bits(self.g, self.bits)


def arf_bits(g: int, bits: int) -> int:
    """Sum of q(a_j) q(b_j) mod 2."""
    return bin(bits & (bits >> 1) & _EVEN_BITS[g]).count("1") & 1


def arf(q: QuadraticForm) -> int:
    return q.arf()


def twist(q: QuadraticForm, eta: int) -> QuadraticForm:
    """q_eta(x) = q(x) + <x, eta>."""
    if eta == 0:
        raise OracleError("cannot twist by the zero vector")
    if not 0 < eta < 1 << (2 * q.g):
        raise OracleError(f"eta {eta:#x} is not a vector of GF(2)^{2 * q.g}")
    return QuadraticForm(q.g, q.bits ^ swap_ab(q.g, eta))


def all_forms(g: int):
    return (QuadraticForm(g, bits) for bits in range(1 << (2 * g)))


def twist_counts(g: int, eta: int, arf_table: list[int] | None = None) -> tuple[int, int, int, int]:
    """(even->even, odd->odd, even->odd, odd->even) counts for one Prym root."""
    if arf_table is None:
        arf_table = [arf_bits(g, b) for b in range(1 << (2 * g))]
    shift = swap_ab(g, eta)
    tally = [0, 0, 0, 0]
    for bits, parity in enumerate(arf_table):
        after = arf_table[bits ^ shift]
        tally[2 * parity + after] += 1
    ee, eo, oe, oo = tally
    return ee, oo, eo, oe


def oracle_counts(g: int) -> CountTable:
    """Count everything by enumeration, checking that no choice of eta is special."""
    if not isinstance(g, int) or not 1 <= g <= MAX_ORACLE_GENUS:
        raise OracleError(f"oracle enumerates only 1 <= g <= {MAX_ORACLE_GENUS}, got {g!r}")
    size = 1 << (2 * g)
    arf_table = [arf_bits(g, b) for b in range(size)]
    odd = sum(arf_table)
    reference = None
    roots = 0
    for eta in range(1, size):
        roots += 1
        ee, oo, eo, oe = twist_counts(g, eta, arf_table)
        if eo != oe:
            raise OracleError(f"g={g}, eta={eta:#x}: even->odd {eo} != odd->even {oe}")
        triple = (ee, oo, eo)
        if reference is None:
            reference = triple
        elif triple != reference:
            raise OracleError(f"g={g}: eta={eta:#x} gives {triple}, eta=0x1 gave {reference}")
    n_plus, n_minus, n_pm = reference
    return CountTable(g, size - odd, odd, roots, n_plus, n_minus, n_pm)

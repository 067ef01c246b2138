"""Exact two-level minimization of binary functions.

Prime implicants come from Quine-McCluskey merging; the cover is chosen by
branch and bound over the prime/minterm table.  The selected cover has the
fewest products, then the fewest literals, then the lexicographically
smallest sorted list of ``(mask, value)`` cube keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

MAX_EXACT_BITS = 12


class Cube(NamedTuple):
    """A product term: bits set in ``mask`` are literals, ``value`` gives their polarity."""

    mask: int
    value: int

    @property
    def n_literals(self) -> int:
        return bin(self.mask).count("1")

    def covers(self, minterm: int) -> bool:
        return minterm & self.mask == self.value

    def literals(self) -> list[tuple[int, bool]]:
        """``(bit, positive)`` pairs, most significant bit first."""
        out = []
        bit = self.mask.bit_length() - 1
        while bit >= 0:
            if self.mask >> bit & 1:
                out.append((bit, bool(self.value >> bit & 1)))
            bit -= 1
        return out


@dataclass(frozen=True)
class BinaryFunction:
    bit_arity: int
    ones: frozenset[int]

    def __post_init__(self):
        limit = 1 << self.bit_arity
        bad = [m for m in self.ones if not 0 <= m < limit]
        if bad:
            raise ValueError(f"minterm indices out of range for {self.bit_arity} bits: {sorted(bad)[:5]}")

    def __call__(self, minterm: int) -> int:
        return int(minterm in self.ones)


def prime_implicants(bit_arity: int, ones: Iterable[int]) -> list[Cube]:
    full = (1 << bit_arity) - 1
    level = {Cube(full, m) for m in ones}
    primes: set[Cube] = set()
    while level:
        merged: set[Cube] = set()
        used: set[Cube] = set()
        for cube in level:
            bits = cube.mask
            while bits:
                low = bits & -bits
                bits ^= low
                if cube.value & low:
                    continue
                partner = Cube(cube.mask, cube.value | low)
                if partner in level:
                    used.add(cube)
                    used.add(partner)
                    merged.add(Cube(cube.mask & ~low, cube.value))
        primes |= level - used
        level = merged
    return sorted(primes)


def _cover_cost(cubes: list[Cube]) -> tuple:
    return (len(cubes), sum(c.n_literals for c in cubes), tuple(sorted(cubes)))


class _CoverSearch:
    def __init__(self, primes: list[Cube], minterms: list[int]):
        # Try cheap primes first so good incumbents appear early.
        self.primes = sorted(primes, key=lambda c: (c.n_literals, c))
        self.cands: list[int] = []
        for m in minterms:
            mask = 0
            for j, p in enumerate(self.primes):
                if p.covers(m):
                    mask |= 1 << j
            self.cands.append(mask)
        self.rows_of: list[int] = []
        for j in range(len(self.primes)):
            rows = 0
            for r, cmask in enumerate(self.cands):
                if cmask >> j & 1:
                    rows |= 1 << r
            self.rows_of.append(rows)
        self.min_lits = min((p.n_literals for p in self.primes), default=0)
        self.best: tuple | None = None
        self.best_cover: list[int] = []

    def run(self) -> list[Cube]:
        everything = (1 << len(self.cands)) - 1
        self._search(everything, 0, [])
        return [self.primes[j] for j in self.best_cover]

    def _lower_bound(self, uncovered: int, excluded: int) -> int:
        rows = []
        r = uncovered
        while r:
            low = r & -r
            r ^= low
            idx = low.bit_length() - 1
            avail = self.cands[idx] & ~excluded
            rows.append((bin(avail).count("1"), idx, avail))
        rows.sort()
        used = 0
        count = 0
        for _, _, avail in rows:
            if not avail & used:
                used |= avail
                count += 1
        return count

    def _search(self, uncovered: int, excluded: int, chosen: list[int]) -> None:
        chosen = list(chosen)
        # Forced choices: rows with a single available prime.
        while uncovered:
            forced = None
            r = uncovered
            while r:
                low = r & -r
                r ^= low
                avail = self.cands[low.bit_length() - 1] & ~excluded
                if not avail:
                    return
                if avail & (avail - 1) == 0:
                    forced = avail.bit_length() - 1
                    break
            if forced is None:
                break
            chosen.append(forced)
            uncovered &= ~self.rows_of[forced]
        lits = sum(self.primes[j].n_literals for j in chosen)
        if not uncovered:
            cost = _cover_cost([self.primes[j] for j in chosen])
            if self.best is None or cost < self.best:
                self.best = cost
                self.best_cover = sorted(chosen)
            return
        lb = self._lower_bound(uncovered, excluded)
        if self.best is not None:
            bound = (len(chosen) + lb, lits + lb * self.min_lits)
            if bound > self.best[:2]:
                return
        # Branch on the uncovered row with the fewest available primes.
        best_row, best_avail, best_n = None, 0, None
        r = uncovered
        while r:
            low = r & -r
            r ^= low
            avail = self.cands[low.bit_length() - 1] & ~excluded
            n = bin(avail).count("1")
            if best_n is None or n < best_n:
                best_row, best_avail, best_n = low, avail, n
        avail = best_avail
        while avail:
            low = avail & -avail
            avail ^= low
            j = low.bit_length() - 1
            self._search(uncovered & ~self.rows_of[j], excluded, chosen + [j])
            # Covers containing j were all explored in the branch above.
            excluded |= low


def minimize_binary(f: BinaryFunction) -> list[Cube]:
    """Minimum-cardinality prime cover of ``f``; ``[Cube(0, 0)]`` for a tautology."""
    if f.bit_arity > MAX_EXACT_BITS:
        raise ValueError(
            f"exact minimization supports at most {MAX_EXACT_BITS} binary variables "
            f"(got {f.bit_arity}); reduce the function arity"
        )
    if not f.ones:
        return []
    if len(f.ones) == 1 << f.bit_arity:
        return [Cube(0, 0)]
    minterms = sorted(f.ones)
    primes = prime_implicants(f.bit_arity, minterms)
    cover = _CoverSearch(primes, minterms).run()
    return sorted(cover)


def cover_is_valid(f: BinaryFunction, cubes: Iterable[Cube]) -> bool:
    """True iff the cubes imply ``f`` and jointly cover every one of ``f``."""
    cubes = list(cubes)
    for m in range(1 << f.bit_arity):
        hit = any(c.covers(m) for c in cubes)
        if hit != (m in f.ones):
            return False
    return True

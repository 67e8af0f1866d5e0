"""Generator counting under contact connected sums.

Summing two contact manifolds of dimension 2n-1 adds the two generator
sets together with one extra generator from the connecting tube in each
odd degree 2n-3, 2n-1, ...  Counts are only controlled up to a degree
cutoff, so the cutoff travels with the data and combining truncates to
the weaker one.

The distinguished building block is the sphere Sigma(p_1,...,p_{n-1},2,2)
for odd primes p_i: for suitable primes its contact homology has at least
two generators in degree 2n-4, none below, and none in degree 2n-3, which
makes the counts of its iterated self-sums strictly increasing in the
number of summands.  Whether a given prime tuple works is decided here by
running the whole pipeline, not estimated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement

from .contact import CHReport, ch_report, ranks_up_to
from .randell import ExponentVector, full_homology


@dataclass(frozen=True)
class GeneratorCounts:
    """Generator counts per degree, trusted only up to `cutoff`."""

    counts: dict[int, int]
    cutoff: int
    half_dim_n: int

    def __post_init__(self):
        for degree, count in self.counts.items():
            if degree > self.cutoff:
                raise ValueError("count recorded above the cutoff")
            if count <= 0:
                raise ValueError("counts must be positive where present")

    def __getitem__(self, degree: int) -> int:
        return self.counts.get(degree, 0)

    def items(self):
        return sorted(self.counts.items())


@dataclass(frozen=True)
class SpecialSphereVerdict:
    """Clause-by-clause audit of a candidate special sphere."""

    primes: tuple[int, ...]
    is_homotopy_sphere: bool
    low_degree_rank: int        # generators in degree 2n-4 (want >= 2)
    tube_degree_rank: int       # generators in degree 2n-3 (want 0)
    ranks_below: tuple[tuple[int, int], ...]  # (degree, rank) below 2n-4 (want none)
    well_defined: bool
    index_positive: bool

    @property
    def passed(self) -> bool:
        return (
            self.is_homotopy_sphere
            and self.low_degree_rank >= 2
            and self.tube_degree_rank == 0
            and not self.ranks_below
            and self.well_defined
            and self.index_positive
        )

    def failing_clauses(self) -> tuple[str, ...]:
        failures = []
        if not self.is_homotopy_sphere:
            failures.append("not a homotopy sphere")
        if self.low_degree_rank < 2:
            failures.append("fewer than two generators in degree 2n-4")
        if self.tube_degree_rank != 0:
            failures.append("generators present in degree 2n-3")
        if self.ranks_below:
            failures.append("generators below degree 2n-4")
        if not (self.well_defined and self.index_positive):
            failures.append("homology not well defined or not index-positive")
        return tuple(failures)


def beta(n: int, j: int) -> int:
    """Connecting-tube generators in degree j for a sum of (2n-1)-manifolds."""
    if j >= 2 * n - 3 and (j - (2 * n - 3)) % 2 == 0:
        return 1
    return 0


def combine(c1: GeneratorCounts, c2: GeneratorCounts) -> GeneratorCounts:
    """Counts of the connected sum: pointwise sum plus the tube generators."""
    if c1.half_dim_n != c2.half_dim_n:
        raise ValueError("connected sum needs equal dimensions")
    n = c1.half_dim_n
    cutoff = min(c1.cutoff, c2.cutoff)
    counts: dict[int, int] = {}
    for source in (c1.counts, c2.counts):
        for degree, count in source.items():
            if degree <= cutoff:
                counts[degree] = counts.get(degree, 0) + count
    for degree in range(2 * n - 3, cutoff + 1, 2):
        counts[degree] = counts.get(degree, 0) + 1
    return GeneratorCounts(counts=counts, cutoff=cutoff, half_dim_n=n)


def iterated_sphere_sum(sphere: GeneratorCounts, r: int) -> GeneratorCounts:
    """Counts of the r-fold self-sum (r - 1 combines; r = 1 is the sphere)."""
    if r < 1:
        raise ValueError("need at least one summand")
    return reduce(combine, [sphere] * r)


def sphere_exponents(primes: tuple[int, ...]) -> ExponentVector:
    """Exponent vector (p_1, ..., p_{n-1}, 2, 2) of the candidate sphere."""
    if len(primes) < 2:
        raise ValueError("need at least two odd primes (so the manifold is 5-dimensional)")
    if any(p < 3 or p % 2 == 0 for p in primes):
        raise ValueError("exponents before the two 2s must be odd primes")
    return ExponentVector(tuple(primes) + (2, 2))


def special_sphere_check(primes: tuple[int, ...], report: CHReport) -> SpecialSphereVerdict:
    """Audit a candidate sphere against the five distinguishing clauses.

    `report` must be the contact homology report of (p_1,...,p_{n-1},2,2)
    on a window covering degrees 2n-4 and 2n-3.  The no-lower-generators
    clause is checked by a fresh global scan, not limited to the window.
    """
    a = sphere_exponents(tuple(primes))
    if report.exponents != a:
        raise ValueError("report does not belong to the given primes")
    n = a.n
    lo, hi = report.ranks.window
    if not (lo <= 2 * n - 4 and 2 * n - 3 <= hi):
        raise ValueError("report window must cover degrees 2n-4 and 2n-3")

    homology = full_homology(a)
    # Without index positivity degrees are unbounded below; the sign
    # clause fails on its own then, so the scan is skipped.
    below: tuple[tuple[int, int], ...] = ()
    if report.character.is_positive:
        low_scan = ranks_up_to(a, 2 * n - 5)
        below = tuple(low_scan.items())
    return SpecialSphereVerdict(
        primes=tuple(primes),
        is_homotopy_sphere=homology.homotopy_sphere,
        low_degree_rank=report.ranks[2 * n - 4],
        tube_degree_rank=report.ranks[2 * n - 3],
        ranks_below=below,
        well_defined=report.well_defined,
        index_positive=report.character.is_positive,
    )


def check_primes(primes: tuple[int, ...]) -> SpecialSphereVerdict:
    """Run the full pipeline on a prime tuple and audit the outcome."""
    a = sphere_exponents(tuple(primes))
    n = a.n
    report = ch_report(a, (0, 2 * n - 2))
    return special_sphere_check(tuple(primes), report)


def _odd_primes_up_to(bound: int) -> list[int]:
    primes = []
    for q in range(3, bound + 1, 2):
        if all(q % p for p in primes):
            primes.append(q)
    return primes


def find_special_primes(n: int, search_bound: int) -> tuple[int, ...] | None:
    """Lexicographically least passing tuple of odd primes <= search_bound.

    Tuples are nondecreasing (order does not change the manifold), length
    n - 1.  Returns None when nothing within the bound passes.
    """
    if n < 3:
        raise ValueError("need half-dimension n >= 3")
    for primes in combinations_with_replacement(_odd_primes_up_to(search_bound), n - 1):
        if check_primes(primes).passed:
            return primes
    return None

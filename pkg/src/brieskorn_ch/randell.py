"""Homology of Brieskorn manifolds by subset arithmetic on the exponents.

A Brieskorn manifold is cut out of the unit sphere in C^(n+1) by
z_0^{a_0} + ... + z_n^{a_n} = 0, so everything topological about it is a
function of the exponent vector (a_0, ..., a_n).  The free rank of the
middle homology is an alternating sum of products-over-lcm terms taken
over subsets of the exponents (Randell's kappa); the torsion comes from a
gcd recursion over the same subset lattice.  The rational homology of the
S^1-quotient orbifold follows from kappa as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import gcd_set, lcm_set, subsets


class HomologyInvariantError(RuntimeError):
    """A quantity that must be a nonnegative integer came out otherwise."""


@dataclass(frozen=True)
class ExponentVector:
    """Exponents (a_0, ..., a_n) of a Brieskorn manifold of dimension 2n-1.

    At least four exponents (so the manifold is at least 5-dimensional and
    simply connected), each at least 2: a unit exponent flattens the
    divisor bookkeeping for the orbit types and is rejected rather than
    special-cased.
    """

    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) < 4:
            raise ValueError("need at least four exponents")
        if any(not isinstance(x, int) or x < 2 for x in self.a):
            raise ValueError("every exponent must be an integer >= 2")

    @property
    def n(self) -> int:
        """Half-dimension parameter: the manifold has dimension 2n - 1."""
        return len(self.a) - 1

    @property
    def full_support(self) -> tuple[int, ...]:
        return tuple(range(len(self.a)))

    def lcm(self) -> int:
        return lcm_set(self.a)

    def reciprocal_sum(self) -> Fraction:
        return sum((Fraction(1, x) for x in self.a), Fraction(0))

    def __len__(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def __getitem__(self, i: int) -> int:
        return self.a[i]


@dataclass(frozen=True)
class HomologyReport:
    """Integral homology of a Brieskorn manifold, middle group emphasised."""

    exponents: ExponentVector
    middle_rank: int
    torsion: tuple[int, ...]
    full_graded: dict[int, tuple[int, tuple[int, ...]]]
    homotopy_sphere: bool
    description: str


@dataclass(frozen=True)
class OrbitSpaceHomology:
    """Rational homology of an S^1-quotient orbifold, indexed 0..dimension."""

    dimension: int
    ranks: tuple[int, ...]

    def __post_init__(self):
        if len(self.ranks) != self.dimension + 1:
            raise ValueError("ranks must cover degrees 0..dimension")


def _kappa_raw(a: ExponentVector, support: tuple[int, ...]) -> int:
    """Alternating subset sum; no size restriction on `support`.

    The empty subset contributes (-1)^{|support|} (empty product 1, empty
    lcm 1), the convention that reproduces the known closed forms.
    """
    s = len(support)
    total = Fraction(0)
    for sub in subsets(support):
        prod = 1
        for i in sub:
            prod *= a[i]
        total += Fraction((-1) ** (s - len(sub)) * prod, lcm_set(a[i] for i in sub))
    if total.denominator != 1 or total < 0:
        raise HomologyInvariantError(
            f"kappa{tuple(a)} on {support} evaluated to {total}, not a rank"
        )
    return int(total)


def kappa(a: ExponentVector, support: tuple[int, ...]) -> int:
    """Rank of the middle homology of the submanifold spanned by `support`."""
    support = tuple(sorted(support))
    if len(support) < 2:
        raise ValueError("support needs at least two indices")
    if len(set(support)) != len(support) or not set(support) <= set(a.full_support):
        raise ValueError("support must be a subset of the exponent indices")
    return _kappa_raw(a, support)


def torsion(a: ExponentVector) -> tuple[int, ...]:
    """Orders (d_1, ..., d_r) of the cyclic torsion of the middle homology.

    d_j is a product of recursively defined gcd quotients C(I_s) over the
    subsets whose kappa-count reaches j; trivial factors 1 are dropped.
    The C-recursion stays in exact rationals and each value is checked to
    be integral at the end.
    """
    n1 = len(a)
    full = a.full_support

    k_count: dict[tuple[int, ...], int] = {}
    for sub in subsets(full):
        k_count[sub] = _kappa_raw(a, sub) if (n1 - len(sub)) % 2 == 1 else 0

    # C(I_s) for proper subsets only; the full set is never consumed since
    # its k-count vanishes (n + 1 - s = 0 is even).
    c_val: dict[tuple[int, ...], Fraction] = {(): Fraction(gcd_set(a))}
    for sub in subsets(full, 1):
        if len(sub) == n1:
            continue
        inside = set(sub)
        numer = gcd_set(x for i, x in enumerate(a) if i not in inside)
        denom = Fraction(1)
        for smaller in subsets(sub):
            if len(smaller) < len(sub):
                denom *= c_val[smaller]
        c_val[sub] = Fraction(numer) / denom

    for sub, c in c_val.items():
        if c.denominator != 1:
            raise HomologyInvariantError(f"C{sub} = {c} is not integral for {tuple(a)}")

    r = max(k_count.values(), default=0)
    ds = []
    for j in range(1, r + 1):
        d = 1
        for sub, k in k_count.items():
            if k >= j:
                d *= int(c_val[sub])
        ds.append(d)
    for prev, nxt in zip(ds, ds[1:]):
        if prev % nxt:
            raise HomologyInvariantError(f"torsion chain broken for {tuple(a)}: {ds}")
    return tuple(d for d in ds if d != 1)


def full_homology(a: ExponentVector) -> HomologyReport:
    """Homology of the manifold, assembled across all degrees.

    The middle groups carry kappa and the torsion; the rest of the graded
    picture (H_0 = Z, H_n free of rank kappa, top Z, zero elsewhere) is
    standard bookkeeping from (n-2)-connectedness and Poincare duality.
    Brieskorn manifolds are stably parallelizable, hence spin, so in
    dimension five a free middle group identifies the manifold as a
    connected sum of copies of S^2 x S^3.
    """
    n = a.n
    middle = _kappa_raw(a, a.full_support)
    tors = torsion(a)

    graded: dict[int, tuple[int, tuple[int, ...]]] = {0: (1, ())}
    if middle > 0 or tors:
        graded[n - 1] = (middle, tors)
    if middle > 0:
        graded[n] = (middle, ())
    graded[2 * n - 1] = (1, ())

    sphere = middle == 0 and not tors
    if sphere:
        description = "homotopy sphere"
    elif n == 3 and not tors:
        description = f"#_{middle} (S²×S³)"
    else:
        description = "Brieskorn manifold (unclassified)"
    return HomologyReport(
        exponents=a,
        middle_rank=middle,
        torsion=tors,
        full_graded=graded,
        homotopy_sphere=sphere,
        description=description,
    )


def orbit_space_rational_homology(
    a: ExponentVector, support: tuple[int, ...]
) -> OrbitSpaceHomology:
    """Rational homology of the orbit space attached to `support`.

    Rank 1 in every even degree of 0..2|support|-4, plus kappa of the
    support in the middle degree.  When |support| is odd the middle degree
    is odd and the kappa part is the only contribution there.
    """
    support = tuple(sorted(support))
    if len(support) < 2:
        raise ValueError("support needs at least two indices")
    dim = 2 * len(support) - 4
    extra = kappa(a, support)
    ranks = []
    for q in range(dim + 1):
        rank = 1 if q % 2 == 0 else 0
        if 2 * q == dim:
            rank += extra
        ranks.append(rank)
    return OrbitSpaceHomology(dimension=dim, ranks=tuple(ranks))

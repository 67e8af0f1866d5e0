import itertools
import random

import pytest

from brieskorn_ch.randell import (
    ExponentVector,
    full_homology,
    kappa,
    orbit_space_rational_homology,
    torsion,
)
from randell_oracle import kappa_oracle, torsion_oracle

ALL = (0, 1, 2, 3)


def test_exponent_vector_rejects_short_input():
    with pytest.raises(ValueError):
        ExponentVector((2, 2))


def test_exponent_vector_rejects_unit_exponents():
    with pytest.raises(ValueError):
        ExponentVector((1, 2, 2, 2))


def test_kappa_examples():
    assert kappa(ExponentVector((4, 2, 2, 2)), ALL) == 1
    assert kappa(ExponentVector((7, 7, 7, 7)), ALL) == 186
    assert kappa(ExponentVector((3, 5, 2, 2)), ALL) == 0


def test_kappa_needs_two_indices():
    with pytest.raises(ValueError):
        kappa(ExponentVector((4, 2, 2, 2)), (1,))


def test_torsion_examples():
    assert torsion(ExponentVector((4, 2, 2, 2))) == ()
    assert torsion(ExponentVector((7, 7, 7, 7))) == ()
    # frozen from the standalone oracle run
    assert torsion(ExponentVector((2, 3, 3, 3, 3))) == (2, 2, 2, 2, 2, 2)


def test_torsion_unit_cotangent_s4():
    # H_3 of the unit cotangent bundle of S^4 is Z/2 (Euler number 2)
    assert torsion(ExponentVector((2, 2, 2, 2, 2))) == (2,)


def test_full_homology_examples():
    rep = full_homology(ExponentVector((4, 2, 2, 2)))
    assert rep.middle_rank == 1
    assert rep.torsion == ()
    assert rep.description == "#_1 (S²×S³)"
    assert rep.full_graded == {0: (1, ()), 2: (1, ()), 3: (1, ()), 5: (1, ())}

    rep = full_homology(ExponentVector((7, 7, 7, 7)))
    assert rep.middle_rank == 186
    assert rep.description == "#_186 (S²×S³)"

    rep = full_homology(ExponentVector((3, 5, 2, 2)))
    assert rep.homotopy_sphere
    assert rep.description == "homotopy sphere"
    assert rep.full_graded == {0: (1, ()), 5: (1, ())}


def test_full_homology_carries_torsion_without_free_part():
    rep = full_homology(ExponentVector((2, 2, 2, 2, 2)))
    assert rep.middle_rank == 0
    assert rep.full_graded[3] == (0, (2,))
    assert not rep.homotopy_sphere
    assert rep.description == "Brieskorn manifold (unclassified)"


def test_orbit_space_homology_examples():
    a = ExponentVector((6, 2, 2, 2))
    small = orbit_space_rational_homology(a, (1, 2, 3))
    assert small.dimension == 2
    assert small.ranks == (1, 0, 1)

    big = orbit_space_rational_homology(a, ALL)
    assert big.dimension == 4
    assert big.ranks == (1, 0, 2, 0, 1)

    principal = orbit_space_rational_homology(ExponentVector((7, 7, 7, 7)), ALL)
    assert principal.ranks == (1, 0, 187, 0, 1)


def test_orbit_space_point_case():
    # two indices: a point orbifold, rank 1 + kappa in degree zero
    h = orbit_space_rational_homology(ExponentVector((3, 5, 2, 2)), (2, 3))
    assert h.dimension == 0
    assert h.ranks == (2,)


def test_orbit_space_odd_middle_degree():
    # the quotient can have positive genus: kappa lands in odd degree
    h = orbit_space_rational_homology(ExponentVector((2, 3, 12, 7)), (0, 1, 2))
    assert h.dimension == 2
    assert h.ranks == (1, 2, 1)


def test_oracle_equivalence_sampled():
    rng = random.Random(5)
    for _ in range(150):
        a = tuple(rng.randint(2, 9) for _ in range(rng.randint(4, 6)))
        ev = ExponentVector(a)
        support = tuple(range(len(a)))
        assert kappa(ev, support) == kappa_oracle(a, support)
        assert torsion(ev) == torsion_oracle(a)


def test_kappa_closed_form_equal_exponents():
    for k in range(2, 13):
        for s in range(2, 7):
            ev = ExponentVector((k,) * max(s, 4))
            expected = ((k - 1) ** s - (-1) ** s) // k + (-1) ** s
            assert kappa(ev, tuple(range(s))) == expected


def test_torsion_divisibility_chain():
    rng = random.Random(11)
    for _ in range(80):
        a = tuple(rng.randint(2, 12) for _ in range(rng.randint(4, 6)))
        ds = torsion(ExponentVector(a))
        for bigger, smaller in zip(ds, ds[1:]):
            assert bigger % smaller == 0


def test_kappa_nonnegative_on_a_grid():
    for a in itertools.product((2, 3, 4, 5), repeat=4):
        for size in (2, 3, 4):
            for support in itertools.combinations(range(4), size):
                assert kappa(ExponentVector(a), support) >= 0

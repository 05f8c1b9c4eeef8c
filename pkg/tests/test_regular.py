"""Regular abelian families: construction, membership, orbits, conjugacy."""

import pytest

from hyperwreath.partitions import Partition
from hyperwreath.polyring import Poly
from hyperwreath.regular import (
    RegularFamily,
    conjugate_family,
    is_abelian,
    is_normal_in_N0,
    make_family,
    membership_solve,
    orbit_injectivity,
)
from hyperwreath.wreath import GroupElement

x1 = Poly.variable(1)
x2 = Poly.variable(2)


def test_make_family_examples():
    for n in (2, 3, 4):
        t = make_family(0, n)
        assert t.generators == tuple(GroupElement.delta(k, n) for k in range(1, n + 1))

    fam = make_family(1, 3)
    assert fam.generators[0] == GroupElement(3, [Poly.constant(1), Poly.zero(), x1])

    fam = make_family(-2, 4)
    assert fam.generators[0].layers[3] == -2 * x1


def test_make_family_rejects_small_n():
    with pytest.raises(ValueError):
        make_family(1, 1)


def test_is_abelian():
    for c in range(-3, 4):
        assert is_abelian(make_family(c, 3))
    assert is_abelian(make_family(0, 2))

    # twisting with a layer that is not the top breaks commutativity
    bad_t1 = GroupElement.from_layer_poly(x2, 3, 3) * GroupElement.delta(1, 3)
    bad = RegularFamily(
        n=3, c=0, generators=(bad_t1, GroupElement.delta(2, 3), GroupElement.delta(3, 3))
    )
    assert not is_abelian(bad)


def test_is_normal_in_N0():
    for n in (2, 3):
        for c in range(-3, 4):
            assert is_normal_in_N0(make_family(c, n))
    # a family twisted below the top layer fails normality
    skew_t1 = GroupElement.from_layer_poly(x1, 2, 3) * GroupElement.delta(1, 3)
    skew = RegularFamily(
        n=3, c=0, generators=(skew_t1, GroupElement.delta(2, 3), GroupElement.delta(3, 3))
    )
    assert not is_normal_in_N0(skew)


def test_membership_solve_examples():
    n = 4
    fam = make_family(2, n)
    assert membership_solve(GroupElement.delta(n, n), fam) == (0, 0, 0, 1)

    t1 = fam.generators[0]
    square = t1 * t1
    # the squared twist carries a correction constant in the top layer
    assert square.layers[n - 1] == 4 * x1 - 2
    assert membership_solve(square, fam) == (2, 0, 0, 0)

    lone = GroupElement.monomial(1, Partition.from_parts([1]), n, n)
    assert membership_solve(lone, fam) is None


def test_membership_round_trip_on_exponent_grid():
    n = 3
    fam = make_family(-1, n)
    for m1 in range(-3, 4):
        for m2 in range(-3, 4):
            for m3 in range(-3, 4):
                g = (
                    fam.generators[0] ** m1
                    * fam.generators[1] ** m2
                    * fam.generators[2] ** m3
                )
                assert membership_solve(g, fam) == (m1, m2, m3)


def test_orbit_injectivity_examples():
    t = make_family(0, 3)
    assert orbit_injectivity(t, 2)
    assert orbit_injectivity(make_family(1, 3), 2)

    degenerate = RegularFamily(
        n=3,
        c=0,
        generators=(
            GroupElement.identity(3),
            GroupElement.delta(2, 3),
            GroupElement.delta(3, 3),
        ),
    )
    assert not orbit_injectivity(degenerate, 2)


def test_translation_orbit_is_negation():
    n = 3
    t = make_family(0, n)
    for m in ((1, 2, -1), (0, 0, 2), (-2, 1, 0)):
        g = t.generators[0] ** m[0] * t.generators[1] ** m[1] * t.generators[2] ** m[2]
        assert g.act((0, 0, 0)) == tuple(-v for v in m)


def test_conjugate_family_examples():
    assert conjugate_family(make_family(0, 3), 1).c == 2
    assert conjugate_family(make_family(1, 3), 1).c == 3
    fam = make_family(2, 4)
    assert conjugate_family(fam, 0) is fam
    for d in range(-3, 4):
        assert conjugate_family(make_family(0, 4), d).c == 2 * d
        assert conjugate_family(make_family(1, 4), d).c == 2 * d + 1


def test_conjugation_classes_split_by_parity():
    even = {conjugate_family(make_family(0, 3), d).c for d in range(-3, 4)}
    odd = {conjugate_family(make_family(1, 3), d).c for d in range(-3, 4)}
    assert even == {2 * d for d in range(-3, 4)}
    assert odd == {2 * d + 1 for d in range(-3, 4)}
    assert not (even & odd)


def test_central_generator_is_in_every_family():
    for n in (2, 3, 4):
        for c in range(-3, 4):
            fam = make_family(c, n)
            sol = membership_solve(GroupElement.delta(n, n), fam)
            assert sol is not None

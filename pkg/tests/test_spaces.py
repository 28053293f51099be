"""Space models, integration, Chern-to-Pontryagin, classifying presentations."""

from fractions import Fraction

import pytest

from charclasses.rings import Ring
from charclasses.spaces import (
    SpaceModel,
    bso_presentation,
    chern_to_pontryagin,
    cp,
    hp,
    integrate,
    point,
    product_space,
    sphere,
)


# ----------------------------------------------------------------------
# model validation


def test_space_model_validates_fundamental_degree():
    ring = Ring(0, [("y", 4)], [("y^3", "0")])
    with pytest.raises(ValueError):
        SpaceModel(
            ring=ring,
            dimension=8,
            fundamental=ring.monomial("y"),
            total_p=ring.one(),
            euler=ring.zero(),
        )


def test_space_model_validates_total_p_unit():
    ring = Ring(0, [("y", 4)], [("y^3", "0")])
    with pytest.raises(ValueError):
        SpaceModel(
            ring=ring,
            dimension=8,
            fundamental=ring.monomial("y^2"),
            total_p=ring.gen("y"),
            euler=ring.zero(),
        )


def test_space_model_validates_euler_degree():
    ring = Ring(0, [("y", 4)], [("y^3", "0")])
    with pytest.raises(ValueError):
        SpaceModel(
            ring=ring,
            dimension=8,
            fundamental=ring.monomial("y^2"),
            total_p=ring.one(),
            euler=ring.gen("y"),
        )


def test_space_model_rejects_stiefel_whitney_outside_char_two():
    ring = Ring(0, [("y", 4)], [("y^3", "0")])
    with pytest.raises(ValueError):
        SpaceModel(
            ring=ring,
            dimension=8,
            fundamental=ring.monomial("y^2"),
            total_p=ring.one(),
            euler=ring.zero(),
            total_w=ring.one(),
        )


# ----------------------------------------------------------------------
# built-in models


def test_point_model():
    pt = point()
    assert pt.dimension == 0
    assert integrate(pt, pt.ring.one()) == 1
    pt2 = point(2)
    assert pt2.ring.characteristic == 2
    assert pt2.total_w == pt2.ring.one()


def test_sphere_model():
    s = sphere(12)
    assert s.dimension == 12
    assert s.total_p == s.ring.one()
    assert integrate(s, s.euler) == 2
    assert (s.ring.gen("x") ** 2).is_zero()


def test_odd_spheres_are_rejected():
    with pytest.raises(ValueError):
        sphere(3)
    with pytest.raises(ValueError):
        sphere(0)


def test_sphere_generator_rename():
    s = sphere(4, gen="u")
    assert s.ring.names == ("u",)
    assert integrate(s, s.euler) == 2


def test_cp_models():
    plane = cp(2)
    assert plane.dimension == 4
    assert plane.total_p == plane.ring.poly("1 + 3*h^2")
    assert integrate(plane, plane.euler) == 3
    line = cp(1)
    assert line.total_p == line.ring.one()
    assert integrate(line, line.euler) == 2
    three = cp(3)
    assert three.total_p == three.ring.poly("1 + 4*h^2")
    assert integrate(three, three.euler) == 4
    with pytest.raises(ValueError):
        cp(0)


def test_hp_models():
    plane = hp(2)
    assert plane.dimension == 8
    assert plane.total_p == plane.ring.poly("1 + 2*y + 7*y^2")
    assert plane.euler == plane.ring.poly("3*y^2")
    assert integrate(plane, plane.euler) == 3
    four_sphere = hp(1)
    assert four_sphere.total_p == four_sphere.ring.one()
    assert integrate(four_sphere, four_sphere.euler) == 2


def test_hp_beyond_two_is_rejected():
    with pytest.raises(ValueError):
        hp(3)
    with pytest.raises(ValueError):
        hp(0)


# ----------------------------------------------------------------------
# integration and products


def test_integrate_reads_fundamental_coefficient():
    plane = hp(2)
    y = plane.ring.gen("y")
    assert integrate(plane, y * y * Fraction(7, 3)) == Fraction(7, 3)
    assert integrate(plane, y) == 0
    assert integrate(plane, plane.ring.one()) == 0


def test_product_space_kunneth():
    total = product_space(sphere(12), hp(2))
    assert total.dimension == 20
    assert total.ring.names == ("x", "y")
    assert integrate(total, total.euler) == 6
    x = total.ring.gen("x")
    y = total.ring.gen("y")
    assert integrate(total, x * y * y) == 1
    assert integrate(total, x * y) == 0
    assert total.total_p == total.ring.poly("1 + 2*y + 7*y^2")


def test_product_space_fundamental_is_tensor_of_factors():
    total = product_space(cp(2), cp(2, gen="k"))
    assert total.fundamental == total.ring.monomial("h^2*k^2")
    assert integrate(total, total.ring.poly("h^2*k^2")) == 1


def test_product_space_name_collision():
    with pytest.raises(ValueError):
        product_space(cp(2), cp(3))
    renamed = product_space(cp(2), cp(3, gen="k"))
    assert renamed.ring.names == ("h", "k")


# ----------------------------------------------------------------------
# Chern to Pontryagin


def test_chern_to_pontryagin_projective_planes():
    ring = Ring(0, [("h", 2)], [("h^3", "0")])
    h = ring.gen("h")
    total_c = (ring.one() + h) ** 3
    assert chern_to_pontryagin(total_c) == ring.poly("1 + 3*h^2")


def test_chern_to_pontryagin_rank_two_generic():
    ring = Ring(0, [("c1", 2), ("c2", 4)])
    total_c = ring.poly("1 + c1 + c2")
    # p_1 = c_1^2 - 2 c_2, p_2 = c_2^2
    expected = ring.poly("1 + c1^2 - 2*c2 + c2^2")
    assert chern_to_pontryagin(total_c) == expected


def test_chern_to_pontryagin_validation():
    ring = Ring(0, [("c1", 2)])
    with pytest.raises(ValueError):
        chern_to_pontryagin(ring.gen("c1"))
    char2 = Ring(2, [("w2", 2)])
    with pytest.raises(ValueError):
        chern_to_pontryagin(char2.one())


# ----------------------------------------------------------------------
# classifying-space presentations


def test_bso_even_dimension():
    ring = bso_presentation(4)
    assert ring.names == ("e", "p1", "p2")
    assert ring.degrees == (4, 4, 8)
    e = ring.gen("e")
    assert e * e == ring.gen("p2")
    assert e ** 4 == ring.gen("p2") ** 2


def test_bso_euler_relation_squares_to_top_pontryagin():
    for dimension in (2, 4, 6, 8):
        ring = bso_presentation(dimension)
        m = dimension // 2
        e = ring.gen("e")
        assert e * e == ring.gen(f"p{m}")


def test_bso_without_euler_relation():
    ring = bso_presentation(4, euler_relation=False)
    assert ring.names == ("e", "p1", "p2")
    assert not ring.rules
    e = ring.gen("e")
    assert e * e != ring.gen("p2")


def test_bso_odd_dimension():
    ring = bso_presentation(5)
    assert ring.names == ("p1", "p2")
    assert ring.degrees == (4, 8)
    assert not ring.rules


def test_bso_characteristic_two():
    ring = bso_presentation(5, 2)
    assert ring.names == ("w2", "w3", "w4", "w5")
    assert ring.degrees == (2, 3, 4, 5)
    assert ring.characteristic == 2
    assert not ring.rules


def test_bso_validation():
    with pytest.raises(ValueError):
        bso_presentation(0)
    with pytest.raises(ValueError):
        bso_presentation(4, 5)

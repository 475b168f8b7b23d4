import sys
from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.errors import InvalidInput, InvalidMarks
from exactnum.gaussian import I, ONE, ZERO, GaussianRational
from exactnum.points import INFINITY, ProjectivePoint
from spherediff.automorphisms import marked_automorphisms
from spherediff.differential import DifferentialKind, SphereDifferential, kind_of
from spherediff.mobius import MobiusMap

P = ProjectivePoint.finite
G = GaussianRational


def _xi(*factors, leading=ONE) -> SphereDifferential:
    return SphereDifferential(G.coerce(leading), tuple((G.parse(p), e) for p, e in factors))


def test_dz_has_a_double_pole_at_infinity():
    dz = SphereDifferential.dz()

    assert dz.order_at(INFINITY) == -2
    assert dz.singular_points() == [INFINITY]
    assert dz.residues() == {INFINITY: ZERO}
    assert kind_of(dz) is DifferentialKind.SECOND


def test_simple_poles_and_residues():
    xi = _xi((0, -1), (1, -1))

    assert xi.orders() == {P(0): -1, P(1): -1}
    assert xi.order_at(INFINITY) == 0
    assert xi.residue_at(P(0)) == -ONE
    assert xi.residue_at(P(1)) == ONE
    assert xi.kind() is DifferentialKind.THIRD

    log = _xi((0, -1))
    assert log.residues() == {P(0): ONE, INFINITY: -ONE}


def test_residues_agree_with_sympy():
    z = sympy.Symbol("z")
    xi = _xi(("i", 1), (0, -2), (-1, -1), leading=3)
    expr = 3 * (z - sympy.I) / (z**2 * (z + 1))

    for point in (0, -1):
        assert xi.residue_at(P(point)) == G.from_sympy(sympy.residue(expr, z, point))
    assert xi.order_at(INFINITY) == 0


def test_higher_order_pole_at_infinity():
    xi = _xi((0, 2))
    assert xi.order_at(INFINITY) == -4
    assert xi.residue_at(INFINITY) == ZERO
    assert xi.kind() is DifferentialKind.SECOND


def test_constructor_rejects_bad_factors():
    with pytest.raises(InvalidInput):
        SphereDifferential(ZERO, ())
    with pytest.raises(InvalidInput):
        _xi((0, 1), (0, -1))
    with pytest.raises(InvalidInput):
        _xi((2, 0))
    assert SphereDifferential.create(ONE, [(ZERO, 1), (ZERO, -1)]) == SphereDifferential.dz()


def test_from_json_round_trip():
    xi = _xi(("1/2+i", -3), (2, 1), leading="2-i")
    assert SphereDifferential.from_json(xi.to_json()) == xi
    with pytest.raises(InvalidInput):
        SphereDifferential.from_json({"factors": [{"exponent": 2}]})


def test_mobius_from_triples_sends_points():
    source = [P(0), P(1), INFINITY]
    target = [P(1), INFINITY, P(0)]
    f = MobiusMap.from_triples(source, target)

    assert [f(p) for p in source] == target
    assert f.compose_after(f.inverse()).is_identity
    assert f.compose_after(f).compose_after(f).is_identity
    with pytest.raises(InvalidInput):
        MobiusMap(ONE, ONE, ONE, ONE)


def test_pullbacks():
    negate = MobiusMap.scaling(-ONE)

    assert _xi((0, -1)).pullback(negate) == _xi((0, -1))
    assert SphereDifferential.dz().pullback(negate) == SphereDifferential.dz().scaled(-ONE)
    shifted = _xi((0, -1), (1, -1)).pullback(MobiusMap.translation(ONE))
    assert shifted == _xi((-1, -1), (0, -1))

    inversion = MobiusMap(ZERO, ONE, ONE, ZERO)
    # z -> 1/z sends dz to -dz/z^2
    assert SphereDifferential.dz().pullback(inversion) == _xi((0, -2), leading=-1)


def test_pullback_moves_orders_with_the_map():
    xi = _xi((I, 3), (-1, -2), (Fraction(1, 2), -1), leading=5)
    f = MobiusMap(G(2), ONE, G(1), G(3))
    pulled = xi.pullback(f)
    for point, order in pulled.orders().items():
        assert xi.order_at(f(point)) == order


def test_symmetric_differential_has_a_swap():
    xi = _xi((0, -1), (1, -1), (-1, -1))
    marks = [(P(0), "a"), (P(1), "a"), (P(-1), "a"), (INFINITY, "a")]
    autos = marked_automorphisms(xi, marks)

    assert autos.order == 2
    assert MobiusMap.scaling(-ONE) in autos.maps

    relabelled = [(P(0), "a"), (P(1), "b"), (P(-1), "c"), (INFINITY, "a")]
    assert marked_automorphisms(xi, relabelled).is_trivial


def test_two_marks_use_the_normal_form():
    cubic = marked_automorphisms(_xi((0, 2)), [(P(0), 0), (INFINITY, 0)])
    assert cubic.order == 3
    assert len(cubic.maps) == 1

    linear = marked_automorphisms(_xi((0, 1)), [(P(0), 0), (INFINITY, 0)])
    assert linear.order == 2
    assert set(linear.maps) == {MobiusMap.identity(), MobiusMap.scaling(-ONE)}

    shifted = marked_automorphisms(_xi((1, 3)), [(P(1), 0), (INFINITY, 0)])
    assert shifted.order == 4
    assert len(shifted.maps) == 4


def test_infinite_automorphism_groups():
    assert marked_automorphisms(SphereDifferential.dz(), [(INFINITY, 0)]).infinite
    assert marked_automorphisms(_xi((0, -1)), [(P(0), 0), (INFINITY, 0)]).infinite


def test_marks_must_cover_singularities():
    xi = _xi((0, -1), (1, -1))
    with pytest.raises(InvalidMarks):
        marked_automorphisms(xi, [(P(0), 0), (INFINITY, 0)])
    with pytest.raises(InvalidMarks):
        marked_automorphisms(xi, [(P(0), 0), (P(0), 1), (P(1), 0)])


def test_distinct_residues_leave_only_the_identity():
    xi = _xi((0, -1), (1, -1), (3, -1))
    marks = [(P(0), 0), (P(1), 0), (P(3), 0), (INFINITY, 0)]
    autos = marked_automorphisms(xi, marks)

    assert xi.order_at(INFINITY) == 1
    assert autos.is_trivial
    assert autos.maps == (MobiusMap.identity(),)


small = st.builds(G, st.integers(-3, 3), st.integers(-3, 3))


@st.composite
def mobius_maps(draw):
    a, b, c, d = (draw(small) for _ in range(4))
    assume(not (a * d - b * c).is_zero)
    return MobiusMap(a, b, c, d)


@st.composite
def differentials(draw):
    points = draw(st.lists(small, min_size=1, max_size=3, unique=True))
    exponents = draw(st.lists(st.sampled_from([-3, -2, -1, 1, 2]), min_size=len(points), max_size=len(points)))
    leading = draw(small.filter(lambda z: not z.is_zero))
    return SphereDifferential(leading, tuple(zip(points, exponents)))


@settings(max_examples=40, deadline=None)
@given(differentials(), mobius_maps(), mobius_maps())
def test_pullback_respects_composition(xi, f, g):
    assert xi.pullback(g.compose_after(f)) == xi.pullback(g).pullback(f)
    assert xi.pullback(MobiusMap.identity()) == xi


@settings(max_examples=40, deadline=None)
@given(differentials(), mobius_maps())
def test_pullback_keeps_the_kind(xi, f):
    assert kind_of(xi.pullback(f)) is kind_of(xi)

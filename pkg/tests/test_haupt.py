import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.errors import InvalidCharacter, NotSymplectic
from cover.spec import CoverSpec
from cover.surface import covered_surface
from exactnum.gaussian import GaussianRational
from exactnum.points import INFINITY, ProjectivePoint
from groups.catalog import small_group
from haupt.character import (
    HauptVerdict,
    LatticeKind,
    PeriodCharacter,
    character_from_periods,
    character_from_surface,
    factors_through_sphere_cover,
    haupt_realizable,
    image_lattice,
    image_lattice_status,
    is_symplectic,
    symplectic_change,
    volume,
)
from spherediff.differential import DifferentialKind, SphereDifferential

G = GaussianRational.parse


def _chi(alpha, beta, peripheral=()) -> PeriodCharacter:
    return PeriodCharacter(genus=len(alpha), alpha=tuple(alpha), beta=tuple(beta), peripheral=tuple(peripheral))


def _random_symplectic(rng: random.Random, genus: int, steps: int = 6) -> sympy.Matrix:
    """Product of block transvections and GL(g, Z) moves."""

    n = 2 * genus
    m = sympy.eye(n)
    for _ in range(steps):
        i, j = rng.randrange(genus), rng.randrange(genus)
        sign = rng.choice([1, -1])
        block = sympy.zeros(genus)
        move = rng.randrange(3)
        if move < 2:
            block[i, j] += sign
            if i != j:
                block[j, i] += sign
            step = sympy.eye(n)
            if move == 0:
                step[:genus, genus:] = block
            else:
                step[genus:, :genus] = block
        else:
            a = sympy.eye(genus)
            if i != j:
                a[i, j] = sign
            step = sympy.diag(a, a.inv().T)
        m = step * m
    return m


def test_volume_and_lattice_verdicts():
    square = _chi(["1"], ["i"])
    assert volume(square) == 1
    assert haupt_realizable(square).verdict is HauptVerdict.FAILS_LATTICE_CONDITION

    doubled = _chi(["1", "1"], ["i", "i"])
    result = haupt_realizable(doubled)
    assert result.verdict is HauptVerdict.REALIZABLE_FIRST_KIND
    assert result.volume == 2
    assert result.lattice.covolume == 1

    flipped = _chi(["1"], ["-i"])
    assert haupt_realizable(flipped).verdict is HauptVerdict.FAILS_VOLUME
    assert haupt_realizable(PeriodCharacter(genus=0)).verdict is HauptVerdict.FAILS_VOLUME


def test_image_lattice_status():
    mixed = _chi(["1", "i"], ["2*i", "1/3"])
    assert image_lattice_status(_chi(["1"], ["2"])).kind is LatticeKind.RANK1
    assert volume(mixed) == Fraction(5, 3)
    assert image_lattice_status(mixed).kind is LatticeKind.LATTICE
    assert image_lattice_status(PeriodCharacter(genus=1, alpha=("0",), beta=("0",))).kind is LatticeKind.RANK0


def test_characters_with_punctures():
    chi = _chi(["1"], ["i"], ["2", "-2"])
    assert haupt_realizable(chi).verdict is HauptVerdict.REALIZABLE_WITH_POLES
    noted = haupt_realizable(chi, requested_kind=DifferentialKind.SECOND)
    assert noted.notes
    assert not haupt_realizable(chi, requested_kind=DifferentialKind.THIRD).notes
    assert haupt_realizable(_chi([], [], ["0"])).verdict is HauptVerdict.REALIZABLE_WITH_POLES


def test_invalid_characters():
    with pytest.raises(InvalidCharacter):
        PeriodCharacter(genus=-1)
    with pytest.raises(InvalidCharacter):
        PeriodCharacter(genus=2, alpha=("1",), beta=("i", "1"))
    with pytest.raises(InvalidCharacter):
        _chi(["1"], ["i"], ["1", "1"])


def test_named_symplectic_moves():
    square = _chi(["1"], ["i"])
    rotated = symplectic_change(square, [[0, 1], [-1, 0]])
    assert (rotated.alpha, rotated.beta) == ((G("i"),), (G("-1"),))

    sheared = symplectic_change(square, [[1, 1], [0, 1]])
    assert (sheared.alpha, sheared.beta) == ((G("1+i"),), (G("i"),))
    assert volume(sheared) == volume(square)


def test_non_symplectic_matrices_are_refused():
    chi = _chi(["1"], ["i"])
    with pytest.raises(NotSymplectic):
        symplectic_change(chi, [[1, 0], [0, 2]])
    with pytest.raises(NotSymplectic):
        symplectic_change(chi, [[1, sympy.Rational(1, 2)], [0, 1]])
    with pytest.raises(NotSymplectic):
        symplectic_change(PeriodCharacter(genus=0), [[1]])
    assert symplectic_change(PeriodCharacter(genus=0), []) == PeriodCharacter(genus=0)
    assert not is_symplectic([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1)


@pytest.mark.parametrize("genus", [1, 2, 3])
def test_verdicts_are_symplectic_invariants(genus):
    rng = random.Random(genus)
    values = ["1", "i", "1/2+i", "2-3*i", "-1/3", "3*i"]
    chi = _chi(values[:genus], values[3 : 3 + genus])
    before = haupt_realizable(chi)
    for _ in range(200):
        matrix = _random_symplectic(rng, genus)
        assert is_symplectic(matrix.tolist(), genus)
        moved = symplectic_change(chi, matrix.tolist())
        after = haupt_realizable(moved)
        assert after.verdict is before.verdict
        assert after.volume == before.volume
        assert image_lattice(moved) == image_lattice(chi)


exact_values = st.builds(
    lambda re, im: GaussianRational(re, im),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)


pairs = st.lists(st.tuples(exact_values, exact_values), max_size=3)


@settings(max_examples=60, deadline=None)
@given(pairs, pairs)
def test_volume_is_additive_under_direct_sums(left, right):
    a = _chi([x for x, _ in left], [y for _, y in left])
    b = _chi([x for x, _ in right], [y for _, y in right])
    total = a.direct_sum(b)

    assert total.genus == a.genus + b.genus
    assert volume(total) == volume(a) + volume(b)


def test_sphere_cover_factorization():
    assert not factors_through_sphere_cover(_chi(["1"], ["i"]))
    assert factors_through_sphere_cover(_chi(["0"], ["0"]))
    assert factors_through_sphere_cover(_chi(["1"], ["i"], ["1", "-1"]))


def test_characters_from_covers():
    group = small_group("C2")
    t = group.generators[0]
    base = SphereDifferential.create(
        GaussianRational(1), [(GaussianRational(0), -1), (GaussianRational(1), -1), (GaussianRational(-1), -1)]
    )
    marks = tuple(ProjectivePoint.finite(p) for p in (0, 1, -1)) + (INFINITY,)
    surface = covered_surface(CoverSpec(base, marks, group, (t, t, t, t)))

    chi = character_from_surface(surface)
    assert chi.genus == 1
    assert chi.punctures == 3
    assert chi.alpha == (G("1/2"),)
    assert haupt_realizable(chi).verdict is HauptVerdict.REALIZABLE_WITH_POLES
    assert factors_through_sphere_cover(chi)

    wrapped = character_from_periods([G("1"), G("i")], [])
    assert haupt_realizable(wrapped).verdict is HauptVerdict.FAILS_LATTICE_CONDITION
    with pytest.raises(InvalidCharacter):
        character_from_periods([G("1"), G("i"), G("2")], [])

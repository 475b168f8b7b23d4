import sys
from itertools import product as cartesian
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.checks import CheckLedger
from core.errors import GroupTooLarge, InvalidInput, NotGenerating
from groups.catalog import catalog_groups, psl27, small_group
from groups.group import PermGroup, generate
from groups.kernel import kernel_abelianization
from groups.permutation import FreeWord, Permutation, element_order, product
from groups.search import find_generating_tuple


def _perm(*images: int) -> Permutation:
    return Permutation(tuple(images))


def test_products_read_left_to_right():
    swap01 = Permutation.from_cycles(3, [(0, 1)])
    swap12 = Permutation.from_cycles(3, [(1, 2)])

    # (0 1) then (1 2) sends 0 to 2
    assert (swap01 * swap12)(0) == 2
    assert product([swap01, swap12], 3) == swap01 * swap12
    assert (swap01 * swap12).order() == 3
    assert swap01.inverse() == swap01
    assert Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]) ** 5 == Permutation.identity(5)
    assert str(Permutation.from_cycles(4, [(0, 2), (1, 3)])) == "(0 2)(1 3)"


def test_invalid_permutation_images():
    with pytest.raises(InvalidInput):
        _perm(0, 0, 1)
    with pytest.raises(InvalidInput):
        _perm(0, 1) * _perm(0, 1, 2)


def test_free_words_reduce_and_evaluate():
    word = FreeWord((1, 2, -2, -1, 2))
    assert word.letters == (2,)
    assert (FreeWord((1, 2)) * FreeWord((1, 2)).inverse()).letters == ()
    assert FreeWord((1, -2, 1)).exponent_sums(2) == [2, -1]

    t = _perm(1, 2, 0)
    s = _perm(1, 0, 2)
    assert FreeWord((1, -2)).evaluate([t, s], 3) == t * s.inverse()
    with pytest.raises(InvalidInput):
        FreeWord((0,))


def test_psl27_has_order_168():
    group = psl27()

    assert group.order == 168
    assert not group.is_abelian()
    assert group.center_order() == 1
    assert group.order_statistics() == {1: 1, 2: 21, 3: 56, 4: 42, 7: 48}


def test_generation_cap(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("POLECOVER_GROUP_CAP", "100")
    gens = [Permutation.from_cycles(5, [tuple(range(5))]), Permutation.from_cycles(5, [(0, 1)])]
    with pytest.raises(GroupTooLarge):
        generate(5, gens)
    assert generate(5, gens, cap=200).order == 120


def test_right_multiplication_table():
    group = small_group("S3")
    g = group.element(3)
    table = group.right_multiplication(g)
    for k, e in enumerate(group.elements):
        assert group.elements[int(table[k])] == e * g


def test_s3_first_generating_tuple():
    group = generate(3, [_perm(1, 0, 2), _perm(1, 2, 0)])
    found = find_generating_tuple(group, (2, 2, 3))

    assert found == (_perm(0, 2, 1), _perm(1, 0, 2), _perm(2, 0, 1))
    assert [element_order(g) for g in found] == [2, 2, 3]
    assert product(found, 3).is_identity
    assert group.generated_by(found)


def test_cyclic_tuple_and_missing_tuples():
    c6 = small_group("C6")
    found = find_generating_tuple(c6, (2, 3, 6))
    assert found is not None
    assert [g.order() for g in found] == [2, 3, 6]
    assert product(found, c6.degree).is_identity

    assert find_generating_tuple(small_group("C5"), (2, 3, 7)) is None
    assert find_generating_tuple(small_group("C1"), (2, 3, 7)) is None
    # abelian groups never have (2,3,7) tuples
    assert find_generating_tuple(small_group("C6"), (2, 3, 7)) is None


def test_psl27_has_hurwitz_tuple():
    group = psl27()
    found = find_generating_tuple(group, (2, 3, 7))

    assert found is not None
    assert [g.order() for g in found] == [2, 3, 7]
    assert product(found, 8).is_identity


def _derived_subgroup(group: PermGroup) -> set:
    commutators = {a.inverse() * b.inverse() * a * b for a in group.elements for b in group.elements}
    commutators.discard(group.identity)
    if not commutators:
        return {group.identity}
    return set(generate(group.degree, sorted(commutators), cap=group.order).elements)


def _images_for(group: PermGroup) -> list:
    images = [g for g in group.generators if not g.is_identity][:3]
    if len(images) < 3:
        images.append(group.elements[-1])
    return images


@pytest.mark.parametrize("name,group", [(n, g) for n, g in catalog_groups(12) if g.order > 1])
def test_kernel_lattice_matches_brute_force(name, group):
    images = _images_for(group)
    ledger = CheckLedger()
    lattice = kernel_abelianization(group, images, ledger=ledger)
    derived = _derived_subgroup(group)

    assert ledger.all_passed
    assert lattice.rank == len(images)
    for vector in cartesian(range(-4, 5), repeat=len(images)):
        element = product((g ** e for g, e in zip(images, vector)), group.degree)
        assert lattice.contains(list(vector)) == (element in derived), (name, vector)


def test_kernel_requires_generation():
    group = small_group("C4")
    square = group.generators[0] ** 2
    with pytest.raises(NotGenerating):
        kernel_abelianization(group, [square])


def test_cyclic_kernel_index():
    group = small_group("C6")
    lattice = kernel_abelianization(group, list(group.generators))
    assert lattice.rank == 1
    assert lattice.determinant() == 6

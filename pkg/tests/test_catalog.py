import sys
from collections import Counter
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.errors import InvalidInput
from groups.catalog import (
    SMALL_GROUPS,
    catalog_groups,
    cyclic_model,
    semidirect_model,
    small_group,
    structural_signature,
)

EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}


@pytest.fixture(scope="module")
def catalog():
    return catalog_groups(16)


def test_every_group_up_to_sixteen(catalog):
    assert len(catalog) == 42
    assert Counter(g.order for _, g in catalog) == EXPECTED_COUNTS


def test_catalog_entries_are_pairwise_non_isomorphic(catalog):
    signatures = [structural_signature(g) for _, g in catalog]
    assert len(set(signatures)) == len(signatures)


def test_names_match_orders():
    assert small_group("A4").order == 12
    assert small_group("Dic3").order == 12
    assert small_group("SD16").order == 16
    assert not small_group("Q8").is_abelian()
    assert small_group("Q8").order_statistics() == {1: 1, 2: 1, 4: 6}
    assert small_group("D8").order_statistics() == {1: 1, 2: 5, 4: 2}


def test_catalog_filter_by_order():
    names = [name for name, _ in catalog_groups(4)]
    assert names == ["C1", "C2", "C3", "C4", "C2xC2"]
    assert set(SMALL_GROUPS) >= set(names)


def test_unknown_names_and_bad_models():
    with pytest.raises(InvalidInput):
        small_group("M11")
    with pytest.raises(InvalidInput):
        semidirect_model(5, 2, 2)
    assert cyclic_model(1).regular_representation().order == 1

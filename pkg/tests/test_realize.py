import copy
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.errors import InvalidInput, NotALattice, NotGenerating
from exactnum.gaussian import ONE, GaussianRational
from exactnum.lattice import IntegerLattice
from exactnum.points import INFINITY, ProjectivePoint
from groups.catalog import catalog_groups, psl27, small_group
from groups.permutation import Permutation, product
from realize.certificate import NOT_APPLICABLE
from realize.pipeline import (
    pad_generators,
    realize_group,
    realize_hurwitz,
    realize_period_subgroup,
    third_kind_base,
    verify_certificate,
)
from spherediff.differential import SphereDifferential

P = ProjectivePoint.finite


@pytest.fixture(scope="module")
def klein_certificate():
    return realize_hurwitz(psl27())


def test_padding_rules():
    c2 = small_group("C2")
    t = c2.generators[0]

    assert pad_generators([c2.identity], 2) == [c2.identity, c2.identity]
    assert pad_generators([t], 2) == [t, t, t]
    s3 = small_group("S3")
    a, b = s3.generators
    assert pad_generators([a, s3.identity, b], s3.degree) == [a, b]


def test_padding_keeps_every_generator():
    group = small_group("C2xC2xC2")
    generators = list(group.generators)
    padded = pad_generators(generators, group.degree)

    assert len(generators) == 3
    assert padded[: len(generators)] == generators
    assert group.generated_by(padded)
    assert not product(padded, group.degree).is_identity


@pytest.mark.parametrize("name,group", catalog_groups(16))
def test_padded_generators_generate_the_group(name, group):
    generators = list(group.generators) or [group.identity]
    padded = pad_generators(generators, group.degree)

    assert len(padded) >= 2
    assert group.generated_by(padded), name


@pytest.mark.parametrize("name", ["C2xC2xC2", "C4xC2xC2", "C2xD8", "C2xQ8", "Pauli", "C2^4"])
def test_groups_with_three_or_more_generators(name):
    group = small_group(name)
    cert = realize_group(group, list(group.generators))

    assert cert.aut.value == group.order
    assert cert.spec.group.generated_by(list(cert.spec.monodromy))


@pytest.mark.parametrize("name,group", catalog_groups(16))
def test_every_catalog_group_is_realized_exactly(name, group):
    generators = list(group.generators) or [group.identity]
    cert = realize_group(group, generators, kind="second")
    payload = cert.to_dict()

    assert payload["aut"] == str(group.order), name
    assert payload["is_large"] == "yes"
    assert payload["kind"] == "second"
    assert payload["period_lattice"]["rank"] == 0
    assert all(check["status"] == "passed" for check in payload["checks"])
    assert payload["projective"] is not None


def test_cyclic_group_of_order_two():
    group = small_group("C2")
    cert = realize_group(group, list(group.generators), kind="second")
    payload = cert.to_dict()

    assert [str(p) for p in cert.spec.marks] == ["0", "1", "2", "inf"]
    assert cert.surface.singularity_table() == {7: 1, 5: 1, 3: 1, -15: 1}
    assert payload["genus"] == 1
    assert payload["aut"] == "2"
    assert payload["bound"] == NOT_APPLICABLE


def test_third_kind_realization():
    group = small_group("C2")
    cert = realize_group(group, list(group.generators), kind="third", residue="1")
    payload = cert.to_dict()

    assert payload["kind"] == "third"
    assert payload["aut"] == "2"
    assert payload["projective"] is None
    assert cert.periods.generators() == [GaussianRational(1)]
    assert payload["construction"]["residue"] == {"re": "1", "im": "0"}

    xi, extra = third_kind_base(3, GaussianRational.parse("2-i"))
    assert extra == P(3)
    assert xi.residue_at(extra) == GaussianRational.parse("2-i")

    with pytest.raises(InvalidInput):
        realize_group(group, list(group.generators), kind="third", residue="0")


def test_input_errors():
    group = small_group("C4")
    g = group.generators[0]
    with pytest.raises(InvalidInput):
        realize_group(group, [])
    with pytest.raises(InvalidInput):
        realize_group(group, [Permutation((1, 0))])
    with pytest.raises(NotGenerating):
        realize_group(group, [g * g])
    with pytest.raises(InvalidInput):
        realize_group(group, [g], kind="first")


def test_realization_is_deterministic():
    group = small_group("Q8")
    first = realize_group(group, list(group.generators)).to_dict()
    second = realize_group(group, list(group.generators)).to_dict()
    assert first["hash"] == second["hash"]


def test_klein_hurwitz_certificate(klein_certificate):
    payload = klein_certificate.to_dict()

    assert payload["genus"] == 3
    assert payload["aut"] == "168"
    assert payload["bound"] == "OkExtremal"
    assert payload["projective"]["hurwitz_structure"] is True
    assert payload["surface"]["singularities"] == {"2": 56, "1": 84, "-8": 24}
    assert payload["period_lattice"]["rank"] == 0


def test_hurwitz_search_can_fail():
    assert realize_hurwitz(small_group("C5")) is None
    assert realize_hurwitz(small_group("C1")) is None


def test_certificates_verify(klein_certificate):
    payload = klein_certificate.to_dict()
    report = verify_certificate(payload)

    assert report.ok
    assert set(report.agreements) >= {"hash", "genus", "aut", "bound", "projective", "checks"}


def test_tampered_certificates_are_caught(klein_certificate):
    payload = klein_certificate.to_dict()

    forged = copy.deepcopy(payload)
    forged["aut"] = "336"
    report = verify_certificate(forged)
    assert not report.ok
    assert not report.agreements["hash"]
    assert not report.agreements["aut"]

    rehashed = copy.deepcopy(payload)
    rehashed["genus"] = 4
    report = verify_certificate(rehashed)
    assert not report.agreements["genus"]

    with pytest.raises(InvalidInput):
        verify_certificate({"hash": "0"})


def test_period_subgroup_realization():
    xi = SphereDifferential.create(ONE, [(GaussianRational(0), -1), (GaussianRational(1), -1)])
    marks = [P(0), P(1), INFINITY]
    cert = realize_period_subgroup(xi, marks, IntegerLattice.from_rows([[3, 0]], 2))

    assert cert.spec.group.order == 3
    assert cert.periods.generators() == [GaussianRational(3)]
    assert cert.aut.value == 3
    assert cert.surface.checks.to_list()[-1]["name"] == "period_lattice_matches_request"


def test_period_subgroup_rejections():
    xi = SphereDifferential.create(ONE, [(GaussianRational(0), -1), (GaussianRational(1), -1)])
    marks = [P(0), P(1), INFINITY]

    with pytest.raises(InvalidInput):
        realize_period_subgroup(SphereDifferential.dz(), [P(0), INFINITY], IntegerLattice.standard(2))
    with pytest.raises(InvalidInput):
        realize_period_subgroup(xi, marks, IntegerLattice.from_rational_rows([["1/2", 0]], 2))
    with pytest.raises(NotALattice):
        realize_period_subgroup(xi, marks, IntegerLattice.zero(2))

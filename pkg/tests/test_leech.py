from fractions import Fraction

import pytest

from orbilat.config import get_settings
from orbilat.core.budget import Budget
from orbilat.core.errors import BudgetExceeded, InputError
from orbilat.lattice.enumeration import theta_prefix
from orbilat.leech.coinvariant import CLASS_DATA, coinvariant_class, reconstruct_unimodular, reference_fingerprint
from orbilat.leech.golay import GOLAY_WEIGHTS, build_golay, golay_automorphism_generators
from orbilat.leech.leech import build_leech, leech_minimum
from orbilat.leech.permutations import (
    CYCLE_TYPES,
    compose,
    cycle_type,
    find_golay_automorphism,
    format_cycle_type,
    inverse,
    parse_cycle_type,
)
from orbilat.codes.catalog import catalog_code
from orbilat.codes.zp import CodeZp, monomial_equivalent, weight_distribution
from orbilat.lattice.core import discriminant_group
from orbilat.orbifold.decide import decide_extra
from orbilat.orbifold.quadratic import MINUS
from orbilat.records.artifact_store import PERMUTATION, artifact_store
from orbilat.records.schemas import VerdictBranch


def test_golay_fixture():
    golay = build_golay()
    assert golay.code.dim == 12
    assert weight_distribution(golay.code) == GOLAY_WEIGHTS
    for perm in golay_automorphism_generators().values():
        assert golay.preserved_by(perm)
    assert not golay.preserved_by((1, 0) + tuple(range(2, 24)))


def test_cycle_types():
    """Test la lecture et l'écriture des types de cycles."""
    assert parse_cycle_type("1^6 3^6") == {1: 6, 3: 6}
    assert parse_cycle_type("1 23") == {1: 1, 23: 1}
    assert format_cycle_type({1: 2, 11: 2}) == "1^2 11^2"
    assert format_cycle_type(parse_cycle_type(CYCLE_TYPES["23A"])) == "1 23"
    with pytest.raises(InputError):
        parse_cycle_type("1^5 3^6")
    with pytest.raises(InputError):
        parse_cycle_type("x^2")


def test_permutation_helpers():
    shift = tuple((i + 1) % 24 for i in range(24))
    assert compose(shift, inverse(shift)) == tuple(range(24))
    assert cycle_type(shift) == {24: 1}


def test_search_rejects_composite_order():
    with pytest.raises(InputError):
        find_golay_automorphism("2^6 4^3")


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        find_golay_automorphism("1^6 3^6", seed=1, budget=Budget(0.0), use_cache=False)


@pytest.mark.slow
def test_search_is_seeded_and_cached(tmp_path, monkeypatch):
    monkeypatch.setattr(get_settings(), "cache_dir", tmp_path)
    found = find_golay_automorphism("1^4 5^4", seed=11)
    assert found.order == 5
    assert cycle_type(found.perm) == {1: 4, 5: 4}
    assert build_golay().preserved_by(found.perm)
    assert artifact_store.list(type_filter=PERMUTATION)
    again = find_golay_automorphism("1^4 5^4", seed=11, use_cache=False)
    assert again.perm == found.perm


@pytest.mark.slow
def test_leech_lattice():
    leech = build_leech()
    assert leech.rank == 24 and leech.determinant == 1
    assert leech_minimum() == 4
    assert theta_prefix(leech, 4) == [(0, 1), (2, 0), (4, 196560)]


@pytest.mark.slow
@pytest.mark.parametrize("tag", ["3B", "5B", "7B", "11A", "23A"])
def test_coinvariant_classes(tag):
    cc = coinvariant_class(tag, seed=get_settings().seed)
    data = CLASS_DATA[tag]
    assert cc.lattice.rank == data.rank
    assert discriminant_group(cc.lattice).label() == data.discriminant
    assert all(cc.checks.values())
    lattice, h = cc
    assert h.order == data.p
    assert coinvariant_class(tag) is cc


def test_unknown_class():
    with pytest.raises(InputError):
        coinvariant_class("4A")
    with pytest.raises(InputError):
        reconstruct_unimodular("3B")


@pytest.mark.slow
def test_11a_quadratic_type_and_verdict():
    """Test : Λ_11A est de type moins et relève de la branche Leech."""
    cc = coinvariant_class("11A")
    assert cc.checks["quadratic_type"]
    fp = reference_fingerprint("11A")
    assert fp.quadratic_type == MINUS
    assert fp.rootless
    verdict = decide_extra(cc.lattice, cc.isometry)
    assert verdict.branch == VerdictBranch.LEECH_11A


@pytest.mark.slow
def test_glue_reconstruction_11a():
    glued = reconstruct_unimodular("11A")
    assert glued.determinant == 1
    assert theta_prefix(glued, 4)[1] == (2, 0)


@pytest.mark.slow
def test_23a_fixed_form():
    cc = coinvariant_class("23A")
    assert cc.fixed.rank == 2
    assert cc.checks["fixed_form"]
    assert cc.lattice.determinant == Fraction(23)
    assert cc.checks["q_minus_one"]


@pytest.mark.slow
def test_23a_verdict_and_glue():
    cc = coinvariant_class("23A")
    verdict = decide_extra(cc.lattice, cc.isometry)
    assert verdict.branch == VerdictBranch.LEECH_23A
    assert verdict.witness == {"class": "23A"}
    glued = reconstruct_unimodular("23A")
    assert glued.determinant == 1
    assert theta_prefix(glued, 4) == [(0, 1), (2, 0), (4, 196560)]


@pytest.mark.slow
@pytest.mark.parametrize("tag", ["3B", "5B", "7B"])
def test_coinvariant_round_trip(tag):
    """Test : la procédure de décision relit le code du catalogue sur Λ_h."""
    cc = coinvariant_class(tag)
    verdict = decide_extra(cc.lattice, cc.isometry)
    assert verdict.branch == VerdictBranch.B_CONSTRUCTION_ODD
    extracted = CodeZp.from_generators(cc.p, verdict.witness["code"], verdict.witness["t"])
    assert monomial_equivalent(extracted, catalog_code(tag).code) is not None
    assert all(verdict.witness["checks"].values())

import pytest

from orbilat.codes.catalog import CATALOG, catalog_code
from orbilat.codes.classify import classify_codes
from orbilat.codes.zp import (
    CodeZp,
    MonomialMap,
    dual_code,
    first_codeword_of_weight,
    fingerprint,
    is_self_orthogonal,
    monomial_equivalent,
    weight_distribution,
)
from orbilat.core.budget import Budget
from orbilat.core.errors import BudgetExceeded, CodeError, InputError


def test_code_rref_and_contains():
    """Test la forme réduite des générateurs et l'appartenance."""
    code = CodeZp.from_generators(3, [[1, 1, 1, 1, 1, 1], [2, 2, 2, 2, 2, 2]])
    assert code.dim == 1
    assert code.gen == ((1, 1, 1, 1, 1, 1),)
    assert (2, 2, 2, 2, 2, 2) in code
    assert not code.contains((1, 0, 0, 0, 0, 0))
    with pytest.raises(CodeError):
        CodeZp.from_generators(3, [[1, 1], [1, 1, 1]])


def test_dual_code_involution():
    for row in CATALOG:
        code = row.code
        d = dual_code(code)
        assert d.dim == code.length - code.dim
        assert dual_code(d) == code


def test_catalog_codes_self_orthogonal():
    for row in CATALOG:
        assert is_self_orthogonal(row.code), row.tag
    assert not is_self_orthogonal(CodeZp.from_generators(3, [[1, 1, 0]]))


def test_weight_distributions():
    assert weight_distribution(catalog_code("3B").code) == {0: 1, 6: 2}
    assert weight_distribution(catalog_code("7B").code) == {0: 1, 3: 6}
    tetracode = CodeZp.from_generators(3, [[1, 1, 1, 0], [0, 1, 2, 1]])
    assert weight_distribution(tetracode) == {0: 1, 3: 8}


def test_full_weight_dual_word():
    for row in CATALOG:
        word = first_codeword_of_weight(dual_code(row.code), row.t)
        assert word is not None
        assert all(word)


def test_monomial_equivalence():
    """Test l'équivalence par permutations signées."""
    code = catalog_code("5B").code
    f = MonomialMap(perm=(2, 0, 3, 1), signs=(1, -1, 1, -1))
    image = f.apply_code(code)
    found = monomial_equivalent(code, image)
    assert found is not None
    assert found.apply_code(code) == image
    assert fingerprint(code) == fingerprint(image)
    assert monomial_equivalent(code, CodeZp.from_generators(5, [[1, 1, 1, 2]])) is None


def test_catalog_lookup():
    assert catalog_code((5, 5, 2)).tag == "5C"
    assert catalog_code("3C").root_type == "A_2^9"
    with pytest.raises(InputError):
        catalog_code("2A")


@pytest.mark.parametrize("params", [(3, 6, 1), (5, 4, 1), (7, 3, 1)])
def test_classification_unique(params):
    """Test : une seule classe, équivalente au code catalogué."""
    p, t, dim = params
    found = classify_codes(p, t, dim)
    assert len(found) == 1
    assert monomial_equivalent(found[0], catalog_code(params).code) is not None


def test_classification_without_rootless_predicate():
    found = classify_codes(3, 3, 1, require_B_rootless=False)
    assert [c.gen for c in found] == [((1, 1, 1),)]


def test_classification_dimension_zero_and_errors():
    assert classify_codes(3, 4, 0, require_B_rootless=False)[0].dim == 0
    with pytest.raises(CodeError):
        classify_codes(3, 4, 5)


def test_classification_budget_partial():
    budget = Budget(seconds=0.0)
    with pytest.raises(BudgetExceeded) as exc:
        classify_codes(3, 9, 3, budget=budget)
    assert isinstance(exc.value.partial, list)


@pytest.mark.slow
@pytest.mark.parametrize("params", [(3, 9, 3), (5, 5, 2)])
def test_classification_extended(params):
    found = classify_codes(*params)
    assert len(found) == 1
    assert monomial_equivalent(found[0], catalog_code(params).code) is not None

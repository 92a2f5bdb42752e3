import pytest

from orbilat.codes.catalog import catalog_code
from orbilat.codes.construction import ConstructionContext, construct_A, construct_B, g_delta_e
from orbilat.lattice.core import direct_sum, integral_against
from orbilat.lattice.roots import coxeter_isometry, type_a, weyl_vector
from orbilat.records.artifact_store import artifact_store


@pytest.fixture(autouse=True)
def clear_store():
    """Vide le magasin d'artefacts avant et après chaque test."""
    artifact_store.clear()
    yield
    artifact_store.clear()


@pytest.fixture
def a2():
    return type_a(3).lattice


@pytest.fixture
def a2_coxeter():
    return coxeter_isometry(3)


@pytest.fixture
def e6():
    return construct_A(ConstructionContext.zp(3, 3), [[1, 1, 1]])


@pytest.fixture
def e8():
    return construct_A(ConstructionContext.zp(3, 4), [[1, 1, 1, 0], [0, 1, 2, 1]])


@pytest.fixture
def a2_a2(a2):
    return direct_sum(a2, a2)


@pytest.fixture
def lb_3b():
    """(L_B(<1^6>), g_{Delta,e}) sur Z_3 avec e = 1^6."""
    row = catalog_code("3B")
    ctx = row.context
    lattice = construct_B(ctx, row.code)
    return ctx, lattice, g_delta_e(ctx, (1,) * 6, lattice=lattice)


@pytest.fixture
def perturbed_3b(lb_3b):
    """Sous-réseau d'indice 3 de L_B(<1^6>) : (x | chi_1 - chi_2) entier, stable par g."""
    ctx, lattice, _ = lb_3b
    third = [x / 3 for x in weyl_vector(3)]
    w = tuple(a - b for a, b in zip(ctx.embed(0, third), ctx.embed(1, third)))
    sub = integral_against(lattice, w)
    return ctx, sub, g_delta_e(ctx, (1,) * 6, lattice=sub)

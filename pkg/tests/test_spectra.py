import pytest
import sympy

from bivarieg.errors import InputError
from bivarieg.graph import complete_bivariegated
from bivarieg.spectra import (
    adjacency_matrix,
    annihilating_product_residual,
    exact_nullity,
    exact_rank,
    polynomial_identity_residual,
    spectrum_complete_bivariegated,
    verify_polynomial_identity,
)


@pytest.mark.parametrize("n", range(3, 7))
def test_multiplicities_match_sympy_charpoly(n):
    a = sympy.Matrix(adjacency_matrix(complete_bivariegated(n)))
    oracle = {int(lam): int(mult) for lam, mult in a.eigenvals().items()}
    report = spectrum_complete_bivariegated(n)
    assert report.multiplicities == oracle
    assert all(report.verified.values())
    assert report.complete and not report.degenerate
    assert report.all_ones_eigenvector


@pytest.mark.parametrize("n", range(1, 9))
def test_exact_rank_matches_sympy(n):
    m = adjacency_matrix(complete_bivariegated(n))
    assert exact_rank(m) == sympy.Matrix(m).rank()


def test_degenerate_small_n():
    r1 = spectrum_complete_bivariegated(1)  # a single edge: spectrum {1, -1}
    assert r1.degenerate and r1.complete
    assert r1.multiplicities == {1: 1, -1: 1}
    r2 = spectrum_complete_bivariegated(2)  # C4: spectrum {2, 0, 0, -2}
    assert r2.degenerate and r2.complete
    assert r2.multiplicities == {2: 1, 0: 2, -2: 1}


@pytest.mark.parametrize("n", range(3, 9))
def test_polynomial_and_annihilating_identities(n):
    ok, residual = verify_polynomial_identity(n)
    assert ok and residual is None
    assert all(x == 0 for row in polynomial_identity_residual(n) for x in row)
    assert all(x == 0 for row in annihilating_product_residual(n) for x in row)


def test_identity_residual_is_nonzero_off_family():
    # sanity: the residual machinery is not vacuously zero
    res = polynomial_identity_residual(3)
    res[0][0] += 1
    assert any(x != 0 for row in res for x in row)


def test_exact_nullity_validation():
    with pytest.raises(InputError):
        exact_nullity([[1, 2, 3], [4, 5, 6]])
    assert exact_nullity([[1, 2], [2, 4]]) == 1
    assert exact_nullity([[0, 0], [0, 0]]) == 2


def test_spectrum_input_validation():
    with pytest.raises(InputError):
        spectrum_complete_bivariegated(0)

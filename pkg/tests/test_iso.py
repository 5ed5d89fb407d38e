from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank2crystals.cartan import coset, coset_weight, new_cartan, s_times_coset
from rank2crystals.errors import InternalConsistencyError, NotInImageError, RangeError
from rank2crystals.iso import FracMonomial, denominator_index, extremal_monomial, phi_inverse, phi_map
from rank2crystals.lspath import enumerate_paths, highest_path, make_path, parse_path
from rank2crystals.monomial import (
    LaurentMonomial,
    mono_e,
    mono_eps,
    mono_f,
    mono_phi,
    mono_wt,
    parse_monomial,
)
from rank2crystals.lspath import e as path_e
from rank2crystals.lspath import epsilon, f as path_f, phi as path_phi, wt

from conftest import A11, A11_TOP, B2, B2_CHAIN, CARTANS, FINITE

M = parse_monomial


@pytest.mark.parametrize("s", [-1, 0, 3])
def test_extremal_b2(s):
    expected = ["X[0,1]", "X[0,2]^2*X[1,1]^-1", "X[1,1]*X[1,2]^-2", "X[2,1]^-1"]
    for m, text in enumerate(expected):
        assert extremal_monomial(B2, 1, s, coset(1, m)) == M(text).shifted(s)


def test_extremal_a11_length_five():
    assert extremal_monomial(A11, 1, 0, coset(1, 5)) == M("X[2,2]^6*X[3,1]^-5")
    assert extremal_monomial(A11, 1, 4, coset(1, 5)) == M("X[6,2]^6*X[7,1]^-5")


@pytest.mark.parametrize("a, b", CARTANS)
@pytest.mark.parametrize("i", [1, 2])
def test_extremal_identity_coset(a, b, i):
    assert extremal_monomial(new_cartan(a, b), i, 7, coset(i, 0)) == LaurentMonomial.variable(7, i)


@pytest.mark.parametrize("a, b", CARTANS)
@pytest.mark.parametrize("i", [1, 2])
def test_extremal_weight_and_denominator(a, b, i):
    cd = new_cartan(a, b)
    for m in range(min(cd.N, 12)):
        X = extremal_monomial(cd, i, 0, coset(i, m))
        assert mono_wt(X) == coset_weight(cd, i, coset(i, m))
        if m:
            # the largest variable carries a negative exponent
            key = max(X.exps) if X.exps else None
            if key is not None:
                assert key == denominator_index(i, 0, m)
                assert X.exponent(*key) < 0


def test_extremal_range_and_chain_errors():
    with pytest.raises(RangeError):
        extremal_monomial(B2, 1, 0, coset(1, 4))
    with pytest.raises(InternalConsistencyError):
        extremal_monomial(B2, 1, 0, coset(2, 1))


def test_frac_monomial_accumulates_exactly():
    acc = FracMonomial()
    acc.multiply(M("X[0,2]^2*X[1,1]^-1"), Fraction(1, 2))
    acc.multiply(M("X[1,1]*X[1,2]^-2"), Fraction(1, 2))
    assert acc.exps == {(0, 2): 1, (1, 2): -1}


@pytest.mark.parametrize("s", [-1, 0, 2])
@pytest.mark.parametrize("path, mono", B2_CHAIN)
def test_phi_map_b2(s, path, mono):
    assert phi_map(B2, 1, s, parse_path(path)) == M(mono).shifted(s)


def test_phi_map_a11_five_segment_path():
    pi = parse_path("taus=5,4,3,2,1;a=0,1/5,1/4,1/3,1/2,1")
    assert phi_map(A11, 1, 0, pi) == M("X[0,2]*X[2,2]*X[3,1]^-1")
    assert phi_map(A11, 1, 5, pi) == M("X[5,2]*X[7,2]*X[8,1]^-1")


@pytest.mark.parametrize("name", sorted(A11_TOP))
def test_phi_map_a11_top(name):
    _, path, mono = A11_TOP[name]
    assert phi_map(A11, 1, 0, parse_path(path)) == M(mono)
    assert phi_inverse(A11, 1, 0, M(mono)) == parse_path(path)


def test_phi_map_highest():
    for a, b in CARTANS:
        for i in (1, 2):
            assert phi_map(new_cartan(a, b), i, 3, highest_path(i)) == LaurentMonomial.variable(3, i)


def test_phi_map_rejects_wrong_shape_and_non_integral():
    with pytest.raises(ValueError):
        phi_map(B2, 2, 0, highest_path(1))
    # a non-LS chain whose product has fractional exponents
    with pytest.raises(InternalConsistencyError):
        phi_map(B2, 1, 0, make_path(1, [1, 0], [0, Fraction(1, 3), 1]))


@pytest.mark.parametrize("s", [-2, 0, 1])
@pytest.mark.parametrize("path, mono", B2_CHAIN)
def test_phi_inverse_b2(s, path, mono):
    assert phi_inverse(B2, 1, s, M(mono).shifted(s)) == parse_path(path)


@pytest.mark.parametrize(
    "text",
    [
        "1",  # no mass at all
        "X[0,1]^2",  # highest variable with too much mass
        "X[1,1]",  # wrong shift for the highest element
        "X[0,2]",  # X_{s,2} has positive exponent but is not X_{s,1}
        "X[5,1]^-1",  # denominator beyond the chain
        "X[0,2]^4*X[1,1]^-2",  # one segment of mass 2
        "X[0,2]*X[1,1]^-1",  # half a segment, then a leftover with no denominator
        "X[2,1]^-1*X[0,1]",  # mass exhausted with residual left
    ],
)
def test_phi_inverse_not_in_image(text):
    with pytest.raises(NotInImageError):
        phi_inverse(B2, 1, 0, M(text))


def test_phi_inverse_segment_mass_checked():
    with pytest.raises(NotInImageError, match="segment length"):
        phi_inverse(A11, 1, 0, M("X[1,1]^2*X[1,2]^-1*X[2,1]^-1"))


@pytest.mark.parametrize("a, b", CARTANS)
@pytest.mark.parametrize("i", [1, 2])
def test_round_trip_and_shift_equivariance(a, b, i):
    cd = new_cartan(a, b)
    bound = min(cd.N - 1, 6)
    for pi in enumerate_paths(cd, i, bound, max_depth=8):
        X = phi_map(cd, i, 0, pi)
        assert phi_inverse(cd, i, 0, X) == pi
        assert phi_map(cd, i, 1, pi) == X.shifted(1)
        assert phi_map(cd, i, -3, pi) == X.shifted(-3)
        assert phi_inverse(cd, i, 2, X.shifted(2)) == pi


@pytest.mark.parametrize("a, b", CARTANS)
@pytest.mark.parametrize("i", [1, 2])
def test_extremal_recursion(a, b, i):
    cd = new_cartan(a, b)
    top = cd.N - 1 if cd.is_finite else 10
    for m in range(top + 1):
        tau = coset(i, m)
        weight = coset_weight(cd, i, tau)
        for k in (1, 2):
            n = weight.h(k)
            if n <= 0:
                continue
            X = extremal_monomial(cd, i, 0, tau)
            for _ in range(n):
                X = mono_f(cd, X, k)
            assert X == extremal_monomial(cd, i, 0, s_times_coset(cd, i, k, tau))


@pytest.mark.parametrize("a, b", FINITE)
@pytest.mark.parametrize("i", [1, 2])
def test_strict_morphism_on_full_finite_crystals(a, b, i):
    cd = new_cartan(a, b)
    for pi in enumerate_paths(cd, i, cd.N - 1):
        X = phi_map(cd, i, 0, pi)
        assert mono_wt(X) == wt(cd, pi)
        for k in (1, 2):
            assert (mono_eps(X, k), mono_phi(X, k)) == (epsilon(cd, pi, k), path_phi(cd, pi, k))
            for op_path, op_mono in ((path_f, mono_f), (path_e, mono_e)):
                y, Y = op_path(cd, pi, k), op_mono(cd, X, k)
                assert (y is None) == (Y is None)
                if y is not None:
                    assert phi_map(cd, i, 0, y) == Y


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(CARTANS),
    st.sampled_from([1, 2]),
    st.integers(-5, 5),
    st.lists(st.sampled_from([1, 2]), max_size=14),
)
def test_random_words_commute_with_phi(ab, i, s, word):
    cd = new_cartan(*ab)
    pi = highest_path(i)
    X = phi_map(cd, i, s, pi)
    for k in word:
        nxt = path_f(cd, pi, k)
        Y = mono_f(cd, X, k)
        assert (nxt is None) == (Y is None)
        if nxt is None:
            continue
        pi, X = nxt, Y
        assert phi_map(cd, i, s, pi) == X
    assert phi_inverse(cd, i, s, X) == pi

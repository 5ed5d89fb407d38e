"""The isomorphism Phi_s from LS paths to monomials, and its inverse."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cartan import (
    CartanData,
    Coset,
    chain_sign,
    coset,
    leftmost_letter,
    other,
    p_coeff,
    p_coeff_next,
)
from .errors import InternalConsistencyError, NotInImageError, RangeError
from .lspath import LSPath, format_path, height_profile, make_path, membership_failure
from .monomial import LaurentMonomial, format_monomial


class FracMonomial:
    """Monomial with rational exponents; the residual while peeling segments off."""

    __slots__ = ("exps",)

    def __init__(self, exps=None):
        self.exps = {key: Fraction(v) for key, v in (exps or {}).items()}

    def multiply(self, X: LaurentMonomial, power) -> None:
        for key, e in X.items():
            value = self.exps.get(key, 0) + e * power
            if value:
                self.exps[key] = value
            else:
                self.exps.pop(key, None)



@lru_cache(maxsize=None)
def _extremal(cd: CartanData, i: int, s: int, m: int) -> LaurentMonomial:
    half, odd = divmod(m, 2)
    P_i, P_o = p_coeff(cd, i, half)
    if not odd:
        if i == 1:
            return LaurentMonomial({(s + half, 1): P_i, (s + half, 2): -P_o})
        return LaurentMonomial({(s + half, 2): P_i, (s + half + 1, 1): -P_o})
    P_next = p_coeff_next(cd, i, half)
    if i == 1:
        return LaurentMonomial({(s + half, 2): P_next, (s + half + 1, 1): -P_i})
    return LaurentMonomial({(s + half + 1, 1): P_next, (s + half + 1, 2): -P_i})


def extremal_monomial(cd: CartanData, i: int, s: int, tau: Coset) -> LaurentMonomial:
    """M_s(v_{tau Lambda_i}); the extremal element of weight tau Lambda_i."""
    if tau.eps != chain_sign(i):
        raise InternalConsistencyError(f"{tau} does not lie on the chain of Lambda_{i}")
    if tau.m < 0 or tau.m >= cd.N:
        raise RangeError(f"coset length {tau.m} outside [0, N) with N={cd.N}")
    return _extremal(cd, i, s, tau.m)


def denominator_index(i: int, s: int, m: int):
    """Double index of the denominator variable of M_s(v_{tau_m Lambda_i}), m >= 1."""
    half, odd = divmod(m, 2)
    if i == 1:
        return (s + half + 1, 1) if odd else (s + half, 2)
    return (s + half + 1, 2) if odd else (s + half + 1, 1)


def _length_for_denominator(i: int, s: int, key):
    t, l = key
    n = t - s
    if i == 1:
        m = 2 * n - 1 if l == 1 else 2 * n
    else:
        m = 2 * n - 1 if l == 2 else 2 * n - 2
    if m >= 1 and denominator_index(i, s, m) == key:
        return m
    return None


def _check_reflection_points(cd, pi):
    # y_j is an integer wherever s_k tau_j = tau_{j+1}
    for k in (1, 2):
        y = height_profile(cd, pi, k).y
        for j in range(1, pi.r):
            tau, nxt = pi.taus[j - 1], pi.taus[j]
            if nxt.m == tau.m - 1 and leftmost_letter(pi.i, tau.m) == k and y[j].denominator != 1:
                raise InternalConsistencyError(
                    f"h_{k}(a_{j}) = {y[j]} is not an integer at a reflection point of {format_path(pi)}"
                )


def phi_map(cd: CartanData, i: int, s: int, pi: LSPath) -> LaurentMonomial:
    """prod_l M_s(v_{tau_l Lambda_i})^(a_l - a_{l-1})."""
    if pi.i != i:
        raise ValueError(f"path has shape Lambda_{pi.i}, expected Lambda_{i}")
    _check_reflection_points(cd, pi)
    # exponents times the common breakpoint denominator, so the sum stays in integers
    acc = {}
    n = pi.nums
    for l, tau in enumerate(pi.taus):
        width = n[l + 1] - n[l]
        for key, e in extremal_monomial(cd, i, s, tau).items():
            acc[key] = acc.get(key, 0) + e * width
    den = pi.den
    bad = {key: Fraction(v, den) for key, v in acc.items() if v % den}
    if bad:
        raise InternalConsistencyError(f"Phi({format_path(pi)}) has non-integral exponents {bad}")
    return LaurentMonomial({key: v // den for key, v in acc.items()})


def phi_inverse(cd: CartanData, i: int, s: int, X: LaurentMonomial) -> LSPath:
    """Recover the LS path mapping to ``X``.

    The largest double index of Phi(pi), in the order (t,1) < (t,2) < (t+1,1),
    is the denominator of the extremal monomial of the longest coset; its
    exponent fixes the length of that segment.  Peel segments off one at a
    time until the unit mass is used up.
    """
    residual = FracMonomial(X.exps)
    mass = Fraction(1)
    lengths, a = [], [Fraction(0)]
    while mass > 0:
        if not residual.exps:
            raise NotInImageError(f"{format_monomial(X)}: residual vanished with mass {mass} left")
        key = max(residual.exps)
        value = residual.exps[key]
        if value > 0:
            # only the highest extremal monomial X_{s,i} has no denominator
            if residual.exps != {(s, i): mass}:
                raise NotInImageError(f"{format_monomial(X)}: leftover {residual.exps} is not X[{s},{i}]^{mass}")
            lengths.append(0)
            a.append(Fraction(1))
            residual.exps.clear()
            break
        m = _length_for_denominator(i, s, key)
        if m is None or m >= cd.N:
            raise NotInImageError(f"{format_monomial(X)}: no coset has denominator X[{key[0]},{key[1]}]")
        if lengths and m >= lengths[-1]:
            raise NotInImageError(f"{format_monomial(X)}: coset lengths do not decrease")
        M = _extremal(cd, i, s, m)
        share = value / M.exponent(*key)
        if not 0 < share <= mass:
            raise NotInImageError(f"{format_monomial(X)}: segment length {share} outside (0, {mass}]")
        residual.multiply(M, -share)
        mass -= share
        lengths.append(m)
        a.append(1 - mass)
    if residual.exps:
        raise NotInImageError(f"{format_monomial(X)}: residual {residual.exps} after unit mass")
    try:
        pi = make_path(i, lengths, a)
    except ValueError as exc:
        raise NotInImageError(f"{format_monomial(X)}: {exc}") from None
    reason = membership_failure(cd, pi)
    if reason:
        raise NotInImageError(f"{format_monomial(X)}: recovered {format_path(pi)} is not an LS path ({reason})")
    if phi_map(cd, i, s, pi) != X:
        raise NotInImageError(f"{format_monomial(X)}: recovered {format_path(pi)} maps elsewhere")
    return pi

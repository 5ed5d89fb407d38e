"""Rank-2 Cartan data, the dihedral coset chain W/W_{Lambda_i}, and coefficient tables.

Weights are handled in the classical quotient, as the pair of pairings with
the simple coroots.  Cosets in W/W_{Lambda_i} form a single chain
tau_0 < tau_1 < ... whose m-th element is the alternating word of length m
ending in s_i, so a coset is stored as its length plus the chain sign.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import InternalConsistencyError, RangeError

INFINITE = math.inf

_COXETER_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class CartanData:
    """Generalized Cartan matrix ``[[2, -a], [-b, 2]]``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"Cartan entries must be non-negative, got a={self.a}, b={self.b}")
        if (self.a == 0) != (self.b == 0):
            raise ValueError(f"a generalized Cartan matrix has a = 0 exactly when b = 0, got a={self.a}, b={self.b}")

    @property
    def N(self):
        """Order of s2*s1: 2, 3, 4, 6, or ``math.inf``."""
        return _COXETER_ORDER.get(self.a * self.b, INFINITE)

    @property
    def is_finite(self) -> bool:
        return self.a * self.b < 4

    def __str__(self):
        return f"({self.a},{self.b})"


def new_cartan(a: int, b: int) -> CartanData:
    return CartanData(int(a), int(b))


class ClWeight(NamedTuple):
    """Weight in P_cl, stored as (<h_1, wt>, <h_2, wt>)."""

    c1: int
    c2: int

    def h(self, k: int):
        return self.c1 if k == 1 else self.c2

    def plus(self, other: "ClWeight") -> "ClWeight":
        return ClWeight(self.c1 + other.c1, self.c2 + other.c2)

    def minus(self, other: "ClWeight") -> "ClWeight":
        return ClWeight(self.c1 - other.c1, self.c2 - other.c2)

    def scaled(self, c) -> "ClWeight":
        return ClWeight(c * self.c1, c * self.c2)


def fundamental_weight(i: int) -> ClWeight:
    check_node(i)
    return ClWeight(1, 0) if i == 1 else ClWeight(0, 1)


def simple_root(cd: CartanData, k: int) -> ClWeight:
    check_node(k)
    return ClWeight(2, -cd.b) if k == 1 else ClWeight(-cd.a, 2)


def reflect(cd: CartanData, k: int, wt: ClWeight) -> ClWeight:
    """s_k(wt) = wt - <h_k, wt> alpha_k."""
    return wt.minus(simple_root(cd, k).scaled(wt.h(k)))


def check_node(i) -> None:
    if i not in (1, 2):
        raise ValueError(f"node index must be 1 or 2, got {i!r}")


def other(i: int) -> int:
    return 3 - i


def chain_sign(i: int) -> str:
    check_node(i)
    return "+" if i == 1 else "-"


class Coset(NamedTuple):
    """The coset tau_m^eps; eps is '+' for the chain of Lambda_1, '-' for Lambda_2."""

    m: int
    eps: str

    def __str__(self):
        return f"tau_{self.m}^{self.eps}"


def coset(i: int, m: int) -> Coset:
    return Coset(m, chain_sign(i))


def _check_coset(cd: CartanData, i: int, tau: Coset) -> None:
    if tau.eps != chain_sign(i):
        raise InternalConsistencyError(f"{tau} does not lie on the chain of Lambda_{i}")
    if tau.m < 0 or tau.m >= cd.N:
        raise RangeError(f"coset length {tau.m} outside [0, N) with N={cd.N}")


def leftmost_letter(i: int, m: int) -> int:
    """First letter of the reduced word of tau_m (m >= 1)."""
    return i if m % 2 == 1 else other(i)


@lru_cache(maxsize=None)
def quantum_int(cd: CartanData, n: int) -> int:
    """[n] = xi^n + xi^(n-2) + ... + xi^(-n) where xi + 1/xi = ab - 2."""
    if n < -1:
        raise RangeError(f"quantum integer [n] needs n >= -1, got {n}")
    if n == -1:
        return 0
    if n == 0:
        return 1
    c = cd.a * cd.b - 2
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, c * cur - prev
    return cur


def d_coeff(cd: CartanData, j: int, eps: str) -> int:
    """Integrality coefficient d_j^eps for breakpoints leaving a coset of length j."""
    if j < 1 or j >= cd.N:
        raise RangeError(f"d_j needs 1 <= j < N, got j={j}, N={cd.N}")
    n, odd = divmod(j, 2)
    if odd:
        return -quantum_int(cd, n) - quantum_int(cd, n - 1)
    if eps == "+":
        return -cd.b * quantum_int(cd, n - 1)
    if eps == "-":
        return -cd.a * quantum_int(cd, n - 1)
    raise ValueError(f"sign must be '+' or '-', got {eps!r}")


@lru_cache(maxsize=None)
def _chain_data(cd: CartanData, i: int, m: int):
    # (weight, root deficit) of tau_m Lambda_i, reflections applied right to left.
    if m == 0:
        return fundamental_weight(i), (0, 0)
    wt, (c1, c2) = _chain_data(cd, i, m - 1)
    k = i if m % 2 == 1 else other(i)
    n = wt.h(k)
    if k == 1:
        c1 += n
    else:
        c2 += n
    return reflect(cd, k, wt), (c1, c2)


def coset_weight(cd: CartanData, i: int, tau: Coset) -> ClWeight:
    _check_coset(cd, i, tau)
    return _chain_data(cd, i, tau.m)[0]


def coset_height(cd: CartanData, i: int, tau: Coset) -> int:
    """Number of simple roots subtracted from Lambda_i to reach tau Lambda_i (in P, not P_cl)."""
    _check_coset(cd, i, tau)
    c1, c2 = _chain_data(cd, i, tau.m)[1]
    return c1 + c2


def s_times_coset(cd: CartanData, i: int, k: int, tau: Coset) -> Coset:
    _check_coset(cd, i, tau)
    check_node(k)
    m = tau.m
    if m >= 1 and leftmost_letter(i, m) == k:
        return Coset(m - 1, tau.eps)
    # s_k extends the word only when k is the next letter; otherwise it is absorbed
    if leftmost_letter(i, m + 1) == k and m + 1 <= cd.N - 1:
        return Coset(m + 1, tau.eps)
    return tau


def p_coeff(cd: CartanData, i: int, m: int):
    """(P_{m,i}, P_{m,i'}) defined by (s_i' s_i)^m Lambda_i = P_{m,i} Lambda_i - P_{m,i'} Lambda_i'."""
    if m < 0 or 2 * m > cd.N - 1:
        raise RangeError(f"P_(m,i) needs 0 <= 2m <= N-1, got m={m}, N={cd.N}")
    wt = coset_weight(cd, i, coset(i, 2 * m))
    return wt.h(i), -wt.h(other(i))


def p_coeff_next(cd: CartanData, i: int, m: int) -> int:
    """P_{m+1,i'} as it appears in s_i (s_i' s_i)^m Lambda_i = P_{m+1,i'} Lambda_i' - P_{m,i} Lambda_i.

    Zero by convention once 2m + 2 >= N.
    """
    if m < 0 or 2 * m + 1 > cd.N - 1:
        raise RangeError(f"s_i (s_i' s_i)^m needs 2m+1 <= N-1, got m={m}, N={cd.N}")
    wt = coset_weight(cd, i, coset(i, 2 * m + 1))
    if -wt.h(i) != p_coeff(cd, i, m)[0]:
        raise InternalConsistencyError(f"odd coset {2 * m + 1} disagrees with P_({m},{i})")
    value = wt.h(other(i))
    if 2 * m + 2 >= cd.N:
        if value != 0:
            raise InternalConsistencyError(f"top coset weight {wt} not a multiple of Lambda_{i}")
        return 0
    return value

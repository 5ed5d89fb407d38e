"""Lakshmibai-Seshadri paths of fundamental shape for rank-2 Kac-Moody algebras.

A path ``(tau_1 > ... > tau_r; 0 = a_0 < ... < a_r = 1)`` moves along
``tau_l Lambda_i`` on ``[a_{l-1}, a_l]``.  Every piece is linear, so every
extremum of a height function occurs at a breakpoint and all root-operator
decisions are made on the breakpoint values alone.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .cartan import (
    CartanData,
    ClWeight,
    Coset,
    chain_sign,
    check_node,
    coset,
    coset_height,
    coset_weight,
    d_coeff,
    s_times_coset,
)
from .errors import InternalConsistencyError, ParseError
from .kernels import height_scan

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LSPath:
    i: int
    taus: tuple
    a: tuple
    # breakpoints over their common denominator: a_l = nums[l] / den
    den: int = field(init=False, repr=False, compare=False)
    nums: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_node(self.i)
        taus = tuple(self.taus)
        a = tuple(Fraction(x) for x in self.a)
        object.__setattr__(self, "taus", taus)
        object.__setattr__(self, "a", a)
        if not taus:
            raise ValueError("an LS path needs at least one segment")
        if len(a) != len(taus) + 1:
            raise ValueError(f"{len(taus)} cosets need {len(taus) + 1} breakpoints, got {len(a)}")
        if a[0] != 0 or a[-1] != 1:
            raise ValueError("breakpoints must start at 0 and end at 1")
        for l in range(1, len(a)):
            if a[l] <= a[l - 1]:
                raise ValueError(f"breakpoints not strictly increasing at index {l}: {a[l - 1]} >= {a[l]}")
        eps = chain_sign(self.i)
        for tau in taus:
            if tau.eps != eps:
                raise ValueError(f"{tau} is not on the chain of Lambda_{self.i}")
        for l in range(1, len(taus)):
            if taus[l].m >= taus[l - 1].m:
                raise ValueError("coset lengths must be strictly decreasing")
        den = math.lcm(*(x.denominator for x in a))
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "nums", tuple(x.numerator * (den // x.denominator) for x in a))

    @property
    def r(self) -> int:
        return len(self.taus)

    @property
    def lengths(self):
        return tuple(t.m for t in self.taus)

    def __str__(self):
        return format_path(self)


def make_path(i: int, lengths, a) -> LSPath:
    return LSPath(i, tuple(coset(i, m) for m in lengths), tuple(Fraction(x) for x in a))


class HeightProfile(NamedTuple):
    k: int
    y: tuple
    Q: int
    R: int
    p: int
    q: int


def highest_path(i: int) -> LSPath:
    return make_path(i, (0,), (0, 1))


@lru_cache(maxsize=None)
def _slopes(cd, i, lengths, k):
    return tuple(coset_weight(cd, i, coset(i, m)).h(k) for m in lengths)


def _scan(cd, pi, k):
    # (Y, Q, R, p, q) with Y_j = den * h_k(a_j) exact integers
    check_node(k)
    Y, low, q, p = height_scan(_slopes(cd, pi.i, pi.lengths, k), pi.nums)
    den = pi.den
    if low % den:
        raise InternalConsistencyError(
            f"minimum of h_{k} is {Fraction(low, den)}, not an integer, on {format_path(pi)}"
        )
    if Y[-1] % den:
        raise InternalConsistencyError(f"endpoint of h_{k} is {Fraction(Y[-1], den)}, not an integer")
    Q = low // den
    return Y, Q, Y[-1] // den - Q, p, q


def height_profile(cd: CartanData, pi: LSPath, k: int) -> HeightProfile:
    """Values y_j = <h_k, pi(a_j)> at the breakpoints, with Q = min y_j and R = y_r - Q."""
    Y, Q, R, p, q = _scan(cd, pi, k)
    return HeightProfile(k, tuple(Fraction(v, pi.den) for v in Y), Q, R, p, q)


def wt(cd: CartanData, pi: LSPath) -> ClWeight:
    c1 = c2 = 0
    n = pi.nums
    for l, tau in enumerate(pi.taus):
        w = coset_weight(cd, pi.i, tau)
        c1 += w.c1 * (n[l + 1] - n[l])
        c2 += w.c2 * (n[l + 1] - n[l])
    if c1 % pi.den or c2 % pi.den:
        raise InternalConsistencyError(
            f"weight ({Fraction(c1, pi.den)}, {Fraction(c2, pi.den)}) of {format_path(pi)} is not integral"
        )
    return ClWeight(c1 // pi.den, c2 // pi.den)


def epsilon(cd: CartanData, pi: LSPath, k: int) -> int:
    return -_scan(cd, pi, k)[1]


def phi(cd: CartanData, pi: LSPath, k: int) -> int:
    return _scan(cd, pi, k)[2]


def depth(cd: CartanData, pi: LSPath) -> int:
    """Number of simple roots in Lambda_i - wt(pi), counted in P (so it sees the null root)."""
    n = pi.nums
    total = sum(coset_height(cd, pi.i, tau) * (n[l + 1] - n[l]) for l, tau in enumerate(pi.taus))
    if total % pi.den:
        raise InternalConsistencyError(f"depth {Fraction(total, pi.den)} of {format_path(pi)} is not integral")
    return total // pi.den


def f(cd: CartanData, pi: LSPath, k: int) -> Optional[LSPath]:
    """Root operator f_k; ``None`` stands for the zero element."""
    Y, Q, R, p, _ = _scan(cd, pi, k)
    if R == 0:
        return None
    T, A, den = pi.taus, pi.a, pi.den
    level = (Q + 1) * den
    r = len(T)
    # x = min{s in [p, r] : h_k >= Q+1 on [a_s, 1]}
    x = r
    while x - 1 >= p and Y[x - 1] >= level:
        x -= 1
    if x <= p:
        raise InternalConsistencyError("no crossing of Q+1 after the last minimum")

    reflected = tuple(s_times_coset(cd, pi.i, k, T[l - 1]) for l in range(p + 1, x + 1))
    if p == 0:
        merge = False
    else:
        first, prev = reflected[0], T[p - 1]
        if first.m == prev.m:
            merge = True
        elif first.m < prev.m:
            merge = False
        else:
            raise InternalConsistencyError(f"s_{k} tau_{p + 1} exceeds tau_{p} in {format_path(pi)}")

    head_T = T[: p - 1] if merge else T[:p]
    head_A = A[:p] if merge else A[: p + 1]
    if Y[x] > level:
        slope = _slopes(cd, pi.i, pi.lengths, k)[x - 1]
        new_a = Fraction(pi.nums[x - 1] * slope + level - Y[x - 1], den * slope)
        if not A[x - 1] < new_a < A[x]:
            raise InternalConsistencyError(f"breakpoint {new_a} outside ({A[x - 1]}, {A[x]})")
        taus = head_T + reflected + T[x - 1 :]
        a = head_A + A[p + 1 : x] + (new_a,) + A[x:]
    else:
        taus = head_T + reflected + T[x:]
        a = head_A + A[p + 1 :]
    return LSPath(pi.i, taus, a)


def e(cd: CartanData, pi: LSPath, k: int) -> Optional[LSPath]:
    """Root operator e_k; ``None`` stands for the zero element.

    The reflected stretch runs from the last time h_k equals Q+1 before the
    first minimum up to that minimum (a_q).  When s_k tau_q merges into
    tau_{q+1} the breakpoint a_q is the one that disappears.
    """
    Y, Q, _, _, q = _scan(cd, pi, k)
    if Q == 0:
        return None
    T, A, den = pi.taus, pi.a, pi.den
    level = (Q + 1) * den
    r = len(T)
    # y = max{s in [0, q] : h_k >= Q+1 on [0, a_s]}
    y = 0
    while y + 1 <= q and Y[y + 1] >= level:
        y += 1
    if y >= q:
        raise InternalConsistencyError("no crossing of Q+1 before the first minimum")

    reflected = tuple(s_times_coset(cd, pi.i, k, T[l - 1]) for l in range(y + 1, q + 1))
    if q == r:
        merge = False
    else:
        last, nxt = reflected[-1], T[q]
        if last.m == nxt.m:
            merge = True
        elif last.m > nxt.m:
            merge = False
        else:
            raise InternalConsistencyError(f"s_{k} tau_{q} falls below tau_{q + 1} in {format_path(pi)}")

    tail_T = T[q + 1 :] if merge else T[q:]
    tail_A = A[q + 1 :] if merge else A[q:]
    if Y[y] > level:
        slope = _slopes(cd, pi.i, pi.lengths, k)[y]
        new_a = Fraction(pi.nums[y] * slope + level - Y[y], den * slope)
        if not A[y] < new_a < A[y + 1]:
            raise InternalConsistencyError(f"breakpoint {new_a} outside ({A[y]}, {A[y + 1]})")
        taus = T[: y + 1] + reflected + tail_T
        a = A[: y + 1] + (new_a,) + A[y + 1 : q] + tail_A
    else:
        taus = T[:y] + reflected + tail_T
        a = A[: y + 1] + A[y + 1 : q] + tail_A
    return LSPath(pi.i, taus, a)


def membership_failure(cd: CartanData, pi: LSPath) -> Optional[str]:
    """Reason ``pi`` is not in B(Lambda_i) by the rank-2 closed form, or ``None``."""
    lengths = pi.lengths
    if lengths[0] >= cd.N:
        return f"coset length {lengths[0]} >= N={cd.N}"
    for l in range(1, len(lengths)):
        if lengths[l] != lengths[l - 1] - 1:
            return f"coset lengths {lengths[l - 1]},{lengths[l]} are not consecutive"
    eps = chain_sign(pi.i)
    for l in range(1, pi.r):
        d = d_coeff(cd, lengths[l - 1], eps)
        if (pi.a[l] * d).denominator != 1:
            return f"breakpoint {pi.a[l]} times d_{lengths[l - 1]}={d} is not an integer"
    return None


def is_member(cd: CartanData, pi: LSPath) -> bool:
    return membership_failure(cd, pi) is None


def enumerate_paths(cd: CartanData, i: int, m2_bound: int, max_depth=None) -> list:
    """All LS paths of shape Lambda_i with longest coset of length <= m2_bound.

    With ``max_depth`` only paths at most that many f-steps below the highest
    path are produced; the search is pruned on a lower bound of the depth.
    """
    check_node(i)
    if m2_bound >= cd.N:
        raise ValueError(f"m2_bound={m2_bound} must be < N={cd.N}")
    eps = chain_sign(i)
    heights = [coset_height(cd, i, coset(i, m)) for m in range(m2_bound + 1)]
    out = []

    def extend(m2, m1, j, a_prev, acc, chosen):
        # choose a_j (end of the segment on tau_j) for j = m2 .. m1+1
        if j == m1:
            total = acc + (ONE - a_prev) * heights[m1]
            if max_depth is None or total <= max_depth:
                out.append(make_path(i, range(m2, m1 - 1, -1), (ZERO, *chosen, ONE)))
            return
        d = abs(d_coeff(cd, j, eps))
        if d == 0:
            raise InternalConsistencyError(f"d_{j} vanishes; breakpoints would be unconstrained")
        n = a_prev.numerator * d // a_prev.denominator + 1
        while n < d:
            a_j = Fraction(n, d)
            n += 1
            acc_j = acc + (a_j - a_prev) * heights[j]
            if max_depth is not None and acc_j + (ONE - a_j) * heights[m1] > max_depth:
                break
            extend(m2, m1, j - 1, a_j, acc_j, chosen + (a_j,))

    for m2 in range(m2_bound + 1):
        for m1 in range(m2 + 1):
            extend(m2, m1, m2, ZERO, ZERO, ())
    return out


_PATH_RE = re.compile(r"taus=(?P<taus>[^;]*);a=(?P<a>.*)\Z")
_INT_RE = re.compile(r"-?\d+\Z")
_RAT_RE = re.compile(r"-?\d+(/\d+)?\Z")


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_path(pi: LSPath) -> str:
    lengths = ",".join(str(t.m) for t in pi.taus)
    return f"taus={lengths};a=" + ",".join(_fmt_rational(x) for x in pi.a)


def parse_path(text: str, i: int = 1) -> LSPath:
    """Parse ``taus=<m2>,...,<m1>;a=<r0>,...,<rk>``."""
    match = _PATH_RE.match(text)
    if not match:
        pos = 0 if not text.startswith("taus=") else (text.find(";") if ";" in text else len(text))
        raise ParseError("expected 'taus=<m>,...;a=<r>,...'", text, pos)
    lengths = []
    pos = match.start("taus")
    for field in match.group("taus").split(","):
        if not _INT_RE.match(field) or field.startswith("-"):
            raise ParseError(f"bad coset length {field!r}", text, pos)
        lengths.append(int(field))
        pos += len(field) + 1
    a = []
    pos = match.start("a")
    for field in match.group("a").split(","):
        if not _RAT_RE.match(field):
            raise ParseError(f"bad rational {field!r}", text, pos)
        try:
            a.append(Fraction(field))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {field!r}", text, pos) from None
        pos += len(field) + 1
    if len(a) != len(lengths) + 1:
        raise ParseError(
            f"{len(lengths)} cosets need {len(lengths) + 1} breakpoints, got {len(a)}", text, match.start("a")
        )
    if a[0] != 0:
        raise ParseError(f"first breakpoint must be 0, got {a[0]}", text, match.start("a"))
    if a[-1] != 1:
        raise ParseError(f"last breakpoint must be 1, got {a[-1]}", text, len(text))
    pos = match.start("a")
    fields = match.group("a").split(",")
    for l in range(1, len(a)):
        pos += len(fields[l - 1]) + 1
        if a[l] <= a[l - 1] or (l < len(a) - 1 and not 0 < a[l] < 1):
            raise ParseError(f"breakpoint a_{l}={fields[l]} must lie in ({a[l - 1]}, 1)", text, pos)
    for l in range(1, len(lengths)):
        if lengths[l] >= lengths[l - 1]:
            raise ParseError("coset lengths must be strictly decreasing", text, match.start("taus"))
    return make_path(i, lengths, a)

"""Laurent monomials in X_{s,i} with their Kashiwara crystal structure."""
from __future__ import annotations

import re
from typing import Optional

from .cartan import CartanData, ClWeight, check_node
from .errors import ParseError
from .kernels import prefix_scan


class LaurentMonomial:
    """Immutable monomial; factors are kept sorted by (s, i) with zero exponents dropped."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exps=None):
        if exps is None:
            exps = {}
        elif not isinstance(exps, dict):
            exps = dict(exps)
        self._items = tuple(sorted((key, int(e)) for key, e in exps.items() if e != 0))
        self._hash = hash(self._items)

    @classmethod
    def variable(cls, s: int, i: int, power: int = 1) -> "LaurentMonomial":
        check_node(i)
        return cls({(s, i): power})

    @property
    def exps(self) -> dict:
        return dict(self._items)

    def items(self):
        return self._items

    def exponent(self, s: int, i: int) -> int:
        for key, e in self._items:
            if key == (s, i):
                return e
        return 0

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        out = dict(self._items)
        for key, e in other._items:
            out[key] = out.get(key, 0) + e
        return LaurentMonomial(out)

    def __pow__(self, n: int) -> "LaurentMonomial":
        return LaurentMonomial({key: e * n for key, e in self._items})

    def inverse(self) -> "LaurentMonomial":
        return self ** -1

    def shifted(self, n: int) -> "LaurentMonomial":
        return LaurentMonomial({(s + n, i): e for (s, i), e in self._items})

    def __eq__(self, other):
        return isinstance(other, LaurentMonomial) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return True

    def is_one(self) -> bool:
        return not self._items

    def __repr__(self):
        return f"LaurentMonomial({format_monomial(self)!r})"

    def __str__(self):
        return format_monomial(self)


def _node_exponents(X: LaurentMonomial, i: int):
    return [(s, e) for (s, j), e in X.items() if j == i]


def mono_wt(X: LaurentMonomial) -> ClWeight:
    c = [0, 0]
    for (_, i), e in X.items():
        c[i - 1] += e
    return ClWeight(c[0], c[1])


def mono_phi(X: LaurentMonomial, i: int) -> int:
    check_node(i)
    return prefix_scan(_node_exponents(X, i))[0]


def mono_eps(X: LaurentMonomial, i: int) -> int:
    return mono_phi(X, i) - mono_wt(X).h(i)


def a_monomial(cd: CartanData, s: int, k: int) -> LaurentMonomial:
    """A_{s,k}; wt(A_{s,k}) = alpha_k."""
    check_node(k)
    if k == 1:
        return LaurentMonomial({(s, 1): 1, (s + 1, 1): 1, (s, 2): -cd.b})
    return LaurentMonomial({(s, 2): 1, (s + 1, 2): 1, (s + 1, 1): -cd.a})


def mono_f(cd: CartanData, X: LaurentMonomial, i: int) -> Optional[LaurentMonomial]:
    check_node(i)
    phi_i, n_f, _ = prefix_scan(_node_exponents(X, i))
    if phi_i == 0:
        return None
    return X * a_monomial(cd, n_f, i).inverse()


def mono_e(cd: CartanData, X: LaurentMonomial, i: int) -> Optional[LaurentMonomial]:
    check_node(i)
    terms = _node_exponents(X, i)
    phi_i, _, n_e = prefix_scan(terms)
    total = sum(e for _, e in terms)
    if phi_i - total == 0:
        return None
    return X * a_monomial(cd, n_e, i)


def format_monomial(X: LaurentMonomial) -> str:
    if X.is_one():
        return "1"
    parts = []
    for (s, i), e in X.items():
        parts.append(f"X[{s},{i}]" if e == 1 else f"X[{s},{i}]^{e}")
    return "*".join(parts)


_FACTOR_RE = re.compile(r"X\[(-?\d+),([12])\](?:\^(-?\d+))?")


def parse_monomial(text: str) -> LaurentMonomial:
    """Parse ``1`` or ``X[s,i]^e*X[s,i]^e*...``; repeated factors multiply."""
    if text == "1":
        return LaurentMonomial()
    exps = {}
    pos = 0
    while True:
        match = _FACTOR_RE.match(text, pos)
        if not match:
            raise ParseError("expected a factor 'X[<s>,<i>]^<e>'", text, pos)
        key = (int(match.group(1)), int(match.group(2)))
        exps[key] = exps.get(key, 0) + int(match.group(3) or 1)
        pos = match.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise ParseError("expected '*' between factors", text, pos)
        pos += 1
    return LaurentMonomial(exps)

"""Exact arithmetic in the groups U_6n = <a, b | a^(2n) = b^3 = 1, bab = a>.

Every element has a unique canonical word a^u b^v with 0 <= u < 2n and
0 <= v < 3.  The defining relations give b a = a b^2 (and b^2 a = a b),
so pushing b^v through a^u multiplies the b-exponent by 2^u mod 3, i.e.
leaves it alone for even u and doubles it for odd u.  All operations
below are therefore O(1) integer arithmetic on the two exponents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

#: Exhaustive (Cayley-table / closure) checks refuse groups larger than this.
DEFAULT_ORACLE_LIMIT = 300


class OracleLimitExceeded(Exception):
    """An exhaustive check was requested for a group above the size bound."""


@dataclass(frozen=True)
class GroupParams:
    """Family parameter n; U_6n has order 6n and a has order 2n."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def two_n(self) -> int:
        return 2 * self.n

    @property
    def order(self) -> int:
        return 6 * self.n


@dataclass(frozen=True, order=True)
class Element:
    """Canonical word a^a_exp b^b_exp; construct via the module functions."""

    a_exp: int
    b_exp: int


def identity(params: GroupParams) -> Element:
    return Element(0, 0)


def multiply(params: GroupParams, x: Element, y: Element) -> Element:
    """Product x * y in canonical form.

    b^v a^u = a^u b^(v * 2^u mod 3), so x's b-exponent doubles mod 3 when
    y contributes an odd power of a.
    """
    v = x.b_exp if y.a_exp % 2 == 0 else (2 * x.b_exp) % 3
    return Element((x.a_exp + y.a_exp) % params.two_n, (v + y.b_exp) % 3)


def inverse(params: GroupParams, x: Element) -> Element:
    """Canonical form of b^(3-v) a^(2n-u), the inverse of a^u b^v."""
    u = (-x.a_exp) % params.two_n
    # moving b^(3-v) past a^(2n-u): -2v = v mod 3 for odd u
    v = (-x.b_exp) % 3 if x.a_exp % 2 == 0 else x.b_exp
    return Element(u, v)


def power(params: GroupParams, x: Element, k: int) -> Element:
    """k-th power of x by the closed forms for canonical words, k >= 0.

    (a^u b^v)^k is a^(uk mod 2n) times: b^0 when v = 0; b^(vk mod 3) when
    u is even; b^0 when u is odd and k is even; b^v when u and k are odd.
    """
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    u = (x.a_exp * k) % params.two_n
    if x.b_exp == 0:
        v = 0
    elif x.a_exp % 2 == 0:
        v = (x.b_exp * k) % 3
    elif k % 2 == 0:
        v = 0
    else:
        v = x.b_exp
    return Element(u, v)


def conjugate(params: GroupParams, h: Element, g: Element) -> Element:
    """g^-1 h g."""
    return multiply(params, multiply(params, inverse(params, g), h), g)


def all_elements(params: GroupParams) -> list[Element]:
    """All 6n canonical elements, ordered lexicographically by (a_exp, b_exp)."""
    return [Element(u, v) for u in range(params.two_n) for v in range(3)]


def cayley_table(
    params: GroupParams, limit: int = DEFAULT_ORACLE_LIMIT
) -> dict[tuple[Element, Element], Element]:
    """Full multiplication table, for exhaustive checks on small groups."""
    if params.order > limit:
        raise OracleLimitExceeded(
            f"group order {params.order} exceeds the exhaustive-check limit "
            f"{limit}; use the closed-form operations for groups this large"
        )
    elems = all_elements(params)
    return {(x, y): multiply(params, x, y) for x in elems for y in elems}


# text form: "e", or "a^u b^v" with unit exponents bare and zero factors dropped

_ELEMENT_RE = re.compile(
    r"^\s*(?:(?P<a>a)(?:\s*\^\s*(?P<ae>\d+))?)?"
    r"\s*(?:(?P<b>b)(?:\s*\^\s*(?P<be>\d+))?)?\s*$"
)


def format_element(x: Element) -> str:
    if x.a_exp == 0 and x.b_exp == 0:
        return "e"
    parts = []
    if x.a_exp:
        parts.append("a" if x.a_exp == 1 else f"a^{x.a_exp}")
    if x.b_exp:
        parts.append("b" if x.b_exp == 1 else f"b^{x.b_exp}")
    return " ".join(parts)


def parse_element(params: GroupParams, text: str) -> Element:
    """Parse the text form back into a canonical element.

    Exponents outside the canonical ranges are reduced mod 2n / mod 3, so
    both the 0-based and the 1-based exponent conventions are accepted.
    """
    if text.strip() == "e":
        return Element(0, 0)
    m = _ELEMENT_RE.match(text)
    if not m or (m.group("a") is None and m.group("b") is None):
        raise ValueError(f"not an element: {text!r}")
    u = 0
    if m.group("a"):
        u = int(m.group("ae")) if m.group("ae") is not None else 1
    v = 0
    if m.group("b"):
        v = int(m.group("be")) if m.group("be") is not None else 1
    return Element(u % params.two_n, v % 3)

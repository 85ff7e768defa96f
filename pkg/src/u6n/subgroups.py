"""Symbolic catalog of the subgroups of U_6n.

Every subgroup is one of three shapes, indexed by a divisor t of 2n:

  Cyclic(t)     <a^t>         order 2n/t, elements a^(tk)
  Full(t)       <a^t, b>      order 3*(2n/t), elements a^(tk) b^u
  Twisted(t,s)  <a^t b^s>     order 2n/t, s in {1, 2}; exists only for
                              t odd, or t even with 2n/t divisible by 3
                              (otherwise <a^t b^s> collapses to <a^t, b>)

Membership, containment and orders all reduce to modular arithmetic on
the t and s parameters, so the catalog never needs to materialize
element sets except for its own small-n consistency assertions.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .group import DEFAULT_ORACLE_LIMIT, Element, GroupParams


class Kind(enum.Enum):
    CYCLIC = "C"
    FULL = "F"
    TWISTED = "T"


_KIND_RANK = {Kind.CYCLIC: 0, Kind.FULL: 1, Kind.TWISTED: 2}


@dataclass(frozen=True)
class SubgroupDescriptor:
    kind: Kind
    t: int
    s: int | None = None

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be positive, got {self.t}")
        if self.kind is Kind.TWISTED:
            if self.s not in (1, 2):
                raise ValueError(f"twisted subgroup needs s in {{1, 2}}, got {self.s}")
        elif self.s is not None:
            raise ValueError(f"{self.kind.value}({self.t}) takes no s parameter")

    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_RANK[self.kind], self.t, self.s or 0)

    def __str__(self) -> str:
        return format_descriptor(self)


def cyclic(t: int) -> SubgroupDescriptor:
    return SubgroupDescriptor(Kind.CYCLIC, t)


def full(t: int) -> SubgroupDescriptor:
    return SubgroupDescriptor(Kind.FULL, t)


def twisted(t: int, s: int) -> SubgroupDescriptor:
    return SubgroupDescriptor(Kind.TWISTED, t, s)


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of m >= 1 as (prime, exponent) pairs, primes ascending."""
    if m < 1:
        raise ValueError(f"cannot factorize {m}")
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def divisors(m: int) -> list[int]:
    """All divisors of m in increasing order, from the prime factorization."""
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    divs.sort()
    return divs


def twisted_exists(params: GroupParams, t: int) -> bool:
    """Whether <a^t b^s> is a subgroup in its own right for this divisor t."""
    return t % 2 == 1 or (params.two_n // t) % 3 == 0


def validate_descriptor(params: GroupParams, d: SubgroupDescriptor) -> None:
    if params.two_n % d.t != 0:
        raise ValueError(f"{d} invalid: t = {d.t} does not divide {params.two_n}")
    if d.kind is Kind.TWISTED and not twisted_exists(params, d.t):
        raise ValueError(
            f"{d} invalid: t = {d.t} is even and {params.two_n}/{d.t} is not "
            f"divisible by 3, so <a^{d.t} b^{d.s}> is <a^{d.t}, b> in disguise"
        )


def enumerate_subgroups(
    params: GroupParams, check_exclusive: bool | None = None
) -> list[SubgroupDescriptor]:
    """All subgroups of U_6n as descriptors, sorted by (kind, t, s).

    Includes the trivial subgroup as Cyclic(2n).  When the group is small
    enough (or check_exclusive is forced on) the pairwise distinctness of
    the element sets is asserted as a guard against descriptor bugs.
    """
    divs = divisors(params.two_n)
    out = [cyclic(t) for t in divs]
    out += [full(t) for t in divs]
    out += [twisted(t, s) for t in divs if twisted_exists(params, t) for s in (1, 2)]
    out.sort(key=SubgroupDescriptor.sort_key)
    if check_exclusive is None:
        check_exclusive = params.order <= DEFAULT_ORACLE_LIMIT
    if check_exclusive:
        sets = [subgroup_elements(params, d) for d in out]
        if len(set(sets)) != len(sets):
            raise AssertionError(
                f"descriptor element sets collide at n = {params.n}"
            )
    return out


def enumerate_normal_subgroups(params: GroupParams) -> list[SubgroupDescriptor]:
    """All normal subgroups: Cyclic(t) for even t, Full(t) for every t."""
    divs = divisors(params.two_n)
    out = [cyclic(t) for t in divs if t % 2 == 0]
    out += [full(t) for t in divs]
    out.sort(key=SubgroupDescriptor.sort_key)
    return out


def subgroup_elements(params: GroupParams, d: SubgroupDescriptor) -> frozenset[Element]:
    """The subgroup's element set; 2n/t elements, or 3*(2n/t) for Full."""
    validate_descriptor(params, d)
    two_n = params.two_n
    q = two_n // d.t
    if d.kind is Kind.CYCLIC:
        return frozenset(Element(d.t * k % two_n, 0) for k in range(q))
    if d.kind is Kind.FULL:
        return frozenset(
            Element(d.t * k % two_n, v) for k in range(q) for v in range(3)
        )
    if d.t % 2 == 1:
        # generator a^t b^s has odd a-exponent: b-part alternates with k
        return frozenset(Element(d.t * k % two_n, d.s * (k % 2) % 3) for k in range(q))
    return frozenset(Element(d.t * k % two_n, d.s * k % 3) for k in range(q))


def subgroup_order(params: GroupParams, d: SubgroupDescriptor) -> int:
    q = params.two_n // d.t
    return 3 * q if d.kind is Kind.FULL else q


def contains_element(params: GroupParams, d: SubgroupDescriptor, x: Element) -> bool:
    """Closed-form membership test, equivalent to x in subgroup_elements(d).

    The b-exponent of the member a^(tk) b^? depends only on k mod 2 (t odd)
    or k mod 3 (t even), both of which are determined by x.a_exp because
    2n/t is even respectively divisible by 3.
    """
    if x.a_exp % d.t != 0:
        return False
    if d.kind is Kind.FULL:
        return True
    if d.kind is Kind.CYCLIC:
        return x.b_exp == 0
    k = x.a_exp // d.t
    if d.t % 2 == 1:
        return x.b_exp == d.s * (k % 2) % 3
    return x.b_exp == d.s * (k % 3) % 3


def subgroup_leq(
    params: GroupParams, d1: SubgroupDescriptor, d2: SubgroupDescriptor
) -> bool:
    """Containment d1 <= d2, decided by membership of d1's generators in d2."""
    a_gen = Element(d1.t % params.two_n, 0)
    if d1.kind is Kind.CYCLIC:
        return contains_element(params, d2, a_gen)
    if d1.kind is Kind.FULL:
        return contains_element(params, d2, a_gen) and contains_element(
            params, d2, Element(0, 1)
        )
    return contains_element(params, d2, Element(d1.t % params.two_n, d1.s))


_KIND_BY_LETTER = {k.value: k for k in Kind}

_DESCRIPTOR_RE = re.compile(r"^\s*([CFT])\s*\(\s*(\d+)\s*(?:,\s*([12])\s*)?\)\s*$")


def format_descriptor(d: SubgroupDescriptor) -> str:
    if d.kind is Kind.TWISTED:
        return f"T({d.t},{d.s})"
    return f"{d.kind.value}({d.t})"


def parse_descriptor(params: GroupParams, text: str) -> SubgroupDescriptor:
    """Parse "C(t)" / "F(t)" / "T(t,s)" and validate against params."""
    m = _DESCRIPTOR_RE.match(text)
    if not m:
        raise ValueError(f"not a subgroup descriptor: {text!r}")
    kind = _KIND_BY_LETTER[m.group(1)]
    t = int(m.group(2))
    s = int(m.group(3)) if m.group(3) is not None else None
    if (kind is Kind.TWISTED) != (s is not None):
        raise ValueError(f"descriptor {text!r} has a malformed parameter list")
    d = SubgroupDescriptor(kind, t, s)
    validate_descriptor(params, d)
    return d

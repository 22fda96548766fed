"""Exact dyadic rationals, standard dyadic intervals and partitions.

Everything here is an immutable value; no floats anywhere.  All breakpoints
live in [0,1] and all exponents are capped by DEPTH_CAP so integer widths
stay bounded.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key

from .errors import DepthExceeded, NoConjugate, NotInE, ParseError

DEPTH_CAP = 62


def _check_depth(exp: int) -> None:
    if exp > DEPTH_CAP:
        raise DepthExceeded(f"exponent {exp} exceeds DEPTH_CAP={DEPTH_CAP}")


@dataclass(frozen=True, order=False)
class Dyadic:
    """num / 2**exp, normalized so exp == 0 or num is odd."""

    num: int
    exp: int = 0

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("exponent must be non-negative")
        num, exp = self.num, self.exp
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        _check_depth(exp)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def _scaled(self, exp: int) -> int:
        return self.num << (exp - self.exp)

    def __lt__(self, other: "Dyadic") -> bool:
        e = max(self.exp, other.exp)
        return self._scaled(e) < other._scaled(e)

    def __le__(self, other: "Dyadic") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Dyadic") -> bool:
        return other < self

    def __ge__(self, other: "Dyadic") -> bool:
        return other <= self

    def __add__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        return Dyadic(self._scaled(e) + other._scaled(e), e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        return Dyadic(self._scaled(e) - other._scaled(e), e)

    def mul_pow2(self, k: int) -> "Dyadic":
        """Multiply by 2**k (k may be negative)."""
        if k >= self.exp:
            return Dyadic(self.num << (k - self.exp), 0)
        return Dyadic(self.num, self.exp - k)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def parse_dyadic(text: str, pos: str = "") -> Dyadic:
    """Parse "0", "1" or "k/2^m" with the denominator written in decimal."""
    where = f" at {pos}" if pos else ""
    text = text.strip()
    if "/" in text:
        top, _, bottom = text.partition("/")
        try:
            num, den = int(top), int(bottom)
        except ValueError:
            raise ParseError(f"malformed dyadic {text!r}{where}") from None
        if den <= 0 or den & (den - 1):
            raise ParseError(f"denominator {den} is not a power of two{where}")
        return Dyadic(num, den.bit_length() - 1)
    try:
        return Dyadic(int(text))
    except ValueError:
        raise ParseError(f"malformed dyadic {text!r}{where}") from None


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class SdInterval:
    """[k/2^m, (k+1)/2^m] inside [0,1]."""

    k: int
    m: int

    def __post_init__(self):
        if self.m < 0 or not 0 <= self.k <= (1 << self.m) - 1:
            raise ValueError(f"not a standard dyadic interval: k={self.k}, m={self.m}")
        _check_depth(self.m)

    @classmethod
    def from_endpoints(cls, lo: Dyadic, hi: Dyadic) -> "SdInterval":
        length = hi - lo
        if length.num != 1:
            raise ValueError(f"[{lo}, {hi}] is not a standard dyadic interval")
        m = length.exp
        if lo.exp > m:
            raise ValueError(f"[{lo}, {hi}] is not a standard dyadic interval")
        return cls(lo.num << (m - lo.exp), m)

    @property
    def lo(self) -> Dyadic:
        return Dyadic(self.k, self.m)

    @property
    def hi(self) -> Dyadic:
        return Dyadic(self.k + 1, self.m)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


UNIT = SdInterval(0, 0)


@dataclass(frozen=True)
class SdPartition:
    """Breakpoints 0 = a_0 < a_1 < ... < a_n = 1 with s.d. subintervals."""

    breakpoints: tuple[Dyadic, ...]

    def __post_init__(self):
        bps = tuple(self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if len(bps) < 2 or bps[0] != ZERO or bps[-1] != ONE:
            raise ValueError("partition must run from 0 to 1")
        for a, b in zip(bps, bps[1:]):
            if not a < b:
                raise ValueError(f"breakpoints not increasing at {a}")
            SdInterval.from_endpoints(a, b)  # raises if not s.d.

    @property
    def n(self) -> int:
        return len(self.breakpoints) - 1

    def subintervals(self) -> tuple[SdInterval, ...]:
        return tuple(
            SdInterval.from_endpoints(a, b)
            for a, b in zip(self.breakpoints, self.breakpoints[1:])
        )

    def __str__(self) -> str:
        return ",".join(str(b) for b in self.breakpoints)


TRIVIAL = SdPartition((ZERO, ONE))


def parse_partition(text: str) -> SdPartition:
    tokens = text.split(",")
    points = [parse_dyadic(tok, pos=f"position {i}") for i, tok in enumerate(tokens)]
    for i, (a, b) in enumerate(zip(points, points[1:])):
        if not a < b:
            raise ParseError(f"breakpoints not increasing at position {i + 1}")
    try:
        return SdPartition(tuple(points))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class SignedPoint:
    point: Dyadic
    sign: str  # '+' or '-'


def midpoint(iv: SdInterval) -> Dyadic:
    _check_depth(iv.m + 1)
    return Dyadic(2 * iv.k + 1, iv.m + 1)


def midpoint_inverse(p: Dyadic) -> SdInterval:
    """The unique s.d. interval whose midpoint is p, for p in (0,1)."""
    if not ZERO < p < ONE:
        raise NotInE(f"{p} is not an interior dyadic point")
    # p = a/2^n with a odd, n >= 1; interval is [(a-1)/2^n, (a+1)/2^n].
    return SdInterval((p.num - 1) >> 1, p.exp - 1)


def side(iv: SdInterval) -> Side:
    if iv == UNIT:
        return Side.RIGHT  # convention
    return Side.LEFT if iv.k % 2 == 0 else Side.RIGHT


def conjugate(iv: SdInterval) -> SdInterval:
    if iv == UNIT:
        raise NoConjugate("[0,1] has no conjugate")
    if iv.k % 2 == 0:
        return SdInterval(iv.k + 1, iv.m)
    return SdInterval(iv.k - 1, iv.m)


def parent(iv: SdInterval) -> SdInterval:
    """The union of iv and its conjugate."""
    if iv == UNIT:
        raise NoConjugate("[0,1] has no parent")
    return SdInterval(iv.k >> 1, iv.m - 1)


def sign(iv: SdInterval) -> str:
    """Recursive sign: root is +, a left child inherits, a right child flips.

    Equivalently: '-' exactly when k has an odd number of 1-bits.
    """
    return "-" if bin(iv.k).count("1") % 2 else "+"


def cmp_mid(a: SdInterval, b: SdInterval) -> int:
    ma, mb = midpoint(a), midpoint(b)
    return -1 if ma < mb else (0 if ma == mb else 1)


def cmp_len(a: SdInterval, b: SdInterval) -> int:
    if a.m != b.m:
        # larger m means shorter interval
        return -1 if a.m > b.m else 1
    return cmp_mid(a, b)


MID_KEY = cmp_to_key(cmp_mid)
LEN_KEY = cmp_to_key(cmp_len)


def spanning_intervals(p: SdPartition) -> tuple[SdInterval, ...]:
    """All s.d. intervals spanned by breakpoint pairs, in midpoint order.

    Computed by recursive midpoint splitting: an interval of the tree either
    is a subinterval of p or splits at its midpoint, which must then be a
    breakpoint.
    """
    bps = set(p.breakpoints)
    found: list[SdInterval] = []

    def descend(iv: SdInterval) -> None:
        found.append(iv)
        mid = midpoint(iv)
        if mid in bps:
            descend(SdInterval(2 * iv.k, iv.m + 1))
            descend(SdInterval(2 * iv.k + 1, iv.m + 1))

    descend(UNIT)
    found.sort(key=MID_KEY)
    return tuple(found)


def spanning_intervals_by_pairs(p: SdPartition) -> tuple[SdInterval, ...]:
    """Quadratic oracle: test every breakpoint pair directly."""
    bps = p.breakpoints
    found = []
    for i in range(len(bps)):
        for j in range(i + 1, len(bps)):
            try:
                found.append(SdInterval.from_endpoints(bps[i], bps[j]))
            except ValueError:
                continue
    found.sort(key=MID_KEY)
    return tuple(found)


def e_points(p: SdPartition) -> tuple[SignedPoint, ...]:
    """Midpoints of the spanning intervals, with their interval signs."""
    return tuple(
        SignedPoint(midpoint(iv), sign(iv)) for iv in spanning_intervals(p)
    )


def point_sign(x: Dyadic) -> str:
    """Sign of an interior dyadic point: the sign of its preimage interval."""
    return sign(midpoint_inverse(x))

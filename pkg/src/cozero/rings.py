"""Finite commutative rings given as direct products Z_{n_1} x ... x Z_{n_k}.

Elements are plain tuples of residues, one per factor.  Everything here is
a pure function on immutable data.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field

NATIVE_LIMIT = 2**64
DEFAULT_MAX_CARDINALITY = 10_000

Element = tuple[int, ...]


class RingSpecError(ValueError):
    """Bad ring-spec text or invalid moduli."""


class CapExceededError(RuntimeError):
    """A configured size cap (cardinality or solver vertex count) was hit."""


@dataclass(frozen=True)
class RingSpec:
    """A direct product of modular rings, written e.g. "Z2xZ3xZ5"."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli:
            raise RingSpecError("ring spec needs at least one factor")
        for n in self.moduli:
            if n < 2:
                raise RingSpecError(f"modulus {n} < 2")
        card = 1
        for n in self.moduli:
            card *= n
            if card >= NATIVE_LIMIT:
                raise RingSpecError("ring cardinality overflows native integers")

    @property
    def cardinality(self) -> int:
        return math.prod(self.moduli)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    @property
    def one(self) -> Element:
        return (1,) * len(self.moduli)

    def elements(self):
        """All ring elements in lexicographic residue order."""
        return itertools.product(*(range(n) for n in self.moduli))

    def validate_element(self, a: Element) -> None:
        if len(a) != len(self.moduli):
            raise ValueError(f"element {a} has wrong arity for {self}")
        for x, n in zip(a, self.moduli):
            if not 0 <= x < n:
                raise ValueError(f"residue {x} out of range mod {n}")

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def mul(self, a: Element, b: Element) -> Element:
        return tuple((x * y) % n for x, y, n in zip(a, b, self.moduli))

    def __str__(self) -> str:
        return "x".join(f"Z{n}" for n in self.moduli)


_SPEC_RE = re.compile(r"^z(\d+)(?:xz(\d+))*$", re.IGNORECASE)


def parse_spec(text: str) -> RingSpec:
    """Parse "Z2xZ3xZ5" (case-insensitive) into a RingSpec."""
    cleaned = text.strip()
    if not _SPEC_RE.match(cleaned):
        raise RingSpecError(f"cannot parse ring spec {text!r}")
    moduli = tuple(int(part[1:]) for part in cleaned.lower().split("x"))
    return RingSpec(moduli)


def _prime_power_factors(n: int) -> list[int]:
    """Prime-power factorization of n as a list [p1^e1, p2^e2, ...], p ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class CrtSplit:
    """A spec with every factor split into prime powers, plus the element bijection."""

    original: RingSpec
    split: RingSpec
    # _groups[i] = prime-power moduli that factor i of the original maps onto
    _groups: tuple[tuple[int, ...], ...] = field(repr=False)

    def to_split(self, a: Element) -> Element:
        self.original.validate_element(a)
        out = []
        for x, group in zip(a, self._groups):
            out.extend(x % q for q in group)
        return tuple(out)

    def from_split(self, b: Element) -> Element:
        self.split.validate_element(b)
        out = []
        pos = 0
        for n, group in zip(self.original.moduli, self._groups):
            residues = b[pos:pos + len(group)]
            pos += len(group)
            # CRT reconstruction over pairwise-coprime prime powers
            x = 0
            for r, q in zip(residues, group):
                m = n // q
                x = (x + r * m * pow(m, -1, q)) % n
            out.append(x)
        return tuple(out)


def crt_split(spec: RingSpec) -> CrtSplit:
    """Split every Z_n factor into its prime-power components Z_{p^e}."""
    groups = tuple(tuple(_prime_power_factors(n)) for n in spec.moduli)
    flat = tuple(q for group in groups for q in group)
    return CrtSplit(original=spec, split=RingSpec(flat), _groups=groups)


def is_unit(spec: RingSpec, a: Element) -> bool:
    return all(math.gcd(x, n) == 1 for x, n in zip(a, spec.moduli))


def in_principal_ideal(spec: RingSpec, a: Element, b: Element,
                       paranoid: bool = False) -> bool:
    """Whether a is a multiple of b, i.e. a is in the ideal Rb.

    The fast path uses that multiples of b mod n are exactly the multiples of
    gcd(b, n).  With paranoid=True the exhaustive search over all r is run as
    well and a mismatch raises (test-only).
    """
    # gcd(0, n) = n, so the b_i = 0 case degenerates correctly to a_i = 0
    fast = all(x % math.gcd(y, n) == 0 for x, y, n in zip(a, b, spec.moduli))
    if paranoid:
        slow = a in principal_ideal(spec, b)
        if fast != slow:
            raise AssertionError(
                f"ideal membership fast path disagrees with oracle "
                f"for a={a}, b={b} in {spec}")
    return fast


def principal_ideal(spec: RingSpec, b: Element) -> frozenset[Element]:
    """The ideal Rb by exhaustive enumeration of all multiples r*b."""
    return frozenset(spec.mul(r, b) for r in spec.elements())


def vertices(spec: RingSpec) -> list[Element]:
    """Non-zero non-unit elements, in lexicographic residue order."""
    zero = spec.zero
    return [a for a in spec.elements() if a != zero and not is_unit(spec, a)]


def is_von_neumann_regular(spec: RingSpec) -> bool:
    """True iff every modulus is squarefree (the ring is a product of fields)."""
    return all(_squarefree(n) for n in spec.moduli)


def _squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def min_prime_count(spec: RingSpec) -> int:
    """Number of field factors after CRT splitting (the n of the clique formula)."""
    if not is_von_neumann_regular(spec):
        raise ValueError(f"{spec} is not von Neumann regular")
    return len(crt_split(spec).split.moduli)


@dataclass(frozen=True)
class AssociateClasses:
    """Partition of the vertex set by equality of generated principal ideals."""

    spec: RingSpec
    classes: tuple[tuple[Element, tuple[Element, ...]], ...]  # (representative, members)
    index: dict[Element, int] = field(compare=False)

    def representative(self, a: Element) -> Element:
        return self.classes[self.index[a]][0]


def associate_classes(spec: RingSpec) -> AssociateClasses:
    """Group vertices with Ra = Rb; representative is the lexicographically smallest.

    In Z_n the ideal Ra is generated by gcd(a, n), so the componentwise gcd
    tuple is a complete class key.  For a product of prime fields the smallest
    member of each class is exactly the {0,1}-pattern vertex.
    """
    buckets: dict[tuple[int, ...], list[Element]] = {}
    for v in vertices(spec):
        key = tuple(math.gcd(x, n) for x, n in zip(v, spec.moduli))
        buckets.setdefault(key, []).append(v)
    classes = []
    index: dict[Element, int] = {}
    # vertices() is lex-sorted, so buckets keep lex order and the first member
    # of each bucket is its representative; order classes by representative.
    for members in sorted(buckets.values()):
        cid = len(classes)
        classes.append((members[0], tuple(members)))
        for m in members:
            index[m] = cid
    return AssociateClasses(spec=spec, classes=tuple(classes), index=index)

"""Finitely generated abelian groups as free rank + cyclic torsion orders.

Groups are kept in a canonical form: the torsion part is split into
prime-power cyclic summands, sorted.  That makes equality structural,
and tensor/Tor reduce to gcd bookkeeping summand by summand:

    Z_a (x) Z_b = Z_gcd(a,b)     Tor(Z_a, Z_b) = Z_gcd(a,b)
    Z   (x) G   = G              Tor(Z, G)     = 0

The text form is "0", "Z", "Z^k", "Z_m", "Z_m^k", or sums joined by
'+', e.g. "Z^2 + Z_3^2".
"""

import re
from math import gcd


def _prime_power_split(n):
    """Split a cyclic order into prime-power parts, e.g. 12 -> [4, 3]."""
    parts = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            q = 1
            while n % d == 0:
                n //= d
                q *= d
            parts.append(q)
        d += 1
    if n > 1:
        parts.append(n)
    return parts


class AbelianGroup:
    """Immutable descriptor of a finitely generated abelian group."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank=0, torsion=()):
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        orders = []
        for t in torsion:
            t = int(t)
            if t == 0:
                free_rank += 1
                continue
            if t < 2:
                if t == 1:
                    continue
                raise ValueError(f"torsion order {t} must be >= 2")
            orders.extend(_prime_power_split(t))
        self.free_rank = free_rank
        self.torsion = tuple(sorted(orders))

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @classmethod
    def cyclic(cls, order):
        return cls(0, (order,)) if order else cls(1, ())

    @classmethod
    def elementary(cls, p, rank):
        """(Z_p)^rank."""
        return cls(0, (p,) * rank)

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def has_p_torsion(self, p):
        return any(t % p == 0 for t in self.torsion)

    def direct_sum(self, *others):
        rank = self.free_rank + sum(g.free_rank for g in others)
        torsion = list(self.torsion)
        for g in others:
            torsion.extend(g.torsion)
        return AbelianGroup(rank, torsion)

    def tensor(self, other):
        torsion = [gcd(a, b) for a in self.torsion for b in other.torsion]
        torsion += list(self.torsion) * other.free_rank
        torsion += list(other.torsion) * self.free_rank
        return AbelianGroup(self.free_rank * other.free_rank, torsion)

    def tor(self, other):
        return AbelianGroup(0, [gcd(a, b) for a in self.torsion for b in other.torsion])

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        seen = {}
        for t in self.torsion:
            seen[t] = seen.get(t, 0) + 1
        for t, k in sorted(seen.items()):
            parts.append(f"Z_{t}" if k == 1 else f"Z_{t}^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"AbelianGroup({self})"


_SUMMAND = re.compile(r"^(?:0|Z(?:_(?P<mod>\d+))?(?:\^(?P<exp>\d+))?)$")


def parse_group(text):
    """Parse the text form back into an AbelianGroup.

    >>> parse_group("Z^2 + Z_3") == AbelianGroup(2, (3,))
    True
    >>> parse_group("0").is_trivial
    True
    """
    rank = 0
    torsion = []
    for raw in text.split("+"):
        part = raw.strip()
        m = _SUMMAND.match(part)
        if m is None:
            raise ValueError(f"cannot parse group summand {part!r}")
        if part == "0":
            continue
        k = int(m.group("exp") or 1)
        if m.group("mod") is None:
            rank += k
        else:
            mod = int(m.group("mod"))
            if mod < 2:
                raise ValueError(f"torsion order must be >= 2 in {part!r}")
            torsion.extend([mod] * k)
    return AbelianGroup(rank, torsion)

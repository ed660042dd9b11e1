"""Exact arithmetic in the prime field F_p, for odd primes p.

Everything downstream works with coefficients in Z/p, so the two things
this module has to get right are small: field arithmetic on residues,
and binomial coefficients mod p via Lucas' theorem (the digit-wise
product C(n, k) = prod C(n_i, k_i) mod p over base-p digits).
"""

from math import comb


class Prime(int):
    """An odd prime, validated at construction.

    Subclasses int so a Prime can be used directly in arithmetic.

    >>> Prime(5) + 1
    6
    >>> Prime(9)
    Traceback (most recent call last):
        ...
    ValueError: 9 is not prime
    """

    def __new__(cls, p):
        p = int(p)
        if p < 2:
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("p = 2 is not supported; the odd-primary power operations need p >= 3")
        # trial division; the primes in play are tiny
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
            d += 1
        return super().__new__(cls, p)

    def __repr__(self):
        return f"Prime({int(self)})"


class FpScalar:
    """A residue in F_p with field operations.

    Arithmetic is closed and every nonzero element is invertible.
    Mixing scalars over different primes is a usage error; plain ints
    coerce to the scalar's field.

    >>> a = FpScalar(2, Prime(5))
    >>> (a * a.inverse()).value
    1
    >>> int(a + 4)
    1
    """

    __slots__ = ("value", "prime")

    def __init__(self, value, prime):
        if not isinstance(prime, Prime):
            prime = Prime(prime)
        self.value = int(value) % prime
        self.prime = prime

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.prime != self.prime:
                raise ValueError(f"mixed primes: {self.prime} vs {other.prime}")
            return other
        if isinstance(other, int):
            return FpScalar(other, self.prime)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.value + other.value, self.prime)

    __radd__ = __add__

    def __neg__(self):
        return FpScalar(-self.value, self.prime)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.value - other.value, self.prime)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.value * other.value, self.prime)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return FpScalar(pow(self.value, self.prime - 2, self.prime), self.prime)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.prime == other.prime and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.prime
        return NotImplemented

    def __hash__(self):
        return hash((self.value, int(self.prime)))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpScalar({self.value}, p={int(self.prime)})"


def binom_mod_p(n, k, p):
    """C(n, k) mod p by Lucas' theorem on base-p digits.

    k > n gives zero, like the ordinary binomial coefficient.

    >>> binom_mod_p(7, 3, Prime(5)).value
    0
    >>> binom_mod_p(4, 1, Prime(5)).value
    4
    """
    if not isinstance(p, Prime):
        p = Prime(p)
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    result = 1
    while k > 0 or n > 0:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return FpScalar(0, p)
        result = (result * comb(nd, kd)) % p
    return FpScalar(result, p)

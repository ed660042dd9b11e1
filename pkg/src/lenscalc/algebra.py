"""The mod-p cohomology ring of a product of lens spaces / classifying spaces.

Each factor F_i of the product is either the lens space L^(2p+1), with

    H^*(L^(2p+1); Z_p) = Z_p[u, v] / (v^2 = 0, u^(p+1) = 0),

or the classifying space B Z_p, whose cohomology is the same algebra
without the u-truncation.  Here |v| = 1, |u| = 2.  The cohomology of the
product is the graded tensor product over Z_p: monomials are cross terms

    v_1^e1 u_1^a1 * v_2^e2 u_2^a2 * ... ,   e_i in {0, 1},  a_i >= 0,

and moving one odd generator past another costs a Koszul sign.
Since B Z_p has cells in every degree, spaces with a classifying-space
factor carry a global degree cap so that monomial enumeration stays
finite; monomials above the cap are treated as zero (i.e. we compute in
a skeleton large enough for every operation in scope).

Classes are stored canonically: a mapping from monomials (with exterior
parts implicitly in increasing factor order) to nonzero residues mod p.

>>> sp = SpaceModel.lens_product(3)
>>> x = thom_class(sp)
>>> str(x)
'u1*v2*u2^2 + 2*v1*u2^3'
>>> x.degree()
7
>>> str(v(sp, 1) * v(sp, 1))
'0'
"""

from dataclasses import dataclass

from .modp import Prime

LENS = "lens"
CLASSIFYING = "classifying"


class InhomogeneousError(ValueError):
    """A degree-graded operation was applied to an inhomogeneous class."""

    def __init__(self, degrees):
        self.degrees = tuple(sorted(degrees))
        super().__init__(f"inhomogeneous class with parts in degrees {list(self.degrees)}")


@dataclass(frozen=True)
class Factor:
    """One factor of the product: a lens space or B Z_p.

    truncation is the largest allowed u-exponent (p for a lens space,
    None for B Z_p, where only the space-wide degree cap binds).
    """

    kind: str
    truncation: int | None

    def __post_init__(self):
        if self.kind not in (LENS, CLASSIFYING):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind == LENS and (self.truncation is None or self.truncation < 1):
            raise ValueError("lens factor needs a positive u-truncation")
        if self.kind == CLASSIFYING and self.truncation is not None:
            raise ValueError("classifying-space factor carries no u-truncation")


class SpaceModel:
    """A product of lens-space and/or B Z_p factors at a fixed odd prime."""

    __slots__ = ("prime", "factors", "degree_cap")

    def __init__(self, prime, factors, degree_cap=None):
        if not isinstance(prime, Prime):
            prime = Prime(prime)
        factors = tuple(factors)
        if not factors:
            raise ValueError("a space model needs at least one factor")
        for f in factors:
            if f.kind == LENS and f.truncation != prime:
                raise ValueError(f"lens factor must be truncated at u^{int(prime)}")
        if any(f.kind == CLASSIFYING for f in factors):
            if degree_cap is None:
                degree_cap = 2 * prime + 6
            if degree_cap < 2 * prime + 2:
                raise ValueError(f"degree cap {degree_cap} too small; need at least {2 * prime + 2}")
        self.prime = prime
        self.factors = factors
        self.degree_cap = degree_cap

    @classmethod
    def lens_product(cls, prime, nfactors=2):
        """Product of nfactors copies of L^(2p+1)."""
        p = prime if isinstance(prime, Prime) else Prime(prime)
        return cls(p, [Factor(LENS, int(p))] * nfactors)

    @classmethod
    def classifying_product(cls, prime, nfactors=2, degree_cap=None):
        """Product of nfactors copies of B Z_p, computed below a degree cap."""
        p = prime if isinstance(prime, Prime) else Prime(prime)
        return cls(p, [Factor(CLASSIFYING, None)] * nfactors, degree_cap)

    @property
    def nfactors(self):
        return len(self.factors)

    @property
    def has_classifying(self):
        return any(f.kind == CLASSIFYING for f in self.factors)

    def __eq__(self, other):
        if not isinstance(other, SpaceModel):
            return NotImplemented
        return (self.prime == other.prime and self.factors == other.factors
                and self.degree_cap == other.degree_cap)

    def __hash__(self):
        return hash((int(self.prime), self.factors, self.degree_cap))

    def __repr__(self):
        kinds = "x".join("L" if f.kind == LENS else "B" for f in self.factors)
        cap = f", cap={self.degree_cap}" if self.degree_cap is not None else ""
        return f"SpaceModel(p={int(self.prime)}, {kinds}{cap})"


class Monomial:
    """A cross monomial: per factor an exterior exponent e in {0,1} and a
    u-exponent a >= 0.  Degree is sum(e_i + 2*a_i)."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple((int(e), int(a)) for e, a in exps)
        for e, a in self.exps:
            if e not in (0, 1) or a < 0:
                raise ValueError(f"bad exponent pair {(e, a)}")

    @property
    def degree(self):
        return sum(e + 2 * a for e, a in self.exps)

    @property
    def is_unit(self):
        return all(e == 0 and a == 0 for e, a in self.exps)

    def fits(self, space):
        """Whether this monomial survives in the given space model."""
        if len(self.exps) != space.nfactors:
            return False
        for (e, a), f in zip(self.exps, space.factors):
            if f.truncation is not None and a > f.truncation:
                return False
        if space.degree_cap is not None and self.degree > space.degree_cap:
            return False
        return True

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        # lexicographic on (factor index, e, a); gives the canonical term order
        return self.exps < other.exps

    def __repr__(self):
        return f"Monomial({self.exps})"


def _mul_monomials(m1, m2, space):
    """Product of two monomials: (sign, Monomial) or None when it vanishes.

    The Koszul sign collects one -1 for each pair of odd generators that
    change order when the two factor-ordered words interleave: the odd
    part of m2's factor i must pass every odd part of m1 in factors > i.
    """
    sign_exp = 0
    exps = []
    tail_odd = sum(e for e, _ in m1.exps)  # odd generators of m1 at factor >= 0
    for (e1, a1), (e2, a2) in zip(m1.exps, m2.exps):
        tail_odd -= e1
        if e1 and e2:
            return None  # v_i^2 = 0
        sign_exp += e2 * tail_odd
        exps.append((e1 + e2, a1 + a2))
    m = Monomial(exps)
    if not m.fits(space):
        return None
    return (-1 if sign_exp % 2 else 1), m


def enumerate_monomials(space, degree):
    """All monomials of the given total degree, in canonical order."""
    if degree < 0:
        return []
    results = []

    def extend(i, remaining, acc):
        if i == space.nfactors:
            if remaining == 0:
                results.append(Monomial(acc))
            return
        f = space.factors[i]
        for e in (0, 1):
            if e > remaining:
                continue
            a_max = (remaining - e) // 2
            if f.truncation is not None:
                a_max = min(a_max, f.truncation)
            for a in range(a_max + 1):
                extend(i + 1, remaining - e - 2 * a, acc + [(e, a)])

    extend(0, degree, [])
    m_ok = [m for m in results if m.fits(space)]
    return sorted(m_ok)


class CohomologyClass:
    """A Z_p-linear combination of monomials, kept in canonical form.

    Terms with zero coefficient are dropped and monomials outside the
    space model (over-truncated or above the degree cap) collapse to
    zero, so equality of classes is equality of the term mappings.
    Classes may be inhomogeneous; degree() is defined only when not.
    """

    __slots__ = ("space", "terms", "_key")

    def __init__(self, space, terms):
        p = space.prime
        clean = {}
        for m, c in terms.items():
            c = int(c) % p
            if c == 0 or not m.fits(space):
                continue
            clean[m] = (clean.get(m, 0) + c) % p
        self.space = space
        self.terms = {m: c for m, c in clean.items() if c}
        self._key = tuple(sorted((m.exps, c) for m, c in self.terms.items()))

    @classmethod
    def zero(cls, space):
        return cls(space, {})

    @classmethod
    def one(cls, space):
        return cls(space, {Monomial([(0, 0)] * space.nfactors): 1})

    def _check_space(self, other):
        if self.space != other.space:
            raise ValueError("classes live over different space models")

    def __add__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        self._check_space(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return CohomologyClass(self.space, terms)

    def __neg__(self):
        return CohomologyClass(self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, int):
            return CohomologyClass(self.space, {m: scalar * c for m, c in self.terms.items()})
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        self._check_space(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sm = _mul_monomials(m1, m2, self.space)
                if sm is None:
                    continue
                sign, m = sm
                terms[m] = terms.get(m, 0) + sign * c1 * c2
        return CohomologyClass(self.space, terms)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be nonnegative integers")
        result = CohomologyClass.one(self.space)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.space == other.space and self._key == other._key

    def __hash__(self):
        return hash((self.space, self._key))

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self):
        return len({m.degree for m in self.terms}) <= 1

    def degree(self):
        """Common degree of all terms; raises for 0 and for mixed degrees."""
        degrees = {m.degree for m in self.terms}
        if not degrees:
            raise ValueError("the zero class has no well-defined degree")
        if len(degrees) > 1:
            raise InhomogeneousError(degrees)
        return degrees.pop()

    def homogeneous_parts(self):
        """Split into degree -> homogeneous class (empty for the zero class)."""
        by_deg = {}
        for m, c in self.terms.items():
            by_deg.setdefault(m.degree, {})[m] = c
        return {d: CohomologyClass(self.space, t) for d, t in sorted(by_deg.items())}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0].exps)

    def __str__(self):
        from .expressions import format_cohomology

        return format_cohomology(self)

    def __repr__(self):
        return f"<CohomologyClass {self} over {self.space!r}>"


def monomial_class(space, exps, coeff=1):
    """The class coeff * (single monomial with the given exponent pairs)."""
    return CohomologyClass(space, {Monomial(exps): coeff})


def u(space, index, power=1):
    """The class u_index^power (index is 1-based)."""
    exps = [(0, 0)] * space.nfactors
    exps[index - 1] = (0, power)
    return monomial_class(space, exps)


def v(space, index):
    """The degree-1 exterior class v_index (1-based)."""
    exps = [(0, 0)] * space.nfactors
    exps[index - 1] = (1, 0)
    return monomial_class(space, exps)


def thom_class(space):
    """The degree-(2p+1) class u1*v2*u2^(p-1) - v1*u2^p.

    This is the classical counterexample class for realizability over a
    product of two (2p+1)-dimensional lens spaces: it is integral (it is
    a Bockstein image), yet carries a nonzero top Steenrod obstruction.
    """
    if space.nfactors != 2:
        raise ValueError("the counterexample class lives over exactly two factors")
    p = space.prime
    return (u(space, 1) * v(space, 2) * u(space, 2, p - 1)) - (v(space, 1) * u(space, 2, p))


def poincare_series(space, max_deg):
    """Dimensions of the degree-n parts for n = 0..max_deg, by enumeration."""
    if space.degree_cap is not None and max_deg > space.degree_cap:
        raise ValueError(f"max degree {max_deg} exceeds the space degree cap {space.degree_cap}")
    return [len(enumerate_monomials(space, n)) for n in range(max_deg + 1)]

"""Mod-p homology of products of B Z_p / lens spaces, and Poincare duality.

H_j(B Z_p; Z_p) is one copy of Z_p in every degree j >= 0; we write a_j
for the standard generator: for odd j it is the mod-p image of the
j-dimensional lens space, and the even generators are normalized by the
homology Bockstein relations

    b(a_j) = a_{j-1}  for j even,   b(a_j) = 0  for j odd.

Cross monomials a_{j_1} x ... x a_{j_k} form the mod-p basis of the
product.  The Bockstein extends to cross terms as a derivation with the
Koszul sign on homological degree.

The integral homology of X = B(Z_p x Z_p) has a classical generating
set: in degree 2n the n classes a_{2i-1} x a_{2n-2i+1} (i = 1..n), and
in degree 2n-1 the n+1 classes a_{2i} x a_{2n-2i-1} + a_{2i-1} x
a_{2n-2i} (i = 0..n, generators with out-of-range index read as zero).
Each of these is killed by the mod-p Bockstein, which is exactly the
criterion (in degrees > 1) for lifting to an integral class.

For a product of two (2p+1)-lens spaces, Poincare duality D is the
monomial dictionary per factor

    D(u^a)   = a_{2p+1-2a}        D(v u^a) = a_{2p-2a}

(in particular a_1 <-> u^p, a_2 <-> v u^(p-1), u <-> a_{2p-1},
v <-> a_{2p}), extended to cross terms by

    D(x1 x x2) = (-1)^(|x1| * (2p+1 - |x2|)) D(x1) x D(x2).

>>> sp = SpaceModel.lens_product(3)
>>> from .algebra import thom_class
>>> str(poincare_dual(thom_class(sp)))
'a5 x a2 + a6 x a1'
"""

from dataclasses import dataclass

from .algebra import LENS, SpaceModel


def _index_bound(space, factor):
    """Largest meaningful generator index for one factor."""
    if factor.kind == LENS:
        return 2 * space.prime + 1
    return space.degree_cap


class AlphaMonomial:
    """A homology cross monomial a_{j_1} x ... x a_{j_k}."""

    __slots__ = ("indices",)

    def __init__(self, indices):
        self.indices = tuple(int(j) for j in indices)
        if any(j < 0 for j in self.indices):
            raise ValueError("generator indices must be nonnegative")

    @property
    def degree(self):
        return sum(self.indices)

    def fits(self, space):
        if len(self.indices) != space.nfactors:
            return False
        return all(j <= _index_bound(space, f)
                   for j, f in zip(self.indices, space.factors))

    def __eq__(self, other):
        return isinstance(other, AlphaMonomial) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __lt__(self, other):
        return self.indices < other.indices

    def __repr__(self):
        return f"AlphaMonomial{self.indices}"


class HomologyClass:
    """A Z_p-linear combination of homology cross monomials, canonical."""

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
        self._key = tuple(sorted((m.indices, c) for m, c in self.terms.items()))

    @classmethod
    def zero(cls, space):
        return cls(space, {})

    def _check_space(self, other):
        if self.space != other.space:
            raise ValueError("classes live over different space models")

    def __add__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        self._check_space(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return HomologyClass(self.space, terms)

    def __neg__(self):
        return HomologyClass(self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, int):
            return HomologyClass(self.space, {m: scalar * c for m, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        return self.space == other.space and self._key == other._key

    def __hash__(self):
        return hash((self.space, self._key))

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self):
        return len({m.degree for m in self.terms}) <= 1

    def degree(self):
        degrees = {m.degree for m in self.terms}
        if not degrees:
            raise ValueError("the zero class has no well-defined degree")
        if len(degrees) > 1:
            from .algebra import InhomogeneousError

            raise InhomogeneousError(degrees)
        return degrees.pop()

    def factor_swap(self):
        """Image under the swap of the two factors (on monomial indices).

        The two conventional forms of cross-product bases differ by this
        relabeling; comparisons across them normalize with it.
        """
        if self.space.nfactors != 2:
            raise ValueError("factor swap is defined for two-factor spaces")
        return HomologyClass(
            self.space,
            {AlphaMonomial(m.indices[::-1]): c for m, c in self.terms.items()},
        )

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0].indices)

    def __str__(self):
        from .expressions import format_homology

        return format_homology(self)

    def __repr__(self):
        return f"<HomologyClass {self} over {self.space!r}>"


def alpha(space, *indices, coeff=1):
    """The class coeff * (a_{indices[0]} x a_{indices[1]} x ...)."""
    if len(indices) != space.nfactors:
        raise ValueError(f"need one index per factor ({space.nfactors})")
    return HomologyClass(space, {AlphaMonomial(indices): coeff})


def homology_bockstein(x):
    """The homology Bockstein, a derivation on cross monomials.

    >>> sp = SpaceModel.classifying_product(3)
    >>> homology_bockstein(alpha(sp, 2, 0)) == alpha(sp, 1, 0)
    True
    """
    terms = {}
    for m, c in x.terms.items():
        left_deg = 0
        for i, j in enumerate(m.indices):
            if j > 0 and j % 2 == 0:
                indices = list(m.indices)
                indices[i] = j - 1
                mm = AlphaMonomial(indices)
                sign = -1 if left_deg % 2 else 1
                terms[mm] = terms.get(mm, 0) + sign * c
            left_deg += j
    return HomologyClass(x.space, terms)


@dataclass(frozen=True)
class IntegralBasisElement:
    """One generator of the integral homology of a two-factor product.

    kind "even" (degree 2n): a_{2i-1} x a_{2n-2i+1} for 1 <= i <= n.
    kind "odd" (degree 2n-1): a_{2i} x a_{2n-2i-1} + a_{2i-1} x a_{2n-2i}
    for 0 <= i <= n, where a's with negative or over-bound index vanish.
    kind "unit" (degree 0): a_0 x a_0, the only free generator.
    """

    degree: int
    kind: str
    i: int

    def as_class(self, space):
        n2 = self.degree
        if self.kind == "unit":
            return alpha(space, 0, 0)
        if self.kind == "even":
            n = n2 // 2
            return _alpha_or_zero(space, 2 * self.i - 1, 2 * n - 2 * self.i + 1)
        n = (n2 + 1) // 2
        first = _alpha_or_zero(space, 2 * self.i, 2 * n - 2 * self.i - 1)
        second = _alpha_or_zero(space, 2 * self.i - 1, 2 * n - 2 * self.i)
        return first + second

    def __str__(self):
        from .expressions import format_homology

        # display over the untruncated model so nothing is dropped
        space = SpaceModel.classifying_product(3, 2, degree_cap=max(12, 2 * self.degree + 2))
        return format_homology(self.as_class(space))


def _alpha_or_zero(space, j1, j2):
    if j1 < 0 or j2 < 0:
        return HomologyClass.zero(space)
    m = AlphaMonomial((j1, j2))
    if not m.fits(space):
        return HomologyClass.zero(space)
    return HomologyClass(space, {m: 1})


def integral_basis(n, space):
    """The classical integral generating set in degree n.

    Over B(Z_p)^2 the count is n//2 generators in even degree n, and
    (n+1)//2 + 1 in odd degree n.  Elements that die entirely under a
    lens-space index bound are omitted.
    """
    if space.nfactors != 2:
        raise ValueError("integral bases are tabulated for two-factor products")
    if n < 0:
        return []
    if n == 0:
        return [IntegralBasisElement(0, "unit", 0)]
    if n % 2 == 0:
        candidates = [IntegralBasisElement(n, "even", i) for i in range(1, n // 2 + 1)]
    else:
        m = (n + 1) // 2
        candidates = [IntegralBasisElement(n, "odd", i) for i in range(m + 1)]
    return [e for e in candidates if e.as_class(space)]


def thom_dual_class(space):
    """a_2 x a_{2p-1} + a_1 x a_{2p}: the homology form of the
    counterexample class (the i=1 odd generator in degree 2p+1)."""
    p = space.prime
    return alpha(space, 2, 2 * p - 1) + alpha(space, 1, 2 * p)


def integral_homology_of_classifying_product(p, n):
    """H_n(B(Z_p x Z_p); Z) as a group descriptor.

    Degree 0 is Z; degree 2m is (Z_p)^m; degree 2m-1 is (Z_p)^(m+1),
    matching the generating sets of integral_basis.
    """
    from .abelian import AbelianGroup

    if n < 0:
        return AbelianGroup.trivial()
    if n == 0:
        return AbelianGroup.free(1)
    if n % 2 == 0:
        return AbelianGroup.elementary(int(p), n // 2)
    return AbelianGroup.elementary(int(p), (n + 1) // 2 + 1)


def mod_p_homology_dimensions(space, max_deg):
    """dim H_n(space; Z_p) for n = 0..max_deg, by counting monomials."""
    per_factor = []
    for f in space.factors:
        bound = _index_bound(space, f)
        per_factor.append([1 if n <= bound else 0 for n in range(max_deg + 1)])
    dims = per_factor[0]
    for nxt in per_factor[1:]:
        dims = [sum(dims[i] * nxt[n - i] for i in range(n + 1)) for n in range(max_deg + 1)]
    return dims


def _dual_index(e, a, p):
    """The duality dictionary on one lens factor: u^a and v u^a."""
    return 2 * p - 2 * a if e else 2 * p + 1 - 2 * a


def poincare_dual(x):
    """Poincare dual of a homogeneous class over one or two lens factors.

    >>> sp = SpaceModel.lens_product(3, 1)
    >>> from .algebra import u
    >>> poincare_dual(u(sp, 1, 3)) == alpha(sp, 1)
    True
    """
    space = x.space
    if any(f.kind != LENS for f in space.factors):
        raise ValueError("Poincare duality needs closed lens-space factors")
    if space.nfactors not in (1, 2):
        raise ValueError("duality is implemented for one or two factors")
    if not x.terms:
        return HomologyClass.zero(space)
    x.degree()  # raises InhomogeneousError on mixed degrees
    p = space.prime
    terms = {}
    for m, c in x.terms.items():
        if space.nfactors == 1:
            (e1, a1), = m.exps
            mm = AlphaMonomial((_dual_index(e1, a1, p),))
            sign = 1
        else:
            (e1, a1), (e2, a2) = m.exps
            d1 = _dual_index(e1, a1, p)
            d2 = _dual_index(e2, a2, p)
            deg1 = e1 + 2 * a1
            codeg2 = 2 * p + 1 - (e2 + 2 * a2)  # = degree of the dual of x2
            sign = -1 if (deg1 * codeg2) % 2 else 1
            mm = AlphaMonomial((d1, d2))
        terms[mm] = terms.get(mm, 0) + sign * c
    return HomologyClass(space, terms)

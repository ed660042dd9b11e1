"""The Bockstein and the odd-primary Steenrod powers P^i.

The Bockstein b is the degree +1 derivation determined on generators by
b(v_i) = u_i and b(u_i) = 0, with the graded Leibniz rule

    b(x y) = b(x) y + (-1)^|x| x b(y).

P^i is the stable operation of degree 2i(p-1) determined by the axioms
P^0 = id, P^i(x) = x^p when |x| = 2i, P^i(x) = 0 when 2i > |x|, and the
Cartan formula P^i(x y) = sum_{j+k=i} P^j(x) P^k(y).  On the ring
generators this pins down P^i(v) = 0 for i >= 1 and P^1(u) = u^p,
P^i(u) = 0 for i >= 2; aggregating the Cartan expansion over an entire
u-power gives

    P^i(u^a) = C(a, i) u^(a + i(p-1))  (mod p),

which is how a general monomial is expanded here, one factor at a time,
without touching the exponential blowup of the word-by-word expansion.
Both operations are additive, so they act termwise on any class.
"""

from .algebra import CohomologyClass, Monomial
from .modp import binom_mod_p


def bockstein(x):
    """The Bockstein derivation of a class (applied termwise).

    >>> from .algebra import SpaceModel, v, u
    >>> sp = SpaceModel.lens_product(3)
    >>> bockstein(v(sp, 1)) == u(sp, 1)
    True
    """
    terms = {}
    for m, c in x.terms.items():
        left_odd = 0  # parity of the degree of everything left of factor i
        for i, (e, a) in enumerate(m.exps):
            if e:
                exps = list(m.exps)
                exps[i] = (0, a + 1)
                mm = Monomial(exps)
                sign = -1 if left_odd % 2 else 1
                terms[mm] = terms.get(mm, 0) + sign * c
                left_odd += 1
    return CohomologyClass(x.space, terms)


def steenrod_power(i, x):
    """P^i of a class, computed by Cartan distribution over the factors.

    >>> from .algebra import SpaceModel, u
    >>> sp = SpaceModel.lens_product(3)
    >>> steenrod_power(1, u(sp, 1)) == u(sp, 1, 3)
    True
    """
    if i < 0:
        raise ValueError("P^i needs i >= 0")
    if i == 0:
        return x
    p = x.space.prime
    terms = {}
    for m, c in x.terms.items():
        # distribute i among the u-blocks; the exterior parts absorb nothing
        for assignment, coeff in _distributions(i, [a for _, a in m.exps], p):
            exps = [(e, a + j * (p - 1)) for (e, a), j in zip(m.exps, assignment)]
            mm = Monomial(exps)
            terms[mm] = terms.get(mm, 0) + coeff * c
    return CohomologyClass(x.space, terms)


def _distributions(i, blocks, p):
    """All ways to split P^i across u-power blocks, with the mod-p weight
    prod C(a_k, j_k) for the split (j_1, ..., j_n) of i."""
    results = []

    def go(k, remaining, acc, weight):
        if weight == 0:
            return
        if k == len(blocks):
            if remaining == 0:
                results.append((tuple(acc), weight))
            return
        for j in range(min(remaining, blocks[k]) + 1):
            w = int(binom_mod_p(blocks[k], j, p))
            go(k + 1, remaining - j, acc + [j], weight * w % p)

    go(0, i, [], 1)
    return results


def thom_obstruction_class(x, i):
    """b(P^i(x)): the degree-(|x| + 2i(p-1) + 1) realizability obstruction.

    A class carried by the fundamental class of a closed oriented
    manifold has all of these equal to zero.
    """
    if i < 1:
        raise ValueError("the obstruction family starts at i = 1")
    return bockstein(steenrod_power(i, x))

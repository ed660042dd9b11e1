"""Bordism spectral-sequence bookkeeping for X = B(Z_p x Z_p).

The spectral sequence converging to oriented bordism has second page
E2_{s,t} = H_s(X; Omega_t); a homology class is realizable by a closed
oriented manifold exactly when every differential out of its position
vanishes.  With the odd-primary coefficient table (all torsion in the
bordism ring lives at the prime 2), the nonzero rows sit in t = 0 mod 4
only, which forces d2, d3, d4 to vanish for degree reasons and confines
any possibly-nonzero differential to r = 1 mod 4.  The first candidate
on a degree-(2p+1) class is therefore

    d5 : H_{2p+1}(X; Omega_0) -> H_{2p-4}(X; Omega_4).

The homology counterexample class in degree 2p+1 is represented by a
singular cycle whose singular locus is a torus with a cone on CP^(p-1)
attached; its d5 image is the boundary class

    circle x (circle x CP^(p-1))          (coefficient on a_1 x a_1)

and the bordism relations of Conner-Floyd reduce that class inside
H_{2p-4}(X; Omega_4).  The two relations, per B Z_p factor, are

  (R1)  [CP^(p-1)] . a_1 = p . a_{2p-1}
  (R2)  p . a_{2n-1} = -([M^4] a_{2n-5} + [M^8] a_{2n-9} + ...)  (n >= 2)

where the M^{4k} are the closed manifolds from the Conner-Floyd
inductive construction and a_{2n-1} stands for the bordism class of the
(2n-1)-lens space.  Rewriting with R1 then R2 and then discarding every
M^{4k} with k > 1 (those terms can be coned off by an allowed bordism
once the class is read on the (2p-4)-skeleton) leaves

    -[M^4] . (a_1 x a_{2p-5}),

a generator of H_{2p-4}(X) with coefficient -[M^4].  Whether that is
nonzero in Omega_4 tensor Z_p is not decided here: it is recorded as a
named assumption on the verdict rather than silently assumed.
"""

import re
from dataclasses import dataclass
from importlib import resources

from .abelian import AbelianGroup, parse_group
from .duality import AlphaMonomial, integral_basis, integral_homology_of_classifying_product
from .modp import Prime

M4_ASSUMPTION = "[M4] is nonzero in Omega_4 tensor Z_p"


# ---------------------------------------------------------------------------
# coefficient tables


class CoefficientTable:
    """t -> Omega_t descriptor, for t = 0..cap, with a provenance note."""

    def __init__(self, entries, note=""):
        self.entries = tuple(entries)
        self.note = note
        if not self.entries or self.entries[0] != AbelianGroup.free(1):
            raise ValueError("a bordism coefficient table must start with Omega_0 = Z")

    @property
    def cap(self):
        return len(self.entries) - 1

    def __getitem__(self, t):
        if t < 0:
            return AbelianGroup.trivial()
        if t > self.cap:
            raise KeyError(f"coefficient table stops at t = {self.cap}, asked for {t}")
        return self.entries[t]

    @classmethod
    def from_text(cls, text, note=""):
        """Parse the line format "t: <group>"; '#' starts a comment."""
        comments = []
        values = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)
            if len(line) > 1 and line[1].strip():
                comments.append(line[1].strip())
            body = line[0].strip()
            if not body:
                continue
            m = re.match(r"^(\d+)\s*:\s*(.+)$", body)
            if m is None:
                raise ValueError(f"line {lineno}: expected 't: <group>', got {body!r}")
            t = int(m.group(1))
            if t in values:
                raise ValueError(f"line {lineno}: duplicate entry for t = {t}")
            values[t] = parse_group(m.group(2))
        if not values:
            raise ValueError("empty coefficient table")
        cap = max(values)
        missing = [t for t in range(cap + 1) if t not in values]
        if missing:
            raise ValueError(f"coefficient table has gaps at t = {missing}")
        return cls([values[t] for t in range(cap + 1)], note or " ".join(comments))

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read(), note=str(path))

    @classmethod
    def default(cls):
        """The shipped oriented-bordism table (2-torsion discarded)."""
        text = resources.files("lenscalc.data").joinpath("oriented_bordism.table").read_text()
        return cls.from_text(text, note="shipped oriented bordism table, mod 2-torsion")


# ---------------------------------------------------------------------------
# pages


class AHSSPage:
    """One page of the spectral sequence over a degree-capped grid."""

    def __init__(self, r, prime, cap, grid):
        self.r = r
        self.prime = prime
        self.cap = cap
        self.grid = dict(grid)

    def entry(self, s, t):
        if s < 0 or t < 0:
            return AbelianGroup.trivial()
        return self.grid.get((s, t), AbelianGroup.trivial())

    def positions(self):
        return sorted(self.grid)


def build_e2_page(p, table, cap):
    """E2_{s,t} = H_s(X) (x) Omega_t  (+)  Tor(H_{s-1}(X), Omega_t) for
    s + t <= cap, from the integral homology of X = B(Z_p x Z_p)."""
    if not isinstance(p, Prime):
        p = Prime(p)
    if cap > table.cap:
        raise ValueError(
            f"grid needs coefficients through t = {cap} but the table stops at {table.cap}"
        )
    grid = {}
    for s in range(cap + 1):
        h_s = integral_homology_of_classifying_product(p, s)
        h_prev = integral_homology_of_classifying_product(p, s - 1)
        for t in range(cap - s + 1):
            omega = table[t]
            entry = h_s.tensor(omega).direct_sum(h_prev.tor(omega))
            if not entry.is_trivial:
                grid[(s, t)] = entry
    return AHSSPage(2, p, cap, grid)


@dataclass(frozen=True)
class StabilityReport:
    """Degree bookkeeping for the low pages of the grid."""

    prime: int
    cap: int
    forced_zero: tuple  # (r, everywhere-zero?) for r = 2, 3, 4
    violations: tuple  # (r, s, t) where source and target are both nonzero
    possible: tuple  # (r, s, t) positions where a differential could live
    rule_respected: bool  # every possible position has t = 0 (4), r = 1 (4)

    @property
    def low_pages_trivial(self):
        return not self.violations

    def first_possible_from(self, s, t):
        rs = [r for r, ss, tt in self.possible if (ss, tt) == (s, t)]
        return min(rs) if rs else None


def page_stability_check(page, max_r=None):
    """Check that d2, d3, d4 are forced zero everywhere on the grid, and
    enumerate where any differential d_r could be nonzero at all.

    A differential d_r : (s,t) -> (s-r, t+r-1) "could be nonzero" when
    both ends of the arrow are nontrivial grid entries.
    """
    if page.cap < 2 * int(page.prime) + 5:
        raise ValueError("stability analysis needs the grid through total degree 2p+5")
    if max_r is None:
        max_r = page.cap
    violations = []
    possible = []
    for (s, t), source in sorted(page.grid.items()):
        if source.is_trivial:
            continue
        for r in range(2, max_r + 1):
            target = page.entry(s - r, t + r - 1)
            if target.is_trivial:
                continue
            possible.append((r, s, t))
            if r in (2, 3, 4):
                violations.append((r, s, t))
    forced = tuple((r, all(v[0] != r for v in violations)) for r in (2, 3, 4))
    rule = all(t % 4 == 0 and r % 4 == 1 for r, _, t in possible)
    return StabilityReport(
        prime=int(page.prime),
        cap=page.cap,
        forced_zero=forced,
        violations=tuple(violations),
        possible=tuple(sorted(possible)),
        rule_respected=rule,
    )


# ---------------------------------------------------------------------------
# bordism expressions and the Conner-Floyd rewrite system


def cp_gen(n):
    """The coefficient generator [CP^n] (degree 2n)."""
    if n < 1:
        raise ValueError("projective-space generators start at CP^1")
    return ("CP", int(n))


def m_gen(dim):
    """The coefficient generator [M^dim], dim = 4k (degree dim)."""
    if dim % 4 != 0 or dim < 4:
        raise ValueError("the inductive bordism generators sit in dimensions 4k")
    return ("M", int(dim))


def _gen_degree(gen):
    kind, n = gen
    return 2 * n if kind == "CP" else n


def _gens_degree(gens):
    return sum(_gen_degree(g) for g in gens)


def _format_gens(gens):
    return "".join(f"[{kind}{n}]" for kind, n in gens)


class BordismExpression:
    """Integer combination of per-factor (coefficient . a_j) cross terms.

    A term is a tuple, one entry per B Z_p factor, of pairs
    (gens, j): a sorted tuple of formal bordism generators acting on the
    a_j basis class of that factor.  Keeping coefficients attached to
    their factor preserves which copy of B Z_p each relation acts on.
    All terms must share the same total degree (coefficient degrees plus
    a-degrees).
    """

    __slots__ = ("prime", "terms", "degree")

    def __init__(self, prime, terms):
        if not isinstance(prime, Prime):
            prime = Prime(prime)
        clean = {}
        degrees = set()
        for key, c in terms.items():
            c = int(c)
            if c == 0:
                continue
            key = tuple((tuple(sorted(gens)), int(j)) for gens, j in key)
            for gens, j in key:
                if j < 0:
                    raise ValueError("negative generator index")
            degrees.add(sum(_gens_degree(gens) + j for gens, j in key))
            clean[key] = clean.get(key, 0) + c
        clean = {k: c for k, c in clean.items() if c}
        if len(degrees) > 1:
            raise ValueError(f"mixed total degrees {sorted(degrees)} in one expression")
        self.prime = prime
        self.terms = clean
        self.degree = degrees.pop() if clean else None

    @classmethod
    def zero(cls, prime):
        return cls(prime, {})

    @classmethod
    def single(cls, prime, factors, coeff=1):
        """One term from [(gens, j), ...] per factor."""
        return cls(prime, {tuple(factors): coeff})

    def __eq__(self, other):
        if not isinstance(other, BordismExpression):
            return NotImplemented
        return self.prime == other.prime and self.terms == other.terms

    def __hash__(self):
        return hash((int(self.prime), tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return BordismExpression(self.prime, terms)

    def __neg__(self):
        return BordismExpression(self.prime, {k: -c for k, c in self.terms.items()})

    def alpha_part(self, space):
        """Forget coefficients: the underlying homology class (mod p).

        Only meaningful once all terms carry the same coefficient
        monomial; used to locate a reduced class in a homology basis.
        """
        from .duality import HomologyClass

        terms = {}
        for key, c in self.terms.items():
            mono = AlphaMonomial(tuple(j for _, j in key))
            terms[mono] = terms.get(mono, 0) + c
        return HomologyClass(space, terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key, c in self.sorted_terms():
            gens_str = "".join(_format_gens(gens) for gens, _ in key)
            alpha_str = " x ".join(f"a{j}" for _, j in key)
            body = f"{gens_str}*({alpha_str})" if gens_str else f"({alpha_str})"
            mag = abs(c)
            if mag != 1:
                body = f"{mag}*{body}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"<BordismExpression {self} (p={int(self.prime)})>"


def _rule_absorb_cp(expr, factor_order):
    """(R1) backwards on one position: [CP^(p-1)] . a_1 -> p . a_{2p-1}.

    Returns the rewritten expression, or None when no term matches.
    """
    p = int(expr.prime)
    cp = cp_gen(p - 1)
    for key in sorted(expr.terms):
        for f in factor_order(len(key)):
            gens, j = key[f]
            if j == 1 and cp in gens:
                c = expr.terms[key]
                remaining = list(gens)
                remaining.remove(cp)
                new_key = list(key)
                new_key[f] = (tuple(remaining), 2 * p - 1)
                terms = dict(expr.terms)
                del terms[key]
                new_key = tuple(new_key)
                terms[new_key] = terms.get(new_key, 0) + c * p
                return BordismExpression(expr.prime, terms)
    return None


def _rule_eliminate_p(expr, factor_order):
    """(R2) on one position: a coefficient divisible by p on a factor with
    an odd index 2n-1 >= 3 expands into the -[M^{4k}] a_{2n-4k-1} tail.

    Returns the rewritten expression, or None when no term matches.
    """
    p = int(expr.prime)
    for key in sorted(expr.terms):
        c = expr.terms[key]
        if c % p != 0:
            continue
        for f in factor_order(len(key)):
            gens, j = key[f]
            if j % 2 == 1 and j >= 3:
                n2 = j  # = 2n - 1
                terms = dict(expr.terms)
                del terms[key]
                q = c // p
                k = 1
                while n2 - 4 * k >= 1:
                    new_key = list(key)
                    new_key[f] = (tuple(sorted(gens + (m_gen(4 * k),))), n2 - 4 * k)
                    new_key = tuple(new_key)
                    terms[new_key] = terms.get(new_key, 0) - q
                    k += 1
                return BordismExpression(expr.prime, terms)
    return None


def _left_to_right(n):
    return range(n)


def conner_floyd_rewrite(expr, factor_order=_left_to_right, fuel=None):
    """Reduce to the normal form with no [CP^(p-1)] acting on an a_1 and
    no p-divisible coefficient on an odd index >= 3.

    Each step preserves the total degree.  (R2) strictly lowers the odd
    index it fires on, and (R1) consumes a CP generator, so reduction
    terminates; the fuel bound is a guard against malformed input.
    """
    if fuel is None:
        fuel = 4 * (expr.degree or 0) + 8
    for _ in range(fuel):
        step = _rule_absorb_cp(expr, factor_order)
        if step is None:
            step = _rule_eliminate_p(expr, factor_order)
        if step is None:
            return expr
        expr = step
    raise RuntimeError("rewrite did not terminate within the fuel bound")


def cone_simplify(expr):
    """Discard terms whose coefficient involves an [M^{4k}] with k > 1.

    Those terms live on a deeper skeleton and bound after coning the
    M^{4k}; what survives must be an Omega_4 coefficient, i.e. exactly
    one [M^4] per term, or the expression was not in the expected shape.
    """
    terms = {}
    for key, c in expr.terms.items():
        all_gens = [g for gens, _ in key for g in gens]
        if any(kind == "M" and n > 4 for kind, n in all_gens):
            continue
        if _gens_degree(all_gens) != 4 or [g for g in all_gens if g[0] == "M"] != [("M", 4)]:
            raise ValueError(
                f"term {key} does not carry a plain [M4] coefficient; "
                "cone simplification applies to Omega_4-level expressions"
            )
        terms[key] = c
    return BordismExpression(expr.prime, terms)


# ---------------------------------------------------------------------------
# the d5 pipeline


def d5_input_boundary(p):
    """The boundary class of the singular cycle for the degree-(2p+1)
    counterexample: circle x (circle x CP^(p-1)), i.e. the a_1 x a_1
    cross term with [CP^(p-1)] acting on the second factor."""
    if not isinstance(p, Prime):
        p = Prime(p)
    return BordismExpression.single(p, [((), 1), ((cp_gen(p - 1),), 1)])


@dataclass(frozen=True)
class D5Verdict:
    """Outcome of the d5 evaluation on the counterexample class."""

    prime: int
    boundary: BordismExpression
    reduced: BordismExpression
    target_group: AbelianGroup
    source_bidegree: tuple
    target_bidegree: tuple
    nontrivial: bool
    conditional: bool
    assumptions: tuple

    def as_dict(self):
        return {
            "prime": self.prime,
            "boundary": str(self.boundary),
            "reduced": str(self.reduced),
            "target_group": str(self.target_group),
            "source_bidegree": list(self.source_bidegree),
            "target_bidegree": list(self.target_bidegree),
            "nontrivial": self.nontrivial,
            "conditional": self.conditional,
            "assumptions": list(self.assumptions),
        }


def evaluate_d5(p, boundary, table=None):
    """Reduce a boundary class through the rewrite system and decide
    whether it is nonzero in H_{2p-4}(X; Omega_4)."""
    if not isinstance(p, Prime):
        p = Prime(p)
    if table is None:
        table = CoefficientTable.default()
    reduced = cone_simplify(conner_floyd_rewrite(boundary))
    target = integral_homology_of_classifying_product(p, 2 * p - 4).tensor(table[4]).direct_sum(
        integral_homology_of_classifying_product(p, 2 * p - 5).tor(table[4])
    )
    nontrivial = False
    assumptions = ()
    if reduced:
        from .algebra import SpaceModel

        space = SpaceModel.classifying_product(p, 2, degree_cap=max(2 * p + 6, 2 * p - 2))
        alpha_class = reduced.alpha_part(space)
        basis_span = {m for e in integral_basis(2 * p - 4, space)
                      for m in e.as_class(space).terms}
        hits_basis = bool(alpha_class) and any(m in basis_span for m in alpha_class.terms)
        if hits_basis:
            nontrivial = True
            assumptions = (M4_ASSUMPTION,)
    return D5Verdict(
        prime=int(p),
        boundary=boundary,
        reduced=reduced,
        target_group=target,
        source_bidegree=(2 * p + 1, 0),
        target_bidegree=(2 * p - 4, 4),
        nontrivial=nontrivial,
        conditional=bool(assumptions),
        assumptions=assumptions,
    )


def evaluate_d5_xi(p, table=None):
    """Run the full pipeline on the counterexample's boundary class.

    The reduced form is -[M4].(a_1 x a_{2p-5}); the verdict is nontrivial
    conditional on the recorded coefficient assumption.
    """
    if not isinstance(p, Prime):
        p = Prime(p)
    return evaluate_d5(p, d5_input_boundary(p), table)

"""Realizability verdicts for homology classes.

Two classical results drive this module.  Necessity: if an integral
class is carried by a closed oriented manifold, then every odd-primary
obstruction b(P^i(x)) of its Poincare dual vanishes.  Sufficiency: if
H_{n-2i(p-1)-1}(X) has no p-torsion for every odd prime p and every
i >= 1, then every class in H_n(X) is realizable.

A mod-p presentation can only probe the prime of its own coefficient
field, so the necessary-condition driver reports per-prime evidence:
NotRealizable when some obstruction is nonzero, otherwise Inconclusive
(never "Realizable" - the condition is one-directional).

Integrality itself is decided by the mod-p Bockstein: in degrees > 1
reduction mod p is injective on these spaces, so a class lifts to an
integral class exactly when the Bockstein kills it.  In degrees <= 1
that criterion loses its footing and the answer is Indeterminate.
"""

from dataclasses import dataclass, field

from .algebra import LENS, CohomologyClass
from .duality import HomologyClass, homology_bockstein
from .steenrod import bockstein, thom_obstruction_class

INTEGRAL = "integral"
NOT_INTEGRAL = "not-integral"
INDETERMINATE = "indeterminate"

NOT_REALIZABLE = "NotRealizable"
INCONCLUSIVE = "Inconclusive"
REALIZABLE = "Realizable"

LOW_DEGREE_NOTE = "every integral homology class of dimension <= 6 is realizable"


@dataclass(frozen=True)
class IntegralityResult:
    status: str
    witness: object = None  # the Bockstein image when status is not-integral

    def __bool__(self):
        return self.status == INTEGRAL


def is_integral(x):
    """Whether a homogeneous mod-p class lifts to an integral class.

    Works for cohomology and homology classes alike (each side has its
    own Bockstein).  Degree <= 1 input comes back Indeterminate; the
    zero class is trivially integral.
    """
    if isinstance(x, CohomologyClass):
        beta = bockstein
    elif isinstance(x, HomologyClass):
        beta = homology_bockstein
    else:
        raise TypeError(f"expected a cohomology or homology class, got {type(x).__name__}")
    if not x.terms:
        return IntegralityResult(INTEGRAL)
    if x.degree() <= 1:  # degree() raises on inhomogeneous input
        return IntegralityResult(INDETERMINATE)
    image = beta(x)
    if image:
        return IntegralityResult(NOT_INTEGRAL, witness=image)
    return IntegralityResult(INTEGRAL)


@dataclass(frozen=True)
class ObstructionReport:
    """The full obstruction family b(P^i(x)) of one class."""

    prime: int
    input_class: CohomologyClass
    integrality: IntegralityResult
    obstructions: tuple  # of (i, witness class), for every i with 2i <= degree
    verdict: str
    note: str | None = None

    def nonzero_witnesses(self):
        return [(i, w) for i, w in self.obstructions if w]

    def as_dict(self):
        from .expressions import format_cohomology

        return {
            "prime": self.prime,
            "class": format_cohomology(self.input_class),
            "integrality": self.integrality.status,
            "obstructions": [
                {
                    "i": i,
                    "witness": format_cohomology(w),
                    "degree_shift": 2 * i * (self.prime - 1) + 1,
                    "nonzero": bool(w),
                }
                for i, w in self.obstructions
            ],
            "verdict": self.verdict,
            "note": self.note,
        }


def thom_verdict(x):
    """Run the full family of necessary obstructions on an integral class.

    Every i >= 1 with 2i <= |x| is evaluated (anything higher dies by
    unstability).  Raises unless the class is homogeneous and integral.
    """
    if not isinstance(x, CohomologyClass):
        raise TypeError("obstruction verdicts run on cohomology classes; dualize first")
    result = is_integral(x)
    if result.status != INTEGRAL:
        raise ValueError(f"obstruction verdicts need an integral class (integrality: {result.status})")
    p = x.space.prime
    if not x.terms:
        return ObstructionReport(int(p), x, result, (), INCONCLUSIVE)
    deg = x.degree()
    witnesses = tuple((i, thom_obstruction_class(x, i)) for i in range(1, deg // 2 + 1))
    verdict = NOT_REALIZABLE if any(w for _, w in witnesses) else INCONCLUSIVE
    note = None
    if x.space.nfactors == 2 and all(f.kind == LENS for f in x.space.factors):
        dual_degree = 2 * (2 * p + 1) - deg
        if dual_degree <= 6:
            note = LOW_DEGREE_NOTE
    return ObstructionReport(int(p), x, result, witnesses, verdict, note)


class HomologyTable:
    """degree -> integral homology group, as far as it is populated."""

    def __init__(self, groups):
        self.groups = dict(groups)
        for n, g in self.groups.items():
            if any(t < 2 for t in g.torsion):
                raise ValueError(f"bad torsion orders in degree {n}")

    @classmethod
    def from_list(cls, groups):
        return cls(enumerate(groups))

    def __getitem__(self, n):
        if n not in self.groups:
            raise KeyError(f"homology table has no entry in degree {n}")
        return self.groups[n]

    def populated_through(self, n):
        return all(m in self.groups for m in range(n + 1))


@dataclass(frozen=True)
class NovikovEntry:
    prime: int
    i: int
    degree: int
    group: object
    has_torsion: bool


@dataclass(frozen=True)
class NovikovReport:
    degree: int
    verdict: str
    trace: tuple = ()
    note: str | None = None

    def as_dict(self):
        return {
            "degree": self.degree,
            "verdict": self.verdict,
            "trace": [
                {
                    "prime": e.prime,
                    "i": e.i,
                    "degree": e.degree,
                    "group": str(e.group),
                    "has_p_torsion": e.has_torsion,
                }
                for e in self.trace
            ],
            "note": self.note,
        }


def novikov_check(table, n, primes):
    """Sufficient condition for degree n: no odd p-torsion in any of the
    degrees n - 2i(p-1) - 1.  Realizable when the hypothesis holds for
    every prime in scope, else Inconclusive (with the failing entries
    traced)."""
    if not table.populated_through(n):
        raise KeyError(f"homology table must be populated through degree {n}")
    trace = []
    for p in primes:
        i = 1
        while True:
            d = n - 2 * i * (int(p) - 1) - 1
            if d < 0:
                break
            group = table[d]
            trace.append(NovikovEntry(int(p), i, d, group, group.has_p_torsion(int(p))))
            i += 1
    verdict = INCONCLUSIVE if any(e.has_torsion for e in trace) else REALIZABLE
    note = LOW_DEGREE_NOTE if n <= 6 else None
    return NovikovReport(n, verdict, tuple(trace), note)

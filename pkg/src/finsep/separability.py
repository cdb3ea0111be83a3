"""The finite-separability decision procedure with two-sided certificates.

A presentation is separable iff (i) the gcd of all relator coefficients,
taken together, is squarefree, and (ii) the monic rational gcd of the
relators has integer coefficients.  Positive verdicts ship a certified
relation k * phi in V with phi monic and k squarefree; negative verdicts
pin the offending prime or the non-integer gcd coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intarith import SquarefreeWitness, bezout, factorize, gcd_list, squarefree
from .poly import IntPoly, RationalGcd, gcd_q
from .ideal import Presentation, membership, monic_multiple_search
from .invariants import (
    MonicRelation,
    certified_relation,
    extract_monic_relation,
    minimal_polynomial,
)


class NotSeparableError(ValueError):
    """Raised when a separable verdict was required."""


class NotSquarefreeError(ValueError):
    """Raised when a squarefree integer was required."""


class UnitInputError(ValueError):
    """Raised when a torsion split is asked of 1 (or smaller)."""


NO_RELATORS = "no_relators"
NON_SQUAREFREE_GCD = "non_squarefree_gcd"
NON_INTEGER_GAMMA = "non_integer_gamma"


@dataclass(frozen=True)
class FailureReason:
    """Why a presentation is not separable.

    kind is one of NO_RELATORS, NON_SQUAREFREE_GCD (with the prime whose
    square divides every coefficient gcd) or NON_INTEGER_GAMMA (with the
    ascending-degree index and value of the offending coefficient).
    """

    kind: str
    prime: int | None = None
    coefficient_index: int | None = None
    coefficient: Fraction | None = None


@dataclass(frozen=True)
class SeparabilityVerdict:
    presentation: Presentation
    separable: bool
    coefficient_gcd: int
    squarefree_witness: SquarefreeWitness | None
    rational_gcd: RationalGcd | None
    failure_reason: FailureReason | None
    positive_witness: MonicRelation | None


def combined_relator(presentation: Presentation) -> IntPoly:
    """Degree-shifted concatenation f1 + f2*x^n1 + f3*x^(n1+n2) + ...

    The relators occupy disjoint degree ranges, so the content of the
    result equals the gcd of all relator coefficients taken together.
    """
    g = IntPoly()
    shift = 0
    for f in presentation.relators:
        g = g + f.shift(shift)
        shift += f.degree
    return g


def decide(presentation: Presentation) -> SeparabilityVerdict:
    """Decide finite separability and construct the certificates."""
    if not presentation.relators:
        # the free monogenic ring has a transcendental generator
        return SeparabilityVerdict(
            presentation=presentation,
            separable=False,
            coefficient_gcd=0,
            squarefree_witness=None,
            rational_gcd=None,
            failure_reason=FailureReason(kind=NO_RELATORS),
            positive_witness=None,
        )
    k = gcd_list(c for f in presentation.relators for c in f.coeffs)
    sf = squarefree(k)
    rational = gcd_q(presentation.relators)

    if not sf.is_squarefree:
        return SeparabilityVerdict(
            presentation=presentation,
            separable=False,
            coefficient_gcd=k,
            squarefree_witness=sf,
            rational_gcd=rational,
            failure_reason=FailureReason(
                kind=NON_SQUAREFREE_GCD, prime=sf.offending_prime
            ),
            positive_witness=None,
        )
    gamma = rational.gamma
    bad = next(
        (i for i, c in enumerate(gamma.coeffs) if c.denominator != 1), None
    )
    if bad is not None:
        return SeparabilityVerdict(
            presentation=presentation,
            separable=False,
            coefficient_gcd=k,
            squarefree_witness=sf,
            rational_gcd=rational,
            failure_reason=FailureReason(
                kind=NON_INTEGER_GAMMA,
                coefficient_index=bad,
                coefficient=gamma.coeffs[bad],
            ),
            positive_witness=None,
        )

    witness = _positive_witness(presentation, k)
    assert witness.k == k and witness.verify(presentation)
    return SeparabilityVerdict(
        presentation=presentation,
        separable=True,
        coefficient_gcd=k,
        squarefree_witness=sf,
        rational_gcd=rational,
        failure_reason=None,
        positive_witness=witness,
    )


def _positive_witness(presentation: Presentation, k: int) -> MonicRelation:
    # smallest-degree phi first; the concatenated-relator extraction is the
    # guaranteed fallback (its content is exactly k)
    mp = minimal_polynomial(presentation)
    bound = max(mp.degree, 2 * presentation.max_degree)
    phi = monic_multiple_search(presentation, k, bound)
    if phi is not None:
        return certified_relation(presentation, k, phi)
    g = combined_relator(presentation)
    assert g.content == k
    return extract_monic_relation(presentation, g)


def witness_theorem_part1(verdict: SeparabilityVerdict) -> tuple[int, tuple[int, ...]]:
    """Present the positive witness as k and the trailing coefficient list.

    With phi = x^n + k1*x^(n-1) + ... + k_(n-1)*x, returns (k, (k1, ...,
    k_(n-1))); k is squarefree and k*phi vanishes at the generator.
    """
    if not verdict.separable:
        raise NotSeparableError("no witness: the presentation is not separable")
    phi = verdict.positive_witness.phi
    n = phi.degree
    tail = tuple(phi[n - i] for i in range(1, n))
    return verdict.positive_witness.k, tail


@dataclass(frozen=True)
class TorsionSplit:
    """Squarefree k = p1*...*pn split for the CRT embedding.

    parts are (p_i, k_i) with k_i = k / p_i, and the Bezout coefficients
    satisfy sum(z_i * k_i) == 1 exactly.
    """

    k: int
    parts: tuple[tuple[int, int], ...]
    bezout_coefficients: tuple[int, ...]

    def verify(self) -> bool:
        return (
            all(p * ki == self.k for p, ki in self.parts)
            and sum(
                z * ki
                for z, (_, ki) in zip(self.bezout_coefficients, self.parts)
            )
            == 1
        )


def torsion_split(k: int) -> TorsionSplit:
    """Split squarefree k > 1 into prime parts with a Bezout identity."""
    if k <= 1:
        raise UnitInputError(f"torsion split needs k > 1, got {k}")
    factors = factorize(k)
    if any(e > 1 for _, e in factors):
        raise NotSquarefreeError(f"{k} is not squarefree")
    primes = [p for p, _ in factors]
    parts = tuple((p, k // p) for p in primes)
    g, z = bezout([ki for _, ki in parts])
    assert g == 1
    split = TorsionSplit(k=k, parts=parts, bezout_coefficients=tuple(z))
    assert split.verify()
    return split

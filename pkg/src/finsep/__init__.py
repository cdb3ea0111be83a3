"""Exact decision of finite separability for monogenic ring presentations.

A monogenic ring is presented by integer relator polynomials with zero
constant term.  This package decides whether such a ring is finitely
separable, computes its invariants (algebraic degree, minimal polynomial,
integer torsion, torsion exponent) and constructs machine-checkable
certificates: monic torsion relations, rational gcds with Bezout cofactors,
and explicit finite quotients with separating homomorphisms.
"""

from .intarith import (
    AllZeroError,
    NonPositiveError,
    SquarefreeWitness,
    bezout,
    gcd_list,
    squarefree,
)
from .poly import (
    ContentSplit,
    IntPoly,
    PolynomialDivisionError,
    RatPoly,
    RationalGcd,
    ZeroPolynomialError,
    compose,
    content_split,
    divrem_q,
    evaluate_in_ring,
    format_poly,
    gcd_q,
)
from .ideal import (
    CanonicalBasis,
    ConstantTermError,
    InvalidBoundError,
    MembershipCertificate,
    Presentation,
    canonical_basis,
    membership,
    monic_multiple_search,
    normal_form,
    reduce_with_quotients,
)
from .invariants import (
    HypothesisUnmetError,
    MonicRelation,
    NotMemberError,
    RingInvariants,
    TorsionData,
    extract_monic_relation,
    minimal_polynomial,
    ring_invariants,
    torsion_data,
)
from .separability import (
    FailureReason,
    NotSeparableError,
    NotSquarefreeError,
    SeparabilityVerdict,
    TorsionSplit,
    UnitInputError,
    combined_relator,
    decide,
    torsion_split,
    witness_theorem_part1,
)
from .quotients import (
    FiniteRing,
    InfiniteQuotient,
    InvalidModulusError,
    SeparationResult,
    build_quotient,
    modulus_order,
    separate,
    subring_closure,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""Ring invariants of a monogenic presentation.

Computes the algebraic degree and minimal polynomial of the generator, its
integer torsion (least k such that k times some monic polynomial in the
generator vanishes) and torsion exponent (least degree of such a monic
polynomial over all admissible k), together with certified witnesses.

The torsion search space: any successful k is a multiple of the least one,
and the minimal polynomial's content d always works when its primitive part
is monic, so the least k divides d and it suffices to try divisors of d in
ascending order.  Degree bounds are recorded in every answer; an infinite
verdict is always bound-relative, never a claim about all degrees.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intarith import factorize
from .poly import IntPoly, content_split
from .ideal import (
    MembershipCertificate,
    Presentation,
    canonical_basis,
    membership,
    monic_multiple_search,
)


class HypothesisUnmetError(ValueError):
    """Raised when no monic torsion relation is available for extraction."""


class NotMemberError(ValueError):
    """Raised when the given polynomial is not in the relator ideal."""


@dataclass(frozen=True)
class MonicRelation:
    """A certified relation k * phi in V with phi monic, zero constant term."""

    k: int
    phi: IntPoly
    certificate: MembershipCertificate

    def verify(self, presentation: Presentation) -> bool:
        return (
            self.phi.is_monic()
            and self.phi.constant == 0
            and self.certificate.claim == self.phi.scale(self.k)
            and self.certificate.verify(presentation)
        )


@dataclass(frozen=True)
class TorsionData:
    """Integer torsion and torsion exponent, bound-relative.

    ``tau`` is None when no monic multiple exists within ``bound``; the
    bound is always recorded so an infinite verdict stays auditable.
    """

    tau: int | None
    exponent: int | None
    witness: MonicRelation | None
    exponent_witness: MonicRelation | None
    bound: int


@dataclass(frozen=True)
class RingInvariants:
    """All invariants of the generator, None standing for infinite/absent."""

    algebraic_degree: int | None
    minimal_polynomial: IntPoly | None
    minimal_content: int | None
    minimal_primitive: IntPoly | None
    torsion: int | None
    torsion_exponent: int | None
    torsion_witness: MonicRelation | None
    search_bound: int


def minimal_polynomial(presentation: Presentation) -> IntPoly | None:
    """Least-degree nonzero ideal member, least positive leading coefficient.

    Read off the canonical basis: its lowest-degree element.  Absent exactly
    when the presentation has no nonzero relator (transcendental generator).
    """
    basis = canonical_basis(presentation)
    if basis.is_empty():
        return None
    return basis.elements[0]


# contents up to this get the exact ascending-divisor scan; larger ones use
# prime-exponent descent (divisor enumeration would explode)
_DIVISOR_SCAN_LIMIT = 10**6


def _divisors_ascending(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _least_successful_multiplier(
    presentation: Presentation, d: int, bound: int
) -> tuple[int, IntPoly] | None:
    """Least k dividing d with a monic multiple within the degree bound.

    Small contents are scanned divisor by divisor in ascending order.  For
    huge contents the bounded-successful divisors are walked from d down by
    stripping prime factors while the search keeps succeeding: d itself
    succeeds whenever anything does (the minimal polynomial is d times a
    monic), success is inherited upward along divisibility, and the result
    still has no successful proper divisor.
    """
    if d <= _DIVISOR_SCAN_LIMIT:
        for k in _divisors_ascending(d):
            phi = monic_multiple_search(presentation, k, bound)
            if phi is not None:
                return k, phi
        return None
    phi = monic_multiple_search(presentation, 1, bound)
    if phi is not None:
        return 1, phi
    phi = monic_multiple_search(presentation, d, bound)
    if phi is None:
        return None
    tau = d
    primes = [p for p, _ in factorize(d)]
    changed = True
    while changed:
        changed = False
        for p in primes:
            while tau % p == 0 and tau // p > 1:
                cand_phi = monic_multiple_search(presentation, tau // p, bound)
                if cand_phi is None:
                    break
                tau, phi = tau // p, cand_phi
                changed = True
    return tau, phi


def torsion_data(
    presentation: Presentation, *, strict_scan: bool = False
) -> TorsionData:
    """Compute (tau, exponent) with certified witnesses.

    The least multiplier always divides the minimal-polynomial content and
    is located by prime-exponent descent from it; ``strict_scan`` instead
    tries every integer up to the content in ascending order, as a defence
    against that divisibility assumption (use only for small contents).
    The degree bound covers both the algebraic degree and twice the largest
    relator degree.
    """
    mp = minimal_polynomial(presentation)
    if mp is None:
        return TorsionData(None, None, None, None, bound=0)
    split = content_split(mp)
    d, primitive = split.content, split.primitive
    degree = mp.degree
    bound = max(degree, 2 * presentation.max_degree)

    if strict_scan:
        found = None
        for k in range(1, d + 1):
            phi = monic_multiple_search(presentation, k, bound)
            if phi is not None:
                found = (k, phi)
                break
    else:
        found = _least_successful_multiplier(presentation, d, bound)
    if found is None:
        return TorsionData(None, None, None, None, bound=bound)
    tau, tau_phi = found

    # torsion finite forces a monic primitive part, and then the content d
    # reaches the least possible monic degree, namely the algebraic degree
    assert primitive.is_monic()
    witness = certified_relation(presentation, tau, tau_phi)
    if tau_phi.degree == degree:
        exp_witness = witness
    else:
        phi_e = monic_multiple_search(presentation, d, degree)
        assert phi_e is not None and phi_e.degree == degree
        exp_witness = certified_relation(presentation, d, phi_e)
    return TorsionData(
        tau=tau,
        exponent=exp_witness.phi.degree,
        witness=witness,
        exponent_witness=exp_witness,
        bound=bound,
    )


def certified_relation(
    presentation: Presentation, k: int, phi: IntPoly
) -> MonicRelation:
    """Package k * phi in V with its membership certificate attached."""
    member, cert = membership(phi.scale(k), presentation)
    assert member
    return MonicRelation(k=k, phi=phi, certificate=cert)


def ring_invariants(
    presentation: Presentation, *, strict_scan: bool = False
) -> RingInvariants:
    """Aggregate every invariant of the presentation's generator."""
    mp = minimal_polynomial(presentation)
    if mp is None:
        return RingInvariants(
            algebraic_degree=None,
            minimal_polynomial=None,
            minimal_content=None,
            minimal_primitive=None,
            torsion=None,
            torsion_exponent=None,
            torsion_witness=None,
            search_bound=0,
        )
    split = content_split(mp)
    data = torsion_data(presentation, strict_scan=strict_scan)
    return RingInvariants(
        algebraic_degree=mp.degree,
        minimal_polynomial=mp,
        minimal_content=split.content,
        minimal_primitive=split.primitive,
        torsion=data.tau,
        torsion_exponent=data.exponent,
        torsion_witness=data.witness,
        search_bound=data.bound,
    )


def extract_monic_relation(
    presentation: Presentation, g: IntPoly
) -> MonicRelation:
    """From a nonzero ideal member g, build k * phi in V with phi monic.

    Here k is the content of g and phi has degree at most deg g; this is
    guaranteed to succeed whenever the minimal polynomial's primitive part
    is monic (i.e. some monic torsion relation exists).
    """
    if g.is_zero():
        raise NotMemberError("the zero polynomial carries no relation")
    member, _ = membership(g, presentation)
    if not member:
        raise NotMemberError(f"{g!r} is not in the relator ideal")
    mp = minimal_polynomial(presentation)
    if mp is None or not content_split(mp).primitive.is_monic():
        raise HypothesisUnmetError(
            "no monic torsion relation is available for this presentation"
        )
    k = content_split(g).content
    phi = monic_multiple_search(presentation, k, g.degree)
    assert phi is not None, "extraction is guaranteed under the hypotheses"
    return certified_relation(presentation, k, phi)

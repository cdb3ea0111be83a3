"""Finite quotient rings and the separation search.

The quotient of a presented monogenic ring by q times everything is again a
presented ring: its relation ideal is generated by the relators plus q*x.
Its canonical basis is finite as a ring exactly when the ladder tops out
with a monic element, say of degree n; normal forms then live on the
monomials x^1 .. x^(n-1) whose coefficients are bounded by the ladder's
per-degree leading coefficients.  The canonical map (generator to the image
of x) is a ring homomorphism, which makes every successful separation an
explicit, checkable certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .intarith import factorize
from .poly import IntPoly
from .ideal import (
    CanonicalBasis,
    Presentation,
    _Echelon,
    canonical_basis,
    normal_form,
)


class InvalidModulusError(ValueError):
    """Raised for moduli below 2."""


@dataclass(frozen=True)
class InfiniteQuotient:
    """Marker result: no monic element appears in the mod-q ladder.

    ``obstruction`` lists the (degree, leading coefficient) ladder of the
    extended ideal; every lead exceeds 1, so normal forms of arbitrarily
    high degree survive and the carrier is infinite.
    """

    presentation: Presentation
    modulus: int
    obstruction: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FiniteRing:
    """The quotient ring with carrier enumerable from its normal forms.

    Elements are coefficient tuples over ``standard_monomials``; the entry
    for degree d ranges over 0 .. position_moduli[i]-1, where each position
    modulus divides q.  For prime q every retained position carries the
    full Z/q, so the carrier has q**len(standard_monomials) elements; in
    general it has the product of the position moduli.
    """

    presentation: Presentation
    modulus: int
    standard_monomials: tuple[int, ...]
    position_moduli: tuple[int, ...]
    monic_degree: int
    basis: CanonicalBasis = field(repr=False)

    @property
    def carrier_size(self) -> int:
        size = 1
        for m in self.position_moduli:
            size *= m
        return size

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.standard_monomials)

    def image(self, p: IntPoly) -> tuple[int, ...]:
        """Image of an integer polynomial (zero constant term) in the quotient."""
        if p.constant != 0:
            raise ValueError("quotient elements come from zero-constant polynomials")
        nf = normal_form(p, self.basis)
        assert nf.degree < self.monic_degree and nf.constant == 0
        return tuple(nf[d] for d in self.standard_monomials)

    def to_poly(self, u: tuple[int, ...]) -> IntPoly:
        coeffs = [0] * (self.monic_degree)
        for d, c in zip(self.standard_monomials, u):
            coeffs[d] = c
        return IntPoly(coeffs)

    def generator(self) -> tuple[int, ...]:
        return self.image(IntPoly.x())

    def add(self, u, v) -> tuple[int, ...]:
        return self.image(self.to_poly(u) + self.to_poly(v))

    def neg(self, u) -> tuple[int, ...]:
        return self.image(-self.to_poly(u))

    def mul(self, u, v) -> tuple[int, ...]:
        return self.image(self.to_poly(u) * self.to_poly(v))

    def int_scale(self, k: int, u) -> tuple[int, ...]:
        return self.image(self.to_poly(u).scale(k))

    def elements(self):
        """Iterate the whole carrier (use only when it is small)."""
        for combo in itertools.product(*(range(m) for m in self.position_moduli)):
            yield combo


def build_quotient(
    presentation: Presentation, q: int
) -> FiniteRing | InfiniteQuotient:
    """Quotient by the relators together with q times everything."""
    if q < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {q}")
    extended = Presentation(presentation.relators + (IntPoly((0, q)),))
    basis = canonical_basis(extended)
    assert all(q % lead == 0 for lead in basis.leads)
    if basis.leads[-1] != 1:
        return InfiniteQuotient(
            presentation=presentation,
            modulus=q,
            obstruction=tuple(zip(basis.degrees, basis.leads)),
        )
    n = basis.degrees[-1]
    moduli = []
    degrees = basis.degrees
    for d in range(1, n):
        i = max((j for j, e in enumerate(degrees) if e <= d), default=None)
        moduli.append(q if i is None else basis.leads[i])
    assert all(m > 1 for m in moduli)
    return FiniteRing(
        presentation=presentation,
        modulus=q,
        standard_monomials=tuple(range(1, n)),
        position_moduli=tuple(moduli),
        monic_degree=n,
        basis=basis,
    )


class _SubringSpan:
    """The subring generated by some elements, held as an additive lattice.

    The additive group of the quotient is Z^(positions) modulo the lattice
    of in-window relation vectors, so the subring closure is the additive
    span of the generators and their pairwise products, iterated to a
    fixpoint.  Products of span elements reduce bilinearly to products of
    the inserted generators, so only those pairs are ever multiplied.
    """

    def __init__(self, ring: FiniteRing, generators):
        self.ring = ring
        self.dim = len(ring.standard_monomials)
        self.echelon = _Echelon(self.dim, 0)
        for element in ring.basis.elements:
            for shift in range(self.dim - element.degree + 1):
                vec = [0] * self.dim
                for j, c in enumerate(element.coeffs):
                    if j + shift >= 1:
                        vec[j + shift - 1] = c
                self.echelon.add(vec)
        members: list[tuple[int, ...]] = []
        work = [ring.image(g) if isinstance(g, IntPoly) else tuple(g)
                for g in generators]
        while work:
            u = work.pop()
            if self.contains(u):
                continue
            self.echelon.add(list(u))
            for v in [*members, u]:
                work.append(ring.mul(u, v))
                work.append(ring.mul(v, u))
            members.append(u)

    def contains(self, u: tuple[int, ...]) -> bool:
        if self.dim == 0:
            return True
        return self.echelon.solve(list(u)) is not None

    def size(self) -> int:
        total = 1
        for j, m in enumerate(self.ring.position_moduli):
            total *= m // abs(self.echelon.rows[j][j])
        return total

    def materialize(self) -> frozenset:
        ring = self.ring
        if self.dim == 0:
            return frozenset({ring.zero()})
        rows = [self.echelon.rows[j] for j in range(self.dim)]
        ranges = [
            range(m // abs(rows[j][j]))
            for j, m in enumerate(ring.position_moduli)
        ]
        out = []
        for combo in itertools.product(*ranges):
            vec = [0] * self.dim
            for t, row in zip(combo, rows):
                if t:
                    for j, c in enumerate(row):
                        vec[j] += t * c
            poly = IntPoly([0] + vec)
            out.append(ring.image(poly))
        closure = frozenset(out)
        assert len(closure) == self.size()
        return closure


def subring_closure(ring: FiniteRing, generators) -> frozenset:
    """Least subset containing the generators, closed under +, -, *.

    Subrings here never adjoin a unit; the empty generator list closes to
    {0}.  Termination is guaranteed by the finite carrier.
    """
    return _SubringSpan(ring, generators).materialize()


@dataclass(frozen=True)
class SeparationResult:
    """Outcome of a separation search over moduli up to a bound.

    When found, the canonical map onto ``quotient`` sends the target
    outside the closure of the generators' images; absence of success is
    reported with the exhausted bound, never as a non-separability claim.
    """

    found: bool
    quotient: FiniteRing | None
    modulus: int | None
    image_of_target: tuple[int, ...] | None
    subring_image: frozenset | None
    bound_exhausted: int | None


def modulus_order(bound: int) -> list[int]:
    """2..bound reordered: primes, then prime powers, then composites."""
    primes, powers, composites = [], [], []
    for q in range(2, bound + 1):
        factors = factorize(q)
        if len(factors) == 1:
            (p, e), = factors
            (primes if e == 1 else powers).append(q)
        else:
            composites.append(q)
    return primes + powers + composites


def separate(
    presentation: Presentation,
    target: IntPoly,
    subring_generators,
    modulus_bound: int,
) -> SeparationResult:
    """Search for a finite quotient separating target from a subring.

    Tries each modulus (primes first), builds the quotient when finite and
    tests whether the target's image escapes the closure of the generator
    images.  The first success is returned as an explicit certificate.
    """
    subring_generators = list(subring_generators)
    for p in [target, *subring_generators]:
        if p.constant != 0:
            raise ValueError("targets and generators need zero constant terms")
    for q in modulus_order(modulus_bound):
        ring = build_quotient(presentation, q)
        if isinstance(ring, InfiniteQuotient):
            continue
        img = ring.image(target)
        span = _SubringSpan(ring, subring_generators)
        if not span.contains(img):
            closure = span.materialize()
            assert img not in closure
            return SeparationResult(
                found=True,
                quotient=ring,
                modulus=q,
                image_of_target=img,
                subring_image=closure,
                bound_exhausted=None,
            )
    return SeparationResult(
        found=False,
        quotient=None,
        modulus=None,
        image_of_target=None,
        subring_image=None,
        bound_exhausted=modulus_bound,
    )

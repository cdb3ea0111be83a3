import random
from fractions import Fraction

import pytest

from finsep.poly import IntPoly, RatPoly
from finsep.ideal import Presentation, membership
from finsep.invariants import torsion_data
from finsep.separability import (
    NON_INTEGER_GAMMA,
    NON_SQUAREFREE_GCD,
    NO_RELATORS,
    NotSeparableError,
    NotSquarefreeError,
    UnitInputError,
    combined_relator,
    decide,
    torsion_split,
    witness_theorem_part1,
)


def ip(*ascending):
    return IntPoly(ascending)


def pres(*coeff_lists):
    return Presentation([IntPoly(c) for c in coeff_lists])


def random_zero_const_poly(rng, max_degree=5, max_coeff=10):
    return IntPoly([0] + [rng.randint(-max_coeff, max_coeff) for _ in range(max_degree)])


def test_decide_monic_relator():
    v = decide(pres((0, -1, 1)))
    assert v.separable
    assert v.coefficient_gcd == 1
    assert v.rational_gcd.gamma == ip(0, -1, 1).to_rational()
    assert v.positive_witness.k == 1
    assert v.positive_witness.phi == ip(0, -1, 1)
    assert v.positive_witness.verify(v.presentation)


def test_decide_square_torsion():
    v = decide(pres((0, 4)))
    assert not v.separable
    assert v.failure_reason.kind == NON_SQUAREFREE_GCD
    assert v.failure_reason.prime == 2
    # the square really divides every relator coefficient
    for r in v.presentation.relators:
        assert all(c % 4 == 0 for c in r.coeffs)


def test_decide_non_integer_gamma():
    v = decide(pres((0, 1, 2)))
    assert not v.separable
    assert v.failure_reason.kind == NON_INTEGER_GAMMA
    assert v.failure_reason.coefficient_index == 1
    assert v.failure_reason.coefficient == Fraction(1, 2)
    assert v.rational_gcd.gamma[1] == Fraction(1, 2)


def test_decide_prime_torsion():
    v = decide(pres((0, 2)))
    assert v.separable
    assert v.coefficient_gcd == 2
    assert v.rational_gcd.gamma == ip(0, 1).to_rational()
    assert v.positive_witness.k == 2 and v.positive_witness.phi == ip(0, 1)


def test_decide_two_relator_separable():
    v = decide(pres((0, -1, 0, 1), (0, -6, 6)))
    assert v.separable
    assert v.coefficient_gcd == 1
    assert v.rational_gcd.gamma == ip(0, -1, 1).to_rational()


def test_decide_non_integer_gamma_with_unit_gcd():
    v = decide(pres((0, 2, 4), (0, 0, 1, 2)))
    assert not v.separable
    assert v.coefficient_gcd == 1
    assert v.failure_reason.kind == NON_INTEGER_GAMMA
    assert v.rational_gcd.gamma == RatPoly((0, Fraction(1, 2), 1))


def test_decide_empty_presentation():
    v = decide(pres())
    assert not v.separable
    assert v.failure_reason.kind == NO_RELATORS
    assert v.coefficient_gcd == 0
    assert v.squarefree_witness is None and v.rational_gcd is None


def test_decide_condition_order_prefers_squarefree_failure():
    # both conditions fail; the coefficient-gcd failure is reported
    v = decide(pres((0, 4, 8)))
    assert v.failure_reason.kind == NON_SQUAREFREE_GCD


def test_witness_examples():
    k, tail = witness_theorem_part1(decide(pres((0, -1, 1))))
    assert (k, tail) == (1, (-1,))

    v = decide(pres((0, 0, 2)))
    assert v.separable
    assert (v.positive_witness.k, v.positive_witness.phi) == (2, ip(0, 0, 1))
    k, tail = witness_theorem_part1(v)
    assert (k, tail) == (2, (0,))

    # the rational gcd x^3 - x is not itself a relation here (only 6 times
    # it is); the least-degree monic relation at k = 1 is x^4 - x^2
    p = pres((0, -6, 0, 6), (0, 0, -1, 0, 1))
    v = decide(p)
    assert v.separable and v.positive_witness.k == 1
    member, _ = membership(ip(0, -1, 0, 1), p)
    assert not member
    assert v.positive_witness.phi == ip(0, 0, -1, 0, 1)
    assert v.positive_witness.verify(p)


def test_witness_requires_separable():
    with pytest.raises(NotSeparableError):
        witness_theorem_part1(decide(pres((0, 4))))


def test_combined_relator_content_matches_gcd():
    rng = random.Random(40)
    for _ in range(100):
        p = Presentation([random_zero_const_poly(rng, 4, 9)
                          for _ in range(rng.randint(1, 3))])
        if not p.relators:
            continue
        g = combined_relator(p)
        member, cert = membership(g, p)
        assert member and cert.verify(p)
        from finsep.intarith import gcd_list
        flat = [c for r in p.relators for c in r.coeffs]
        assert g.content == gcd_list(flat)


def test_verdict_invariance_under_redundant_members():
    rng = random.Random(41)
    for _ in range(60):
        relators = [random_zero_const_poly(rng, 4, 6) for _ in range(rng.randint(1, 2))]
        p = Presentation(relators)
        if not p.relators:
            continue
        v = decide(p)
        extra = IntPoly()
        for r in relators:
            extra = extra + r * random_zero_const_poly(rng, 2, 4)
        v2 = decide(Presentation(relators + [extra]))
        assert v2.separable == v.separable
        shuffled = relators[:]
        rng.shuffle(shuffled)
        assert decide(Presentation(shuffled)).separable == v.separable


def test_separable_certificates_two_sided():
    rng = random.Random(42)
    for _ in range(80):
        p = Presentation([random_zero_const_poly(rng, 4, 8)
                          for _ in range(rng.randint(1, 3))])
        v = decide(p)
        if v.separable:
            w = v.positive_witness
            assert w.k == v.coefficient_gcd
            assert v.squarefree_witness.is_squarefree
            assert w.verify(p)
        elif v.failure_reason.kind == NON_SQUAREFREE_GCD:
            q = v.failure_reason.prime ** 2
            assert all(c % q == 0 for r in p.relators for c in r.coeffs)
        elif v.failure_reason.kind == NON_INTEGER_GAMMA:
            c = v.rational_gcd.gamma[v.failure_reason.coefficient_index]
            assert c.denominator != 1 and c == v.failure_reason.coefficient


def test_torsion_consistency_on_separable_instances():
    # Lemma-4 style consistency: the torsion divides the witness multiplier
    # and is squarefree
    rng = random.Random(43)
    for _ in range(60):
        p = Presentation([random_zero_const_poly(rng, 4, 6) for _ in range(rng.randint(1, 2))])
        v = decide(p)
        if not v.separable:
            continue
        data = torsion_data(p)
        assert data.tau is not None
        assert v.coefficient_gcd % data.tau == 0
        from finsep.intarith import squarefree
        assert squarefree(data.tau).is_squarefree
        # torsion exponent equals the algebraic degree here
        from finsep.invariants import minimal_polynomial
        assert data.exponent == minimal_polynomial(p).degree


def test_torsion_split_examples():
    split = torsion_split(6)
    assert split.parts == ((2, 3), (3, 2))
    z = split.bezout_coefficients
    assert 3 * z[0] + 2 * z[1] == 1
    split = torsion_split(2)
    assert split.parts == ((2, 1),) and split.bezout_coefficients == (1,)
    split = torsion_split(30)
    assert split.parts == ((2, 15), (3, 10), (5, 6))
    assert split.verify()


def test_torsion_split_errors():
    with pytest.raises(NotSquarefreeError):
        torsion_split(12)
    with pytest.raises(UnitInputError):
        torsion_split(1)
    with pytest.raises(UnitInputError):
        torsion_split(0)

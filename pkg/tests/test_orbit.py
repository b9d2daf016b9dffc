from fractions import Fraction
from math import gcd

import pytest

from g2sextic.binform import BinaryForm
from g2sextic.exterior import forms_equal, is_basic
from g2sextic.liealg import sigma_in_theta, su21_basis
from g2sextic.orbit import (
    SYMBOLS,
    SigmaLinear,
    SigmaThreeForm,
    SymTensor,
    aloff_wallach_from_pq,
    aloff_wallach_report,
    family_sextic,
    identity_gram,
    legendrian_lift_smooth,
    metric_from_sextic,
    pq_from_aloff_wallach,
    pullout_power,
    rational_signature,
    realize_metric,
    realize_threeform,
    sigma,
    signature,
    stabilizer_check,
    stabilizer_weights,
    threeform_from_sextic,
)

from reference_data import expected_phi

DICTIONARY = sigma_in_theta(su21_basis())


def expected_family_23():
    zero = SigmaLinear()
    coeffs = [zero] * 7
    coeffs[0] = sigma(3, 2)
    coeffs[1] = sigma(3, 1)
    coeffs[2] = sigma(1, 2) * (-3)
    coeffs[3] = sigma(3, 3) + sigma(2, 2) * 2 - sigma(1, 1) * 3
    coeffs[4] = sigma(2, 1) * 2
    coeffs[5] = sigma(1, 3) * (-3)
    coeffs[6] = sigma(2, 3) * 2
    return BinaryForm.from_monomial_coeffs(6, coeffs)


def expected_metric_23():
    out = SymTensor()
    out.add_product(2, sigma(3, 2), sigma(2, 3))
    out.add_product(Fraction(1, 2), sigma(3, 1), sigma(1, 3))
    out.add_product(Fraction(-2, 5), sigma(1, 2), sigma(2, 1))
    w = sigma(1, 1) * 4 - sigma(2, 2)
    out.add_product(Fraction(-1, 40), w, w)
    return out


def test_family_23_matches_display():
    assert family_sextic(2, 3) == expected_family_23()


def test_family_23_pullout_is_cubic_order():
    assert pullout_power(2, 3) == 3


def test_family_middle_coefficient_general():
    for p, q in [(2, 3), (1, 4), (3, 4), (2, 5), (1, 2)]:
        form = family_sextic(p, q)
        middle = form.coeffs[q]  # coefficient of t^q s^q
        expected = (
            sigma(3, 3) * (q - p) + sigma(2, 2) * p - sigma(1, 1) * q
        ) * Fraction(1, _comb(2 * q, q))
        assert middle == expected


def _comb(n, k):
    from math import comb

    return comb(n, k)


def test_family_rejects_bad_pq():
    with pytest.raises(ValueError):
        family_sextic(2, 4)
    with pytest.raises(ValueError):
        family_sextic(3, 2)
    with pytest.raises(ValueError):
        family_sextic(0, 3)


def test_metric_matches_reference():
    assert metric_from_sextic(family_sextic(2, 3)) == expected_metric_23()


def test_a3_term_trace_elimination():
    # -10 ((s33 + 2 s22 - 3 s11)/20)^2 == -(1/40)(4 s11 - s22)^2
    a3 = (sigma(3, 3) + sigma(2, 2) * 2 - sigma(1, 1) * 3) * Fraction(1, 20)
    lhs = SymTensor().add_product(-10, a3, a3)
    w = sigma(1, 1) * 4 - sigma(2, 2)
    rhs = SymTensor().add_product(Fraction(-1, 40), w, w)
    assert lhs == rhs


def test_zero_sextic_gives_zero_outputs():
    zero_form = BinaryForm(6, [SigmaLinear()] * 7)
    assert metric_from_sextic(zero_form).is_zero()
    assert threeform_from_sextic(zero_form).is_zero()


def test_threeform_swap_antisymmetry():
    # the printed pattern flips sign under a_i <-> a_(6-i)
    slots = [sigma(*SYMBOLS[i]) for i in range(7)]
    direct = threeform_from_sextic(BinaryForm(6, slots))
    swapped = threeform_from_sextic(BinaryForm(6, slots[::-1]))
    negated = SigmaThreeForm()
    negated.terms = {k: -v for k, v in direct.terms.items()}
    assert swapped == negated


def test_realized_metric_is_identity():
    gram = realize_metric(metric_from_sextic(family_sextic(2, 3)), DICTIONARY)
    assert gram == identity_gram()


def test_realized_threeform_is_reference_phi():
    phi = realize_threeform(threeform_from_sextic(family_sextic(2, 3)), DICTIONARY)
    assert forms_equal(phi, expected_phi())
    assert is_basic(phi)


def test_signatures():
    assert signature("split") == (3, 4)
    assert signature("su21") == (7, 0)
    # the compact slice: both (1,2)-block coordinates and the diagonal
    # direction are positive, the (2,3)- and (1,3)-blocks negative
    assert signature("su3") == (3, 4)


def test_rational_signature_helper():
    g = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert rational_signature(g) == (1, 1)
    with pytest.raises(ValueError):
        rational_signature([[Fraction(0)]])


def test_stabilizer_checks():
    # the (2,3) curve is preserved by diag(a, a^4, a^-5)
    assert stabilizer_check(2, 3, weights=(1, 4, -5))
    for p, q in [(2, 3), (1, 4), (3, 5), (2, 7)]:
        assert stabilizer_check(p, q)  # the general diagonal family
    assert not stabilizer_check(2, 3, weights=(1, 0, 0))


def test_aloff_wallach_indices():
    assert pq_from_aloff_wallach(1, 1) == (1, -1)  # the conic family xy = 1
    for p, q in [(2, 3), (1, 4), (3, 5)]:
        k, l = aloff_wallach_from_pq(p, q)
        assert pq_from_aloff_wallach(k, l) == (p, q)
    with pytest.raises(ValueError):
        pq_from_aloff_wallach(1, 2)


def test_aloff_wallach_report_cross_check():
    report = aloff_wallach_report(2, 3)
    assert report["kl_from_index_relations"] == (-8, 7)
    assert report["stabilizer_weights"] == (-1, -4, 5)
    # the stabiliser weights match the circle weights of the (1,4) space
    assert sorted(map(abs, report["stabilizer_weights"])) == [1, 4, 5]


def test_legendrian_lift_examples():
    assert legendrian_lift_smooth(2, 3)
    assert legendrian_lift_smooth(1, 5)
    assert not legendrian_lift_smooth(2, 5)


def test_legendrian_lift_matches_predicate():
    for q in range(2, 11):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            assert legendrian_lift_smooth(p, q) == (p == 1 or q == p + 1)


def test_stabilizer_weights_formula():
    assert stabilizer_weights(2, 3) == (-1, -4, 5)
    assert stabilizer_weights(1, 4) == (2, -7, 5)


def test_realize_detects_reality_violation():
    from g2sextic.orbit import RealityError

    broken = dict(DICTIONARY)
    # drop the conjugation relation between sigma^2_1 and sigma^1_2
    broken[(2, 1)] = broken[(1, 2)]
    with pytest.raises(RealityError):
        realize_metric(metric_from_sextic(family_sextic(2, 3)), broken)


def test_threeform_pattern_proportional_to_i3():
    # the explicit three-form pattern is the alternating sextic invariant
    # up to one constant: pattern = -I3 / 1728000 (frozen from a
    # brute-force determinant evaluation over random triples)
    import random

    from g2sextic.binform import invariant_I3

    rng = random.Random(5)

    def rand_sextic():
        return BinaryForm(6, [Fraction(rng.randint(-5, 5)) for _ in range(7)])

    def det3(rows):
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def wedge_eval(i, j, k, u, v, w):
        return det3(
            [
                [u.coeffs[i], v.coeffs[i], w.coeffs[i]],
                [u.coeffs[j], v.coeffs[j], w.coeffs[j]],
                [u.coeffs[k], v.coeffs[k], w.coeffs[k]],
            ]
        )

    def pattern(u, v, w):
        return (
            3 * (wedge_eval(1, 2, 6, u, v, w) + wedge_eval(0, 4, 5, u, v, w))
            + wedge_eval(3, 0, 6, u, v, w)
            + 6 * wedge_eval(3, 1, 5, u, v, w)
            - 15 * wedge_eval(3, 2, 4, u, v, w)
        )

    for _ in range(10):
        u, v, w = rand_sextic(), rand_sextic(), rand_sextic()
        assert pattern(u, v, w) == Fraction(-1, 1728000) * invariant_I3(u, v, w)

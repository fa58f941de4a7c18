"""Bound pipelines: local certificates, rho-infinity routes, upper bounds from
class-group data, and lower bounds from delta-classes of points."""

from __future__ import annotations

from fractions import Fraction

import pytest

from jacrank.arith import is_squarefree_integer, multiplicative_order
from jacrank.bounds import (
    BoundReport,
    GTrivialityCertificate,
    lower_bound_from_points,
    sophie_local_certificate,
    sophie_upper_bound,
    two_inert_in_real_cyclotomic,
    washington_bound,
    washington_curve_poly,
    washington_local_certificate,
    washington_rho_certificate,
)
from jacrank.numberfield import NumberField
from jacrank.polys import RationalPoly, min_poly_2cos
from jacrank.stores import builtin_class_groups, parse_class_groups


def clg(lines: str) -> object:
    return parse_class_groups("clgroup v1\n" + lines)


# -- Washington family ---------------------------------------------------


def test_washington_curve_poly():
    assert washington_curve_poly(1).int_coeffs() == [1, -4, 1, 1]
    assert washington_curve_poly(143).int_coeffs() == [1, -146, 143, 1]


def test_local_certificate_m1():
    cert = washington_local_certificate(1)
    assert isinstance(cert, GTrivialityCertificate)
    assert cert.bad_primes == (2, 13)
    assert dict(cert.evidence) == {2: "irreducible-mod-p",
                                   13: "eisenstein-after-shift"}
    assert cert.conclusion


def test_local_certificate_m143():
    cert = washington_local_certificate(143)
    assert cert.bad_primes == (2, 20887)
    assert cert.conclusion


def test_local_certificate_rejects_non_squarefree_discriminant():
    with pytest.raises(ValueError, match="outside family"):
        washington_local_certificate(0)  # D = 9
    with pytest.raises(ValueError, match="outside family"):
        washington_local_certificate(3)  # D = 27


def test_eisenstein_shift_identity():
    # 27 f_m(x - m/3) = 27 x^3 - 9 D x + D (2m + 3), D = m^2 + 3m + 9
    for m in range(0, 40):
        D = m * m + 3 * m + 9
        shifted = washington_curve_poly(m).compose(
            RationalPoly([Fraction(-m, 3), Fraction(1)])).scale(27)
        assert shifted == RationalPoly([D * (2 * m + 3), -9 * D, 0, 27])


def test_local_certificates_sweep():
    for m in range(1, 80):
        if is_squarefree_integer(m * m + 3 * m + 9):
            assert washington_local_certificate(m).conclusion


def test_rho_certificate_frozen_signatures():
    # conjugates of theta are theta, 1/(1-theta), 1-1/theta; their signs at
    # the ascending roots span all of F_2^3
    field = NumberField(washington_curve_poly(1))
    th = field.theta()
    conj = (th, (field.one() - th).inverse(), field.one() - th.inverse())
    signs = [field.signature(a).signs for a in conj]
    assert signs == [(-1, 1, 1), (1, 1, -1), (1, -1, 1)]
    for a in conj:  # each is a genuine root of the defining polynomial
        acc = field.zero()
        for i, c in enumerate(washington_curve_poly(1).coeffs):
            acc = acc + a ** i * c
        assert acc.is_zero()


def test_rho_certificate_values():
    for m in (1, 11, 143):
        assert washington_rho_certificate(m) == 0


def test_washington_bounds_fixture():
    store = builtin_class_groups()
    for m, expected in ((1, 1), (11, 3), (143, 5)):
        report = washington_bound(m, store)
        assert report.upper_bound == expected
        assert report.genus == 1
        assert report.rho_infty == "0"
        assert report.g_kernel_dim == 0
        assert report.hypotheses == ()


def test_washington_bound_missing_record():
    with pytest.raises(LookupError, match=r"1,-7,4,1"):
        washington_bound(4, clg(""))  # D = 37 squarefree, no record


# -- inertness of 2 in real cyclotomic fields ------------------------------


def test_two_inert_frozen_values():
    for p in (3, 5, 11, 23, 29, 53, 83):
        assert two_inert_in_real_cyclotomic(p)
    for p in (17, 31, 41, 73, 89):
        assert not two_inert_in_real_cyclotomic(p)
    with pytest.raises(ValueError):
        two_inert_in_real_cyclotomic(2)


def test_two_inert_matches_order_computation():
    # inert iff the order of 2 in (Z/p)^x / {+-1} is (p-1)/2
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
        ordq = multiplicative_order(2, p)
        if pow(2, ordq // 2, p) == p - 1:
            ordq //= 2
        assert two_inert_in_real_cyclotomic(p) == (ordq == (p - 1) // 2)


# -- Sophie Germain upper bounds -------------------------------------------


def test_sophie_local_certificate():
    cert = sophie_local_certificate(11)
    assert cert.bad_primes == (2, 11)
    assert dict(cert.evidence) == {2: "inert-by-order",
                                   11: "totally-ramified-cyclotomic"}
    assert cert.conclusion


def test_sophie_upper_bounds_builtin():
    store = builtin_class_groups()
    for q, g, upper in ((7, 1, 1), (11, 2, 2), (23, 5, 5), (47, 11, 11),
                        (59, 14, 14)):
        report = sophie_upper_bound(q, store)
        assert report.genus == g
        assert report.upper_bound == upper
        assert report.rho_infty == "0"
        assert report.hypotheses == ("2-inert-in-real-cyclotomic",)
        assert report.curve == f"cyclo-q{q}"


def test_sophie_rejects_non_sophie_germain():
    for q in (5, 13, 15, 29):
        with pytest.raises(ValueError, match="Sophie Germain"):
            sophie_upper_bound(q, builtin_class_groups())


def test_sophie_davis_taussky_route_needs_no_oracle():
    report = sophie_upper_bound(11, clg(""), assume_davis_taussky=True)
    assert report.upper_bound == 2  # g alone
    assert report.cl2_used == 0
    assert report.hypotheses == ("davis-taussky-assumed",)


def test_sophie_scan_route():
    # p = 41: 2 is not inert in the real cyclotomic field, so the matrix
    # certificate is the only unconditional route
    key = ",".join(str(c) for c in min_poly_2cos(83, 41 % 4 == 3).int_coeffs())
    store = clg(f"poly={key} cl2=1 source=synthetic-test")
    report = sophie_upper_bound(83, store, scan_bound=100)
    assert report.rho_infty == "0"
    assert report.upper_bound == 20 + 1  # g + cl2
    assert report.hypotheses == ("q-below-scan-bound",)


def test_sophie_fallback_with_narrow_data():
    key = ",".join(str(c) for c in min_poly_2cos(83, 41 % 4 == 3).int_coeffs())
    store = clg(f"poly={key} cl2=1 narrow_cl2=2 source=synthetic-test")
    report = sophie_upper_bound(83, store, scan_bound=0)
    assert report.rho_infty == "unk"
    assert report.upper_bound == 40 + 2  # (p-1) + narrow_cl2
    assert report.hypotheses == ()


def test_sophie_fallback_even_order_substitutes_plain_cl2():
    # ord(2 mod 41) = 20 is even, so the plain 2-rank stands in for narrow
    key = ",".join(str(c) for c in min_poly_2cos(83, 41 % 4 == 3).int_coeffs())
    store = clg(f"poly={key} cl2=1 source=synthetic-test")
    report = sophie_upper_bound(83, store, scan_bound=0)
    assert report.upper_bound == 40 + 1
    assert report.hypotheses == ("order-of-2-even",)


def test_sophie_fallback_no_narrow_odd_order():
    # ord(2 mod 89) = 11 is odd: only narrow <= rho_inf + cl2 is available
    key = ",".join(str(c) for c in min_poly_2cos(179, 89 % 4 == 3).int_coeffs())
    store = clg(f"poly={key} cl2=0 source=synthetic-test")
    report = sophie_upper_bound(179, store, scan_bound=0)
    assert report.upper_bound == 2 * 88 + 0
    assert report.hypotheses == ("narrow-data-missing",)


def test_sophie_missing_record():
    with pytest.raises(LookupError):
        sophie_upper_bound(11, clg(""))


# -- lower bounds from points ----------------------------------------------


def test_lower_bound_q7():
    f = min_poly_2cos(7, True)  # x^3 - x^2 - 2x + 1
    lower, classes = lower_bound_from_points(f, Fraction(1))
    assert lower == 1
    assert len(classes.representatives) == 3
    field = classes.field
    prod = field.one()
    for cls in classes.representatives:
        prod = prod * cls
    ok, _ = field.is_square(prod)
    assert ok


def test_lower_bound_q11_example():
    f = min_poly_2cos(11, False)
    lower, classes = lower_bound_from_points(f, Fraction(1))
    assert lower == 2
    coords = [tuple(c.coords) for c in classes.representatives]
    assert coords == [
        (0, -1, 0, 0, 0),   # -theta
        (-3, 0, 1, 0, 0),   # theta^2 - 3
        (-1, 1, 1, 0, 0),   # theta^2 + theta - 1
    ]


def test_lower_bound_rejects_non_squarefree_split():
    with pytest.raises(ValueError, match="square-free"):
        lower_bound_from_points(RationalPoly([2, -2, 1]), Fraction(1))


def test_lower_bound_rejects_zero_y0():
    with pytest.raises(ValueError, match="y0"):
        lower_bound_from_points(min_poly_2cos(7, True), Fraction(0))


def test_lower_bound_fractional_y0():
    f = min_poly_2cos(7, True)
    lower, classes = lower_bound_from_points(f, Fraction(3, 2))
    assert 0 <= lower <= 3
    field = classes.field
    prod = field.one()
    for cls in classes.representatives:
        prod = prod * cls
    ok, _ = field.is_square(prod)
    assert ok


def test_lower_at_most_upper_on_shipped_family():
    store = builtin_class_groups()
    for q in (7, 11, 23):
        p = (q - 1) // 2
        f = min_poly_2cos(q, p % 4 == 3)
        lower, _ = lower_bound_from_points(f, Fraction(1))
        assert lower <= sophie_upper_bound(q, store).upper_bound


# -- report serialization ---------------------------------------------------


def test_bound_report_line_format():
    report = BoundReport(curve="cyclo-q11", genus=2, rho_infty="0",
                         j_infty_bound=2, cl2_used=0, cl2_source="literature",
                         g_kernel_dim=0, upper_bound=2, lower_bound=2,
                         hypotheses=())
    assert report.line() == "curve=cyclo-q11 g=2 rho_inf=0 cl2=0 upper=2 lower=2 hyps=none"
    no_lower = BoundReport(curve="cubic-m143", genus=1, rho_infty="0",
                           j_infty_bound=1, cl2_used=4, cl2_source="literature",
                           g_kernel_dim=0, upper_bound=5, lower_bound=None,
                           hypotheses=("davis-taussky-assumed", "x"))
    assert no_lower.line() == ("curve=cubic-m143 g=1 rho_inf=0 cl2=4 upper=5 "
                               "hyps=davis-taussky-assumed,x")


def test_bound_report_describe_mentions_provenance():
    report = BoundReport(curve="cubic-m1", genus=1, rho_infty="0",
                         j_infty_bound=1, cl2_used=0, cl2_source="literature",
                         g_kernel_dim=0, upper_bound=1, lower_bound=None,
                         hypotheses=())
    text = report.describe()
    assert "literature" in text
    assert "upper" in text

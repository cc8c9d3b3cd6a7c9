import random
from fractions import Fraction

import pytest

from covergeo.fields import QQ, extension_field, prime_field
from covergeo.parsing import parse_polynomial
from covergeo.polynomials import (
    BPoly,
    UPoly,
    b_exact_div,
    b_gcd,
    b_normalize,
    b_squarefree,
    extension_embedding,
    u_factor,
    u_rational_roots,
    u_roots,
    u_squarefree,
)


def upoly(field, *ints):
    return UPoly.from_ints(field, ints)


def test_factor_distinct_roots():
    f5 = prime_field(5)
    unit, facs = u_factor(upoly(f5, -1, 0, 1))  # x^2 - 1
    assert unit == 1
    assert [(g.coeffs, e) for g, e in facs] == [((1, 1), 1), ((4, 1), 1)]


def test_factor_frobenius_fixed_points():
    f5 = prime_field(5)
    unit, facs = u_factor(upoly(f5, 0, -1, 0, 0, 0, 1))  # x^5 - x
    assert len(facs) == 5
    assert all(g.degree == 1 and e == 1 for g, e in facs)


def test_factor_irreducible_quadratic():
    f7 = prime_field(7)
    unit, facs = u_factor(upoly(f7, 1, 0, 1))  # x^2 + 1
    assert facs == [(upoly(f7, 1, 0, 1), 1)]
    # oracle: exhaustive root check over F_7
    assert all(pow(a, 2, 7) != 6 for a in range(7))


def test_factor_zero_rejected():
    with pytest.raises(ValueError):
        u_factor(UPoly.zero(prime_field(5)))


@pytest.mark.parametrize(
    "p,k",
    [(3, 1), (5, 1), (7, 1), (11, 1), (3, 2), (5, 2), (7, 2), (11, 2)],
)
def test_factor_roundtrip_random(p, k):
    fld = extension_field(p, k)
    rng = random.Random(1000 * p + k)
    for _ in range(25):
        deg = rng.randint(1, 12)
        coeffs = [fld.decode(rng.randrange(fld.order)) for _ in range(deg)]
        coeffs.append(fld.decode(rng.randrange(1, fld.order)))
        f = UPoly(fld, coeffs)
        unit, facs = u_factor(f)
        prod = UPoly.constant(fld, unit)
        for g, e in facs:
            assert g.leading() == fld.one
            for _ in range(e):
                prod = prod * g
        assert prod == f


def test_factor_deterministic_order():
    fld = prime_field(11)
    rng = random.Random(7)
    for _ in range(10):
        coeffs = [fld.decode(rng.randrange(11)) for _ in range(9)] + [1]
        f = UPoly(fld, coeffs)
        assert u_factor(f) == u_factor(f)
        _, facs = u_factor(f)
        keys = [g.sort_key() for g, _ in facs]
        assert keys == sorted(keys)


def test_squarefree_char_p_power():
    f5 = prime_field(5)
    x = UPoly.var(f5)
    g = x + UPoly.constant(f5, f5.from_int(-1))
    h = x + UPoly.constant(f5, f5.from_int(-2))
    f = g * g * g * g * g * h * h
    parts = u_squarefree(f)
    assert [(tuple(q.coeffs), e) for q, e in parts] == [((3, 1), 2), ((4, 1), 5)]


def test_roots_sorted_and_complete():
    f13 = prime_field(13)
    f = upoly(f13, -1, 0, 0, 1)  # x^3 - 1, three cube roots of unity mod 13
    roots = u_roots(f)
    assert roots == sorted(roots)
    assert all(pow(r, 3, 13) == 1 for r in roots)
    assert len(roots) == 3


def test_rational_roots():
    f = parse_polynomial("(x-2)^2*(3*x+1)*(x^2+1)", QQ).restrict_t0()
    roots, cofactor = u_rational_roots(f)
    assert roots == [(Fraction(-1, 3), 1), (Fraction(2), 2)]
    assert cofactor.degree == 2


def test_bivariate_squarefree_examples():
    # monomial case: standard decomposition x^2 t^3 = x^2 * t^3
    f = parse_polynomial("x^2*t^3", QQ)
    parts = b_squarefree(f)
    assert [(g.fmt(), e) for g, e in parts] == [("x", 2), ("t", 3)]

    # already squarefree in characteristic 5
    f = parse_polynomial("x^3 - t^2", prime_field(5))
    assert [(g.fmt(), e) for g, e in b_squarefree(f)] == [("x^3 + 4*t^2", 1)]

    # (x-t)^2 (x+t) in characteristic 7
    f = parse_polynomial("(x-t)^2*(x+t)", prime_field(7))
    parts = b_squarefree(f)
    assert [(g.fmt(), e) for g, e in parts] == [("x + t", 1), ("x + 6*t", 2)]


def test_bivariate_squarefree_frobenius_power():
    # x^5 - t^5 = (x - t)^5 over F_5
    f = parse_polynomial("x^5 - t^5", prime_field(5))
    assert [(g.fmt(), e) for g, e in b_squarefree(f)] == [("x + 4*t", 5)]


def test_bivariate_squarefree_reassembly_and_coprimality():
    rng = random.Random(42)
    f7 = prime_field(7)
    x, t = BPoly.var_x(f7), BPoly.var_t(f7)
    lines = [x, t, x - t, x + t, x - t * t, x * x - t * t * t]
    for _ in range(20):
        f = BPoly.constant(f7, f7.from_int(rng.randrange(1, 7)))
        for g in rng.sample(lines, rng.randint(1, 4)):
            for _ in range(rng.randint(1, 3)):
                f = f * g
        parts = b_squarefree(f)
        prod = BPoly.constant(f7, f7.one)
        for g, e in parts:
            for _ in range(e):
                prod = prod * g
        assert b_normalize(prod) == b_normalize(f)
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                assert b_gcd(parts[i][0], parts[j][0]).is_constant()


def test_bivariate_exact_division():
    f5 = prime_field(5)
    f = parse_polynomial("(x^2-t^3)*(x+4*t)", f5)
    g = parse_polynomial("x+4*t", f5)
    assert b_exact_div(f, g) == parse_polynomial("x^2-t^3", f5)
    with pytest.raises(ValueError):
        b_exact_div(parse_polynomial("x^2-t^3", f5), g)


def test_bivariate_zero_rejected():
    with pytest.raises(ValueError):
        b_squarefree(BPoly.zero(QQ))


def test_extension_embedding_is_homomorphism():
    small = extension_field(5, 2)
    big = extension_field(5, 4)
    embed = extension_embedding(small, big)
    rng = random.Random(3)
    for _ in range(30):
        a = small.decode(rng.randrange(25))
        b = small.decode(rng.randrange(25))
        assert embed(small.add(a, b)) == big.add(embed(a), embed(b))
        assert embed(small.mul(a, b)) == big.mul(embed(a), embed(b))
    assert embed(small.one) == big.one


def test_translate_matches_eval():
    f5 = prime_field(5)
    f = parse_polynomial("x^2*t + 3*t^4 + x", f5)
    shifted = f.translate_t(f5.from_int(2))
    # f(x, t+2) evaluated at t=0 equals f at t=2
    assert shifted.restrict_x0().coeffs[:1] == (f5.from_int(3 * 16 % 5),)
    assert shifted.translate_t(f5.from_int(-2)) == f

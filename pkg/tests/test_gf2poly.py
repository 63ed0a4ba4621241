import random

import pytest

from gf2perfect.gf2poly import (
    NEG_INFINITY,
    ONE,
    X,
    XP1,
    ZERO,
    Poly,
    _mul_schoolbook,
    _mul_windowed,
    format_poly,
    gcd,
    parse,
)


def rand_poly(rng, max_degree):
    return Poly(rng.getrandbits(max_degree + 1))


def mul_reference(p, q):
    # independent quadratic oracle: shift-and-xor over explicit exponents
    acc = 0
    for i in range(int(p.degree) + 1 if p else 0):
        if p.coeff(i):
            acc ^= q.mask << i
    return Poly(acc)


def test_add_examples():
    m1 = parse("x^2+x+1")
    assert m1 + m1 == ZERO  # self-inverse in characteristic 2
    assert parse("x^3+x+1") + parse("x^3+x^2+1") == parse("x^2+x")
    p = parse("x^5+x^2+1")
    assert p + ZERO == p


def test_degree_laws():
    assert ZERO.degree == NEG_INFINITY
    assert ONE.degree == 0
    assert ZERO != ONE
    assert (X * XP1).degree == 2
    rng = random.Random(7)
    for _ in range(200):
        p, q = rand_poly(rng, 60), rand_poly(rng, 60)
        assert (p + q).degree <= max(p.degree, q.degree)
        if p and q:
            assert (p * q).degree == p.degree + q.degree


def test_mul_examples():
    assert parse("x^3+x+1") * parse("x^3+x^2+1") == parse("x^6+x^5+x^4+x^3+x^2+x+1")
    assert X * XP1 == parse("x^2+x")
    cube = XP1 * XP1 * XP1  # repeated-multiplication oracle
    assert XP1**3 == cube == parse("x^3+x^2+x+1")


def test_mul_kernels_agree():
    rng = random.Random(2024)
    for _ in range(10_000):
        a = rng.getrandbits(rng.randrange(1, 160))
        b = rng.getrandbits(rng.randrange(1, 160))
        assert _mul_schoolbook(a, b) == _mul_windowed(a, b) == mul_reference(Poly(a), Poly(b)).mask
    for _ in range(50):  # sizes that actually take the windowed path
        a, b = rng.getrandbits(2000), rng.getrandbits(2500)
        assert Poly(a) * Poly(b) == mul_reference(Poly(a), Poly(b))


def test_ring_axioms():
    rng = random.Random(11)
    for _ in range(200):
        p, q, r = (rand_poly(rng, 512) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)


def test_div_rem_examples():
    q, r = divmod(parse("x^2+x"), X)
    assert (q, r) == (XP1, ZERO)
    p, d = parse("x^4+x^3+x^2+x+1"), parse("x^2+x+1")
    q, r = divmod(p, d)
    assert q * d + r == p and r.degree < d.degree
    assert divmod(p, ONE) == (p, ZERO)


def test_div_rem_reconstruction():
    rng = random.Random(3)
    for _ in range(500):
        p = rand_poly(rng, 200)
        d = rand_poly(rng, 90)
        if not d:
            continue
        q, r = divmod(p, d)
        assert q * d + r == p
        assert not r or r.degree < d.degree


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(X, ZERO)
    with pytest.raises(ZeroDivisionError):
        X % ZERO


def test_gcd():
    assert gcd(parse("x^2+x"), X) == X
    m2 = parse("x^3+x+1")
    assert gcd(m2, m2.bar()) == ONE
    p = parse("x^7+x^2+1")
    assert gcd(p, ZERO) == p
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)
    rng = random.Random(5)
    for _ in range(200):
        a, b = rand_poly(rng, 64), rand_poly(rng, 64)
        if not a and not b:
            continue
        g = gcd(a, b)
        if a:
            assert g.divides(a)
        if b:
            assert g.divides(b)


def test_pow():
    assert XP1**2 == parse("x^2+1")
    assert parse("x^2+x+1") ** 2 == parse("x^4+x^2+1")
    p = parse("x^5+x+1")
    assert p**1 == p
    assert p**0 == ONE


def test_frobenius_spread():
    rng = random.Random(13)
    for _ in range(300):
        p = rand_poly(rng, 256)
        assert p**2 == p * p
        if p:
            assert (p**2).mask == sum(1 << (2 * i) for i in range(int(p.degree) + 1) if p.coeff(i))


def test_bar():
    assert parse("x^3+x+1").bar() == parse("x^3+x^2+1")
    assert parse("x^2+x+1").bar() == parse("x^2+x+1")
    # substitute-and-expand oracle for bar(x^4+x^3+x^2+x+1)
    expected = XP1**4 + XP1**3 + XP1**2 + XP1 + ONE
    assert parse("x^4+x^3+x^2+x+1").bar() == expected == parse("x^4+x^3+1")
    rng = random.Random(17)
    for _ in range(300):
        p, q = rand_poly(rng, 120), rand_poly(rng, 120)
        assert (p * q).bar() == p.bar() * q.bar()
        assert p.bar().bar() == p
        assert (p + q).bar() == p.bar() + q.bar()


def test_valuation():
    assert parse("x^2+x").valuation(X) == 1
    t1 = parse("x^2") * XP1 * parse("x^2+x+1")
    assert t1.valuation(X) == 2
    assert parse("x^4+x^3+x^2+x+1").valuation(XP1) == 0
    with pytest.raises(ValueError):
        ZERO.valuation(X)
    with pytest.raises(ValueError):
        X.valuation(parse("x^2+x+1"))
    rng = random.Random(19)
    for _ in range(100):
        p = rand_poly(rng, 40)
        if not p:
            continue
        for at in (X, XP1):
            e = p.valuation(at)
            # cross-check against repeated division
            q, count = p, 0
            while True:
                qq, r = divmod(q, at)
                if r:
                    break
                q, count = qq, count + 1
            assert e == count


def test_alpha():
    rng = random.Random(23)
    for _ in range(100):
        p = rand_poly(rng, 50)
        if not p:
            continue
        assert p.alpha(0) == 1
        # oracle: read exponents off the formatted string
        text = format_poly(p)
        exps = set()
        for term in text.split("+"):
            if term == "1":
                exps.add(0)
            elif term == "x":
                exps.add(1)
            else:
                exps.add(int(term[2:]))
        d = int(p.degree)
        for l in range(d + 1):
            assert p.alpha(l) == (1 if d - l in exps else 0)
    assert parse("x^3+x+1").alpha(1) == 0
    with pytest.raises(ValueError):
        parse("x^3").alpha(4)


def test_is_square_sqrt():
    assert parse("x^2+1").is_square()
    assert parse("x^2+1").sqrt() == XP1
    assert not parse("x^3+x+1").is_square()
    with pytest.raises(ValueError):
        parse("x^3+x+1").sqrt()
    rng = random.Random(29)
    for _ in range(200):
        p = rand_poly(rng, 100)
        if not p:
            continue
        sq = p * p
        assert sq.is_square()
        assert sq.sqrt() == p


def test_parse_format_round_trip():
    assert parse("x^2+x+1") == Poly(0b111)
    assert parse("0xB") == parse("x^3+x+1")
    assert parse("0x13") == parse("x^4+x+1")
    assert parse("x^2(x+1)^3") == parse("x^2") * XP1**3
    assert parse("x^2 * (x+1) * (x^2+x+1)") == parse("x^5+x^2")
    assert format_poly(ZERO) == "0"
    assert format_poly(ONE) == "1"
    rng = random.Random(31)
    for _ in range(300):
        p = rand_poly(rng, 80)
        assert parse(format_poly(p)) == p


def test_parse_errors():
    for bad in ("", "  ", "x^", "2x", "x+", "y", "(x+1", "x^2++1", "x^-1"):
        with pytest.raises(ValueError):
            parse(bad)


def test_poly_immutable_and_hashable():
    p = parse("x^3+x")
    with pytest.raises(AttributeError):
        p._mask = 5
    assert len({p, parse("x^3+x"), X}) == 2

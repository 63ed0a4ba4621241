"""Irreducibility testing, factorization and counting over GF(2).

Factorization runs squarefree splitting (derivative/gcd plus square-root
extraction, which in characteristic 2 replaces Yun's algorithm), then
distinct-degree splitting, then equal-degree splitting with the
characteristic-2 trace map.  The equal-degree stage draws random split
candidates from a generator seeded by (seed, input), so results are
reproducible and independent of call order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import _intmath
from .gf2poly import ONE, X, BudgetError, Poly, gcd

#: Default seed for the equal-degree splitting stage.
DEFAULT_SEED = 2

#: is_primitive refuses degrees whose group order 2^r - 1 exceeds this.
PRIMITIVITY_DEGREE_CAP = 64


@dataclass(frozen=True)
class Factorization:
    """Complete factorization: distinct irreducibles with multiplicities.

    Factors are sorted by (degree, coefficient mask), which for the mask
    representation is plain mask order.
    """

    original: Poly
    factors: tuple[tuple[Poly, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def primes(self) -> tuple[Poly, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent_of(self, prime: Poly) -> int:
        for p, m in self.factors:
            if p == prime:
                return m
        return 0

    @property
    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)

    def reconstruct(self) -> Poly:
        out = ONE
        for p, m in self.factors:
            out = out * p**m
        return out

    def to_json_obj(self):
        return [{"prime": str(p), "mult": m} for p, m in self.factors]

    def __str__(self):
        parts = []
        for p, m in self.factors:
            text = str(p)
            if "+" in text:
                text = f"({text})"
            parts.append(text if m == 1 else f"{text}^{m}")
        return " * ".join(parts) if parts else "1"


def _frobenius_powers(p: Poly, exponents):
    # x^(2^d) mod p for each requested d, computed by iterated squaring
    want = sorted(set(exponents))
    out = {}
    r = X % p
    d = 0
    for target in want:
        while d < target:
            r = r.square() % p
            d += 1
        out[target] = r
    return out


def is_irreducible(p: Poly) -> bool:
    """Deterministic irreducibility test (iterated-Frobenius criterion).

    p is irreducible iff x^(2^n) = x (mod p) for n = deg p while
    gcd(x^(2^(n/q)) - x, p) = 1 for every prime q dividing n.
    """
    n = p.degree
    if not p or n < 1:
        raise ValueError("irreducibility is defined for nonconstant polynomials")
    if n == 1:
        return True
    if p.coeff(0) == 0:  # divisible by x
        return False
    targets = [n] + [n // q for q in _intmath.prime_factors(n)]
    frob = _frobenius_powers(p, targets)
    if frob[n] != X % p:
        return False
    for q in _intmath.prime_factors(n):
        if gcd(frob[n // q] + X, p) != ONE:
            return False
    return True


def _trace_mod(r: Poly, d: int, f: Poly) -> Poly:
    # r + r^2 + r^4 + ... + r^(2^(d-1)) mod f
    acc = r
    cur = r
    for _ in range(d - 1):
        cur = cur.square() % f
        acc = acc + cur
    return acc


def _equal_degree_split(f: Poly, d: int, rng, sink):
    if f.degree == d:
        sink(f)
        return
    bits = int(f.degree)
    while True:
        r = Poly(rng.getrandbits(bits))
        if not r:
            continue
        u = gcd(_trace_mod(r % f, d, f), f)
        if 0 < u.degree < f.degree:
            break
    _equal_degree_split(u, d, rng, sink)
    _equal_degree_split(f // u, d, rng, sink)


def _distinct_degree_split(f: Poly, rng, sink):
    # f squarefree, odd part handled like anything else
    r = X % f
    d = 0
    while f.degree > 0 and 2 * (d + 1) <= f.degree:
        d += 1
        r = r.square() % f
        g = gcd(r + X, f)
        if g.degree > 0:
            _equal_degree_split(g, d, rng, sink)
            f = f // g
            r = r % f
    if f.degree > 0:
        sink(f)


def _rng_for(seed: int, p: Poly):
    # independent of call order and safe to use from worker processes
    return random.Random((seed * 0x9E3779B97F4A7C15 + p.mask % ((1 << 61) - 1)) & (1 << 64) - 1)


@lru_cache(maxsize=8192)
def _factorize_cached(mask: int, seed: int) -> Factorization:
    p = Poly(mask)
    counts: dict[Poly, int] = {}

    def sink_with(scale):
        def sink(prime):
            counts[prime] = counts.get(prime, 0) + scale

        return sink

    rng = _rng_for(seed, p)
    f = p
    scale = 1
    while f.degree > 0:
        df = f.derivative()
        if not df:
            f = f.sqrt()
            scale *= 2
            continue
        # w collects each prime whose multiplicity in f is odd, once;
        # the cofactor f // w is then a perfect square
        w = f // gcd(f, df)
        _distinct_degree_split(w, rng, sink_with(scale))
        f = (f // w).sqrt()
        scale *= 2
    ordered = tuple(sorted(counts.items()))
    return Factorization(original=p, factors=ordered)


def factorize(p: Poly, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete factorization of a nonzero polynomial."""
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    return _factorize_cached(p.mask, seed)


def omega(p: Poly, seed: int = DEFAULT_SEED) -> int:
    """Number of distinct irreducible factors."""
    return len(factorize(p, seed).factors)


def is_squarefree(p: Poly) -> bool:
    """True iff no irreducible factor repeats.

    Uses the derivative criterion: a nonzero p is squarefree exactly when
    gcd(p, p') = 1 (a repeated or even-multiplicity factor survives into
    the gcd; a square has p' = 0).
    """
    if not p:
        raise ValueError("squarefreeness is undefined for the zero polynomial")
    if p == ONE:
        return True
    return gcd(p, p.derivative()) == ONE


def count_irreducibles(m: int) -> int:
    """Number of irreducible polynomials of degree m over GF(2).

    Standard necklace count: N(m) = (1/m) * sum_{d | m} mu(m/d) 2^d.
    """
    if m < 1:
        raise ValueError("degree must be positive")
    total = 0
    for d in range(1, m + 1):
        if m % d:
            continue
        k = m // d
        kf = _intmath.factorize_int(k)
        if any(e > 1 for e in kf.values()):
            continue
        mu = -1 if len(kf) % 2 else 1
        total += mu * (1 << d)
    return total // m


def euler_phi(m: int) -> int:
    """Euler totient of m."""
    return _intmath.euler_phi(m)


def order_of_x(p: Poly) -> int:
    """Multiplicative order of x modulo an irreducible p."""
    if not is_irreducible(p):
        raise ValueError("order of x is computed modulo an irreducible polynomial")
    r = int(p.degree)
    if r > PRIMITIVITY_DEGREE_CAP:
        raise BudgetError(f"group order 2^{r}-1 exceeds the supported factoring range")
    order = (1 << r) - 1
    if p == X:  # x = 0 mod p has no order; degree-1 special cases
        raise ValueError("x has no multiplicative order modulo x")
    for q in _intmath.prime_factors(order):
        while order % q == 0 and pow_mod(X, order // q, p) == ONE:
            order //= q
    return order


def is_primitive(p: Poly) -> bool:
    """True iff x generates the full multiplicative group modulo p."""
    r = int(p.degree)
    return order_of_x(p) == (1 << r) - 1


def pow_mod(base: Poly, n: int, modulus: Poly) -> Poly:
    """base^n mod modulus for n >= 0."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = ONE % modulus
    cur = base % modulus
    while n:
        if n & 1:
            result = (result * cur) % modulus
        n >>= 1
        if n:
            cur = cur.square() % modulus
    return result

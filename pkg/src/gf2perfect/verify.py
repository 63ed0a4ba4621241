"""Checkers that mechanically confirm the package's numbered claims.

Each checker recomputes one verifiable statement about divisor sums of
Mersenne-prime powers and returns a TheoremReport.  Claim identifiers
("thm1.2-i", "lemma3.2", ...) are the stable vocabulary used by the CLI
and the report stream; every checker is deterministic given the
factorization seed, and run_all emits reports in a fixed order so two
runs with the same budgets are byte-identical.

Verdicts: "pass" and "fail" apply inside a claim's hypotheses; instances
outside them report "out_of_scope" and still attach the computed data,
since the hypothesis boundary is where transcription slips would hide.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import _intmath
from .divisors import sigma
from .factor import DEFAULT_SEED, count_irreducibles, euler_phi, factorize, is_irreducible, is_primitive
from .gf2poly import ONE, X, XP1, Poly
from .mersenne import MersennePrime, catalog, enumerate_mersenne_primes, in_delta, mersenne_form

#: Default cap on deg(M^2h) for swept instances.
DEFAULT_DEGREE_BUDGET = 2048

#: Mersenne prime numbers 2^m - 1 accepted by check_degree_m_divisors.
DESK_MERSENNE_NUMBERS = (3, 7, 31)


@dataclass(frozen=True)
class TheoremReport:
    """Machine-readable outcome of one claim checker."""

    claim_id: str
    params: dict
    verdict: str  # "pass" | "fail" | "out_of_scope"
    witness: dict | None = None

    def to_json(self) -> str:
        obj = {"claim": self.claim_id, "params": self.params, "verdict": self.verdict}
        if self.witness is not None:
            obj["witness"] = self.witness
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    def sort_key(self):
        return (self.claim_id, json.dumps(self.params, sort_keys=True))


def _report(claim, params, verdict, witness=None):
    return TheoremReport(claim, params, verdict, witness)


def _m_params(m: MersennePrime, **extra):
    return {"M": str(m.poly), "a": m.a, "b": m.b, **extra}


@lru_cache(maxsize=512)
def _sigma_power_factored(mask: int, n: int, seed: int):
    s = sigma(Poly(mask) ** n, seed)
    return s, factorize(s, seed)


def _classify_factors(fact):
    mers, other = [], []
    for p, _ in fact:
        if p == X or p == XP1 or mersenne_form(p) is not None:
            mers.append(p)
        else:
            other.append(p)
    return mers, other


def _delta_primes(n: int):
    return [q for q in _intmath.prime_factors(n) if q != 2 and in_delta(q)]


def check_squarefree(m: MersennePrime, h: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """sigma(M^2h) has no repeated irreducible factor."""
    _, fact = _sigma_power_factored(m.poly.mask, 2 * h, seed)
    params = _m_params(m, h=h)
    verdict = "pass" if fact.is_squarefree else "fail"
    return _report("lemma3.2", params, verdict, {"multiplicities": [mu for _, mu in fact]})


def check_sigma_even_power(m: MersennePrime, h: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """sigma(M^2h) is divisible by a non-Mersenne prime, inside hypotheses.

    Case (i): M one of the five small Mersenne primes, excluding h = 1
    for the two cubic ones.  Case (ii): M outside that set and 2h + 1
    divisible by a prime (other than 7) that is a Mersenne number or has
    order of 2 divisible by 8.  Other instances are out of scope and
    report their factor classification.
    """
    if h < 1:
        raise ValueError("h must be positive")
    cat = catalog()
    _, fact = _sigma_power_factored(m.poly.mask, 2 * h, seed)
    mers, other = _classify_factors(fact)
    params = _m_params(m, h=h)
    witness = {
        "squarefree": fact.is_squarefree,
        "mersenne_factors": [str(p) for p in mers],
        "non_mersenne_factors": [str(p) for p in other],
    }
    if not fact.is_squarefree:
        return _report("thm1.2", params, "fail", witness)
    if m.poly in cat.mersennes:
        claim = "thm1.2-i"
        cubic = (m.a, m.b) in ((1, 2), (2, 1))
        applicable = not cubic or h >= 2
    else:
        claim = "thm1.2-ii"
        hits = _delta_primes(2 * h + 1)
        witness["delta_primes"] = hits
        applicable = bool(hits)
    if not applicable:
        return _report(claim, params, "out_of_scope", witness)
    return _report(claim, params, "pass" if other else "fail", witness)


def check_U_split_square(m: MersennePrime, h: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """When sigma(M^2h) has only Mersenne prime factors, the double
    divisor sum U = sigma(sigma(M^2h)) must split as x^u (x+1)^v with u
    and v even, and sigma(M^2h) must be reducible.  When some factor is
    not Mersenne the premise fails; the report then records which of the
    conclusions concretely fail for this instance.
    """
    s, fact = _sigma_power_factored(m.poly.mask, 2 * h, seed)
    _, other = _classify_factors(fact)
    u2h = sigma(s, seed)
    u = u2h.valuation(X)
    v = u2h.valuation(XP1)
    splits = (XP1**v << u) == u2h
    witness = {
        "u": u,
        "v": v,
        "splits": splits,
        "square": u2h.is_square(),
        "reducible": len(fact) > 1,
        "non_mersenne_factors": [str(p) for p in other],
    }
    params = _m_params(m, h=h)
    if other:
        return _report("cor3.6", params, "out_of_scope", witness)
    ok = splits and u % 2 == 0 and v % 2 == 0 and u2h.is_square() and len(fact) > 1
    return _report("cor3.6", params, "pass" if ok else "fail", witness)


def check_p_reduction(m: MersennePrime, h: int, k: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """For any divisor k of 2h+1, sigma(M^(k-1)) divides sigma(M^2h)."""
    if (2 * h + 1) % k:
        raise ValueError("k must divide 2h+1")
    s, _ = _sigma_power_factored(m.poly.mask, 2 * h, seed)
    small = sigma(m.poly ** (k - 1), seed) if k > 1 else ONE
    params = _m_params(m, h=h, k=k)
    return _report("lemma3.4", params, "pass" if small.divides(s) else "fail")


def check_alpha_ranges(m: MersennePrime, h: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """Top coefficients of sigma(M^2h) agree with M^2h over the first
    deg(M) positions and with M^2h + M^(2h-1) over the next deg(M)."""
    s, _ = _sigma_power_factored(m.poly.mask, 2 * h, seed)
    d = m.degree
    high = m.poly ** (2 * h)
    mixed = high + m.poly ** (2 * h - 1)
    bad = [l for l in range(d) if s.alpha(l) != high.alpha(l)]
    bad += [l for l in range(d, 2 * d) if s.alpha(l) != mixed.alpha(l)]
    params = _m_params(m, h=h)
    return _report("lemma3.15", params, "fail" if bad else "pass", {"mismatched_l": bad})


def check_alpha3_u2h(m: MersennePrime, h: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """alpha_3 of the double divisor sum equals 1 for M = x^3+x+1 when
    2h+1 is a prime other than 3, 5, 7; other instances are reported out
    of scope with the computed coefficient attached."""
    s, _ = _sigma_power_factored(m.poly.mask, 2 * h, seed)
    u2h = sigma(s, seed)
    low = m.poly ** (2 * h - 1)
    witness = {
        "alpha3_U": u2h.alpha(3),
        "alpha3_M_low": low.alpha(3),
        "alpha1_M_low": low.alpha(1),
    }
    params = _m_params(m, h=h)
    p = 2 * h + 1
    applicable = (m.a, m.b) == (1, 2) and _intmath.is_prime(p) and p not in (3, 5, 7)
    if not applicable:
        return _report("cor3.17", params, "out_of_scope", witness)
    ok = u2h.alpha(3) == 1 and low.alpha(3) == 1 and low.alpha(1) == 0
    return _report("cor3.17", params, "pass" if ok else "fail", witness)


def check_alpha3_u2(m: MersennePrime, seed: int = DEFAULT_SEED) -> TheoremReport:
    """alpha_3(sigma(sigma(M^2))) equals 1 for Mersenne primes outside
    the degree-4 catalog whose sigma(M^2) has at least three distinct
    prime factors."""
    cat = catalog()
    s, fact = _sigma_power_factored(m.poly.mask, 2, seed)
    u2 = sigma(s, seed)
    witness = {
        "omega": len(fact),
        "alpha3_U2": u2.alpha(3),
        "alpha3_sigma_M2": s.alpha(3),
        "trinomial_divides": cat.lookup("M1").divides(s),
    }
    params = _m_params(m)
    if m.poly in cat.mersennes or len(fact) < 3:
        return _report("cor3.28", params, "out_of_scope", witness)
    ok = u2.alpha(3) == 1 and s.alpha(3) == 0 and witness["trinomial_divides"]
    return _report("cor3.28", params, "pass" if ok else "fail", witness)


def check_alpha_lemmas(m: MersennePrime, h: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """Bundle of the coefficient checks for one (M, h) instance: the two
    agreement ranges plus, where applicable, the two alpha_3 facts."""
    parts = [check_alpha_ranges(m, h, seed), check_alpha3_u2h(m, h, seed)]
    if h == 1:
        parts.append(check_alpha3_u2(m, seed))
    verdict = "fail" if any(p.verdict == "fail" for p in parts) else "pass"
    witness = {p.claim_id: {"verdict": p.verdict, **(p.witness or {})} for p in parts}
    return _report("alpha-lemmas", _m_params(m, h=h), verdict, witness)


def _irreducibles_of_degree(r: int):
    return [Poly(mask) for mask in range(1 << r, 1 << (r + 1)) if is_irreducible(Poly(mask))]


def check_degree_m_divisors(m: MersennePrime, p: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """Divisibility pattern of sigma(M^(p-1)) for a Mersenne number p = 2^r - 1:
    every irreducible of degree r other than M divides it, no irreducible
    whose degree r' has 2^r' - 1 prime != p divides it, and the three small
    Mersenne primes divide it exactly per the (M, p) rule."""
    if p not in DESK_MERSENNE_NUMBERS:
        raise ValueError(f"supported Mersenne prime numbers: {DESK_MERSENNE_NUMBERS}")
    r = (p + 1).bit_length() - 1
    cat = catalog()
    s, fact = _sigma_power_factored(m.poly.mask, p - 1, seed)
    missing = [str(q) for q in _irreducibles_of_degree(r) if q != m.poly and not q.divides(s)]
    forbidden = [
        str(q)
        for q, _ in fact
        if _intmath.is_prime((1 << int(q.degree)) - 1) and (1 << int(q.degree)) - 1 != p
    ]
    iff_bad = []
    for name, cond_p in (("M1", 3), ("M2", 7), ("M2b", 7)):
        small = cat.lookup(name)
        expected = small != m.poly and p == cond_p
        if small.divides(s) != expected:
            iff_bad.append(name)
    params = _m_params(m, p=p)
    witness = {"missing_degree_r": missing, "forbidden_factors": forbidden, "iff_violations": iff_bad}
    ok = not missing and not forbidden and not iff_bad
    return _report("cor3.13", params, "pass" if ok else "fail", witness)


def check_order_divides_degrees(m: MersennePrime, h: int, seed: int = DEFAULT_SEED) -> TheoremReport:
    """For prime p = 2h+1, ord_p(2) divides the degree of every prime
    factor of sigma(M^2h)."""
    p = 2 * h + 1
    params = _m_params(m, h=h)
    if not _intmath.is_prime(p):
        return _report("lemma3.8", params, "out_of_scope", {"p": p})
    o = _intmath.multiplicative_order(2, p)
    _, fact = _sigma_power_factored(m.poly.mask, 2 * h, seed)
    bad = [str(q) for q, _ in fact if int(q.degree) % o]
    return _report("lemma3.8", params, "fail" if bad else "pass", {"ord": o, "violations": bad})


def _exceeds_isqrt_bound(n2: int, m: int) -> bool:
    # exact check of m*N(m) >= 2^m - 2*(2^(m/2) - 1) with real 2^(m/2)
    rhs = (1 << m) + 2 - n2 * m
    if rhs <= 0:
        return True
    return 4 * (1 << m) >= rhs * rhs


def check_counting(max_m: int = 24) -> TheoremReport:
    """Counting facts for irreducibles of degree m <= max_m: the necklace
    count satisfies the root-counting identity, exceeds the totient from
    degree 4 on, meets the standard lower bound, and bounds the number of
    Mersenne primes per degree by the totient."""
    bad = []
    mers_by_degree = {}
    for mp in enumerate_mersenne_primes(max_m):
        mers_by_degree[mp.degree] = mers_by_degree.get(mp.degree, 0) + 1
    for m in range(1, max_m + 1):
        n2 = count_irreducibles(m)
        if sum(d * count_irreducibles(d) for d in range(1, m + 1) if m % d == 0) != 1 << m:
            bad.append(f"root identity at {m}")
        if m >= 4 and not euler_phi(m) < n2:
            bad.append(f"totient bound at {m}")
        if m >= 4 and not _exceeds_isqrt_bound(n2, m):
            bad.append(f"lower bound at {m}")
        if mers_by_degree.get(m, 0) > euler_phi(m):
            bad.append(f"mersenne count at {m}")
    pinned = (count_irreducibles(4), count_irreducibles(5), euler_phi(4), euler_phi(5))
    if pinned != (3, 6, 2, 4):
        bad.append(f"pinned values {pinned}")
    witness = {"max_m": max_m, "violations": bad}
    return _report("lemma3.7", {"max_m": max_m}, "fail" if bad else "pass", witness)


def check_no_mersenne_degree_multiple_8(degrees=(8, 16, 24)) -> TheoremReport:
    """No Mersenne prime exists in any degree that is a multiple of 8."""
    found = []
    for d in degrees:
        if d % 8:
            raise ValueError("degrees must be multiples of 8")
        for a in range(1, d):
            p = ((XP1 ** (d - a)) << a) + ONE
            if is_irreducible(p):
                found.append(str(p))
    params = {"degrees": list(degrees)}
    return _report("lemma3.20", params, "fail" if found else "pass", {"found": found})


def check_primitivity(exhaustive=(2, 3, 5, 7), sampled_degree: int = 13, samples: int = 12) -> TheoremReport:
    """Every irreducible of degree r is primitive when 2^r - 1 is prime;
    exhaustive for the small degrees, sampled at degree 13."""
    bad = []
    for r in exhaustive:
        if not _intmath.is_prime((1 << r) - 1):
            raise ValueError(f"2^{r}-1 is not prime")
        for q in _irreducibles_of_degree(r):
            if not is_primitive(q):
                bad.append(str(q))
    rng = random.Random(sampled_degree)
    checked = 0
    while checked < samples:
        q = Poly((1 << sampled_degree) | rng.getrandbits(sampled_degree) | 1)
        if is_irreducible(q):
            checked += 1
            if not is_primitive(q):
                bad.append(str(q))
    params = {"exhaustive": list(exhaustive), "sampled_degree": sampled_degree}
    return _report("lemma3.9", params, "fail" if bad else "pass", {"violations": bad})


def explore_alpha_u6(m: MersennePrime, seed: int = DEFAULT_SEED) -> list[tuple[int, int]]:
    """Coefficients alpha_l of sigma(sigma(M^6)) for every l.

    Exploration only: the open question is whether some odd l always has
    alpha_l = 0 here.  Nothing is asserted.
    """
    u6 = sigma(sigma(m.poly**6, seed), seed)
    return [(l, u6.alpha(l)) for l in range(int(u6.degree) + 1)]


_CHECKERS = {
    "lemma3.2": check_squarefree,
    "thm1.2": check_sigma_even_power,
    "cor3.6": check_U_split_square,
    "lemma3.4": check_p_reduction,
    "lemma3.15": check_alpha_ranges,
    "cor3.17": check_alpha3_u2h,
    "cor3.28": check_alpha3_u2,
    "cor3.13": check_degree_m_divisors,
    "lemma3.8": check_order_divides_degrees,
    "lemma3.7": check_counting,
    "lemma3.20": check_no_mersenne_degree_multiple_8,
    "lemma3.9": check_primitivity,
}

#: claim ids accepted by the --claim filter (thm1.2 covers both cases)
CLAIM_IDS = tuple(sorted(_CHECKERS))


def _run_task(task):
    name, args, kwargs = task
    return _CHECKERS[name](*args, **kwargs)


def _instances(max_mersenne_degree: int, max_h: int, seed: int, degree_budget: int):
    tasks = [("lemma3.7", (), {}), ("lemma3.20", (), {}), ("lemma3.9", (), {})]
    kw = {"seed": seed}
    for m in enumerate_mersenne_primes(max_mersenne_degree):
        for p in DESK_MERSENNE_NUMBERS:
            if (p - 1) * m.degree <= degree_budget:
                tasks.append(("cor3.13", (m, p), kw))
        tasks.append(("cor3.28", (m,), kw))
        for h in range(1, max_h + 1):
            if 2 * h * m.degree > degree_budget:
                break
            tasks.append(("lemma3.2", (m, h), kw))
            tasks.append(("thm1.2", (m, h), kw))
            tasks.append(("cor3.6", (m, h), kw))
            tasks.append(("lemma3.15", (m, h), kw))
            if (m.a, m.b) == (1, 2):
                tasks.append(("cor3.17", (m, h), kw))
            if _intmath.is_prime(2 * h + 1):
                tasks.append(("lemma3.8", (m, h), kw))
            for k in sorted(_divisors_int(2 * h + 1)):
                tasks.append(("lemma3.4", (m, h, k), kw))
    return tasks


def _divisors_int(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def run_all(
    max_mersenne_degree: int,
    max_h: int,
    *,
    seed: int = DEFAULT_SEED,
    degree_budget: int = DEFAULT_DEGREE_BUDGET,
    jobs: int = 1,
    claim: str | None = None,
) -> list[TheoremReport]:
    """Sweep every checker over the in-budget grid; deterministic order."""
    if max_mersenne_degree < 2 or max_h < 1:
        return []
    if claim is not None and claim not in CLAIM_IDS and claim not in ("thm1.2-i", "thm1.2-ii"):
        raise ValueError(f"unknown claim {claim!r}; known: {', '.join(CLAIM_IDS)}")
    tasks = _instances(max_mersenne_degree, max_h, seed, degree_budget)
    if claim is not None:
        base = "thm1.2" if claim.startswith("thm1.2") else claim
        tasks = [t for t in tasks if t[0] == base]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks, chunksize=16))
    else:
        reports = [_run_task(t) for t in tasks]
    if claim is not None and claim.startswith("thm1.2-"):
        reports = [r for r in reports if r.claim_id == claim]
    reports.sort(key=TheoremReport.sort_key)
    return reports


def failures(reports) -> list[TheoremReport]:
    return [r for r in reports if r.verdict == "fail"]

"""Invariant sweeps behind ``subres verify``.

Every case is a ``(check, index, params)`` tuple whose randomness comes from
its own ``random.Random`` seeded by ``(seed, check, index)``, so results do
not depend on worker scheduling.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import GF, QQ
from .closed_form import (
    PoleError,
    binomial_identity_check,
    hd_cofactors,
    hd_polynomial,
    ostrowski_matrix,
    ostrowski_product,
    pfaff_saalschutz,
    psres_closed,
    qj_closed,
    subresultant_closed,
    sum_q_identity,
)
from .linalg import HankelSpec, bareiss_det, maximal_minors
from .oracle import check_sylvester_identity, principal_subresultant, subresultant_det
from .polynomial import Polynomial, bernstein_expand, power_of_linear

__all__ = ["CheckResult", "build_cases", "run_case", "run_sweep", "random_rational", "distinct_pair"]


def random_rational(rng: random.Random, bound: int = 20, den: int = 7) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def distinct_pair(rng: random.Random) -> tuple[Fraction, Fraction]:
    a = random_rational(rng)
    b = random_rational(rng)
    while b == a:
        b = random_rational(rng)
    return a, b


def _case_rng(seed: int, check: str, index: int) -> random.Random:
    return random.Random(f"{seed}/{check}/{index}")


def _triples(max_mn: int, d_min: int = 1):
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            for d in range(d_min, min(m, n)):
                yield m, n, d


def _bernstein(rng, m, n, d):
    a, b = distinct_pair(rng)
    closed = bernstein_expand(subresultant_closed(m, n, d, a, b))
    return closed == subresultant_det(power_of_linear(a, m), power_of_linear(b, n), d)


def _bernstein_charp(rng, m, n, d, p):
    F = GF(p)
    a, b = F(rng.randrange(p)), F(rng.randrange(p))
    closed = bernstein_expand(subresultant_closed(m, n, d, a, b, F))
    return closed == subresultant_det(power_of_linear(a, m, F), power_of_linear(b, n, F), d)


def _q_closed(rng, m, n, d):
    return qj_closed(m, n, d) == maximal_minors(HankelSpec(m, n, d))


def _psres(rng, m, n, d):
    a, b = distinct_pair(rng)
    value = psres_closed(m, n, d, a, b)
    oracle = principal_subresultant(power_of_linear(a, m), power_of_linear(b, n), d)
    lead = bernstein_expand(subresultant_closed(m, n, d, a, b)).coeff(d)
    return value == oracle == lead


def _sum_q(rng, m, n, d):
    return sum_q_identity(m, n, d).passed


def _kernel(rng, m, n, d):
    return all(binomial_identity_check(m, n, d, i).passed for i in range(1, m + 1))


def _cofactors(rng, m, n, d):
    a, b = random_rational(rng), random_rational(rng)
    pair = hd_cofactors(m, n, d, a, b)
    lhs = pair.F * power_of_linear(a, m) + pair.G * power_of_linear(b, n)
    return lhs == hd_polynomial(m, n, d, a, b) and pair.F.degree < n - d and pair.G.degree < m - d


def _translation(rng, m, n, d):
    shift = random_rational(rng)
    f = Polynomial([random_rational(rng, 5, 3) for _ in range(m)] + [rng.choice([-2, -1, 1, 2])])
    g = Polynomial([random_rational(rng, 5, 3) for _ in range(n)] + [rng.choice([-2, -1, 1, 2])])
    return subresultant_det(f, g, d).shift(shift) == subresultant_det(f.shift(shift), g.shift(shift), d)


def _sylvester(rng, size_cap):
    m, n = rng.randint(1, size_cap), rng.randint(1, size_cap)
    A =rng.sample(range(-20, 21), m)
    B = rng.sample(range(-20, 21), n)
    d = rng.randrange(min(m, n))
    p = rng.randint(0, d)
    return check_sylvester_identity(A, B, p, d - p).passed


def _ostrowski(rng, l, k):
    a = sorted(rng.sample(range(0, l + k + 1), k + 1))
    closed = ostrowski_product(l, a)
    return closed is not None and closed == bareiss_det(ostrowski_matrix(l, a))


def _pfaff(rng, k):
    while True:
        x, y, z = (random_rational(rng, 12, 5) for _ in range(3))
        try:
            lhs, rhs = pfaff_saalschutz(k, x, y, z)
        except PoleError:
            continue
        return lhs == rhs


CHECKS = {
    "bernstein": _bernstein,
    "bernstein-charp": _bernstein_charp,
    "q-closed": _q_closed,
    "psres": _psres,
    "sum-q": _sum_q,
    "binomial-kernel": _kernel,
    "cofactors": _cofactors,
    "translation": _translation,
    "sylvester": _sylvester,
    "ostrowski": _ostrowski,
    "pfaff-saalschutz": _pfaff,
}


def build_cases(max_mn: int) -> list[tuple[str, tuple]]:
    cases: list[tuple[str, tuple]] = []
    for m, n, d in _triples(max_mn):
        cases += [("bernstein", (m, n, d))] * 3
        cases.append(("psres", (m, n, d)))
        cases.append(("sum-q", (m, n, d)))
        cases.append(("binomial-kernel", (m, n, d)))
    for m, n, d in _triples(max_mn, d_min=0):
        cases.append(("q-closed", (m, n, d)))
        cases.append(("cofactors", (m, n, d)))
        cases.append(("translation", (m, n, d)))
    for p in (2, 3, 5):
        for m, n, d in _triples(min(max_mn, 6), d_min=0):
            cases.append(("bernstein-charp", (m, n, d, p)))
    cases += [("sylvester", (min(max_mn, 6),))] * 50
    for l in range(max_mn + 1):
        for k in range(min(max_mn, 5) + 1):
            cases += [("ostrowski", (l, k))] * 2
    for k in range(max_mn + 1):
        cases += [("pfaff-saalschutz", (k,))] * 5
    return cases


def run_case(job: tuple[int, int, str, tuple]) -> bool:
    seed, index, check, params = job
    return bool(CHECKS[check](_case_rng(seed, check, index), *params))


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.cases


def run_sweep(max_mn: int, seed: int, jobs: int = 1) -> list[CheckResult]:
    """Run every check; results are merged in case order, independent of ``jobs``."""
    cases = build_cases(max_mn)
    work = [(seed, i, check, params) for i, (check, params) in enumerate(cases)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run_case, work, chunksize=32))
    else:
        outcomes = [run_case(job) for job in work]
    results: dict[str, CheckResult] = {name: CheckResult(name) for name in CHECKS}
    for (check, params), ok in zip(cases, outcomes):
        res = results[check]
        res.cases += 1
        if ok:
            res.passed += 1
        else:
            res.failures.append(list(params))
    return [r for r in results.values() if r.cases]

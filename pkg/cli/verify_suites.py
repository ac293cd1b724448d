#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Randomized Verification Suites

Each suite draws its instances from a seeded ``random.Random`` (drawing is
sequential, so a seed fixes the instances), checks them on a thread pool and
reduces the verdicts in instance order.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, product as cartesian
from typing import Any, Callable, Dict, List, Tuple

from tqdm import tqdm

from geometry import (LPProblem, canonicalize, contains_polyhedron, enumerate_vertices,
                      hausdorff_sq, hull, lp_feasible, minkowski_sum, point_polytope_sqdist,
                      sqrt_free_triangle, support_min)
from lct import (LctManager, cor1_shift_check, inner_facet_normals, lct_polytope_monomial,
                 membership_oracle, order_bounds_check, power_rescale, prism_extend)
from monomial import MonomialIdeal, newton_polyhedron, power, product
from sequence import (cor2_values, descending, detect_stationary_limit, ex11_family, ex11_ideals,
                      truncation_family)

logger = logging.getLogger(__name__)

Instance = Dict[str, Any]
Verdict = Tuple[bool, str]


@dataclass
class SuiteReport:
    suite: str
    seed: int
    count: int
    passed: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return not self.failures

    def to_payload(self) -> Dict[str, Any]:
        payload = {
            "success": self.success,
            "suite": self.suite,
            "seed": self.seed,
            "count": self.count,
            "passed": self.passed,
            "failed": len(self.failures),
        }
        if self.failures:
            # smallest failing instance first
            smallest = min(self.failures, key=lambda f: (f["size"], f["index"]))
            payload["reproducer"] = {k: v for k, v in smallest.items() if k != "size"}
        return payload


# ---------------------------------------------------------------- instances

def random_ideal(rng: random.Random, n: int, max_gens: int = 4, max_exp: int = 5,
                 m_primary: bool = False) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        u = [rng.randint(0, max_exp) for _ in range(n)]
        if not any(u):
            u[rng.randrange(n)] = rng.randint(1, max_exp)
        gens.append(tuple(u))
    if m_primary:
        for i in range(n):
            gens.append(tuple(rng.randint(1, max_exp) if j == i else 0 for j in range(n)))
    return MonomialIdeal(n, tuple(gens))


def random_tuple(rng: random.Random, max_n: int = 3, max_r: int = 3, **kwargs) -> Tuple[MonomialIdeal, ...]:
    n = rng.randint(1, max_n)
    r = rng.randint(1, max_r)
    return tuple(random_ideal(rng, n, **kwargs) for _ in range(r))


def describe(ideals) -> List[List[List[int]]]:
    return [[list(g) for g in a.generators] for a in ideals]


def ideals_from(description) -> Tuple[MonomialIdeal, ...]:
    return tuple(MonomialIdeal(len(gens[0]), tuple(tuple(g) for g in gens)) for gens in description)


def _size(instance: Instance) -> int:
    return sum(len(gens) for key, value in instance.items() if key.startswith("ideals")
               for gens in value)


# ---------------------------------------------------------------- suites

def _gen_prop1(rng: random.Random) -> Instance:
    ideals = random_tuple(rng)
    n = ideals[0].n
    powers = [rng.randint(1, 3) for _ in ideals]
    # a_i' = a_i * (x_j) is contained in a_i
    shrink = [rng.randrange(n) for _ in ideals]
    return {"ideals": describe(ideals), "powers": powers, "shrink": shrink}


def _check_prop1(instance: Instance) -> Verdict:
    ideals = ideals_from(instance["ideals"])
    n = ideals[0].n
    manager = LctManager()
    P = manager.from_ideals(ideals)
    failed = [name for name, ok in manager.sanity_report(ideals).items() if not ok]
    if failed:
        return False, f"structural checks fail: {', '.join(failed)}"
    powered = lct_polytope_monomial(tuple(power(a, m) for a, m in zip(ideals, instance["powers"])))
    if power_rescale(P, instance["powers"]) != powered:
        return False, "power rescale differs from the powered ideals"
    smaller = tuple(product(a, MonomialIdeal(n, (tuple(int(k == j) for k in range(n)),)))
                    for a, j in zip(ideals, instance["shrink"]))
    if not contains_polyhedron(P.h, lct_polytope_monomial(smaller).h):
        return False, "monotonicity under inclusion fails"
    return True, ""


def _gen_order(rng: random.Random) -> Instance:
    return {"ideals": describe((random_ideal(rng, rng.randint(1, 3)),))}


def _check_order(instance: Instance) -> Verdict:
    a = ideals_from(instance["ideals"])[0]
    return order_bounds_check(a), "1/ord <= lct <= n/ord fails"


def _gen_cor2(rng: random.Random) -> Instance:
    N = rng.randint(2, 6)
    n = rng.randint(1, 3)
    r = rng.randint(1, 3)
    pairs_a, pairs_b = [], []
    for _ in range(r):
        low = [g for g in random_ideal(rng, n).generators if sum(g) < N]

        def high():
            gens = []
            for _ in range(rng.randint(0 if low else 1, 3)):
                degree = rng.randint(N, N + 3)
                cuts = sorted(rng.randint(0, degree) for _ in range(n - 1))
                parts = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
                gens.append(tuple(parts))
            return gens

        pairs_a.append([list(g) for g in MonomialIdeal(n, tuple(low + high())).generators])
        pairs_b.append([list(g) for g in MonomialIdeal(n, tuple(low + high())).generators])
    return {"ideals_a": pairs_a, "ideals_b": pairs_b, "N": N}


def _check_cor2(instance: Instance) -> Verdict:
    A, B, N = ideals_from(instance["ideals_a"]), ideals_from(instance["ideals_b"]), instance["N"]
    distance, bound = cor2_values(A, B, N)
    if distance > bound:
        return False, f"squared distance {distance} exceeds {bound}"
    if not cor1_shift_check(A, B, N):
        return False, "shifted vertex leaves LCT(b)"
    return True, ""


def _gen_ex11(rng: random.Random) -> Instance:
    ideals = random_tuple(rng, max_n=2, max_r=2, max_gens=3, max_exp=4)
    return {"ideals": describe(ideals), "d": rng.randint(1, 4), "axis": rng.randrange(len(ideals))}


def _check_ex11(instance: Instance) -> Verdict:
    ideals = ideals_from(instance["ideals"])
    d, axis = instance["d"], instance["axis"]
    base = lct_polytope_monomial(ideals)
    if prism_extend(base, d, axis) != lct_polytope_monomial(ex11_ideals(ideals, d, axis)):
        return False, "prism differs from the LCT-polytope of the extended tuple"
    seq = ex11_family(ideals, range(1, 5), axis)
    if detect_stationary_limit(seq, 2).stationary:
        return False, "prism family reported stationary"
    profile = [hausdorff_sq(P.h, base.h) for P in seq.materialize()]
    if not all(x > y for x, y in zip(profile, profile[1:])) or profile[-1] <= 0:
        return False, f"distance profile {profile} is not strictly decreasing"
    return True, ""


def _gen_oracle(rng: random.Random) -> Instance:
    return {"ideals": describe(random_tuple(rng))}


def _check_oracle(instance: Instance) -> Verdict:
    ideals = ideals_from(instance["ideals"])
    P = lct_polytope_monomial(ideals)
    n, r = ideals[0].n, len(ideals)
    # every point of the quarter grid on the cube [0, n]^r
    grid = cartesian([Fraction(k, 4) for k in range(4 * n + 1)], repeat=r)
    for lam in chain(grid, P.vertices()):
        if membership_oracle(ideals, lam) != P.contains(lam):
            return False, f"oracle and H-description disagree at {[str(c) for c in lam]}"
    return True, ""


def _gen_truncation(rng: random.Random) -> Instance:
    ideals = random_tuple(rng, max_n=2, max_r=2, max_gens=3, max_exp=4, m_primary=rng.random() < 0.5)
    return {"ideals": describe(ideals)}


def _check_truncation(instance: Instance) -> Verdict:
    ideals = ideals_from(instance["ideals"])
    P = lct_polytope_monomial(ideals)
    top = max(a.max_degree for a in ideals) + 1
    terms = truncation_family(ideals, range(1, top + 1)).materialize()
    if not descending(terms):
        return False, "truncation terms are not descending"
    if not all(contains_polyhedron(T.h, P.h) for T in terms):
        return False, "a truncation term misses LCT(a)"
    if all(a.is_m_primary for a in ideals) and terms[-1] != P:
        return False, "m-primary truncations do not stabilize at LCT(a)"
    return True, ""


def _gen_kernel(rng: random.Random) -> Instance:
    dim = rng.randint(1, 3)

    def body():
        return [[rng.randint(0, 4) for _ in range(dim)] for _ in range(rng.randint(1, 6))]

    return {"dim": dim, "bodies": [body(), body(), body()],
            "point": [str(Fraction(rng.randint(-2, 10), 2)) for _ in range(dim)],
            "ideals": describe((random_ideal(rng, dim), random_ideal(rng, dim)))}


def _check_kernel(instance: Instance) -> Verdict:
    P, Q, R = (hull(points) for points in instance["bodies"])
    V = enumerate_vertices(P)
    if hull(V.vertices) != P:
        return False, "hull/vertex round trip fails"
    x = tuple(Fraction(c) for c in instance["point"])
    inside = P.contains(x)
    weights = LPProblem(len(V.vertices),
                        equalities=tuple([((1,) * len(V.vertices), 1)]
                                         + [(tuple(v[i] for v in V.vertices), x[i]) for i in range(P.dim)]),
                        nonnegative=(True,) * len(V.vertices))
    if inside != (point_polytope_sqdist(x, P) == 0) or inside != lp_feasible(weights).feasible:
        return False, f"membership tests disagree at {instance['point']}"
    a, b = ideals_from(instance["ideals"])
    Na, Nb = newton_polyhedron(a), newton_polyhedron(b)
    total = minkowski_sum(Na.base, Nb.base)
    normals = set(inner_facet_normals(total)) | set(inner_facet_normals(Na.base)) | set(inner_facet_normals(Nb.base))
    for w in normals:
        if support_min(total, w) != Na.support(w) + Nb.support(w):
            return False, f"support function not additive at {list(w)}"
    dpq, dqp = hausdorff_sq(P, Q), hausdorff_sq(Q, P)
    if dpq != dqp:
        return False, "Hausdorff distance not symmetric"
    if (dpq == 0) != (canonicalize(P) == canonicalize(Q)):
        return False, "zero distance does not match equality"
    if not sqrt_free_triangle(hausdorff_sq(P, R), dpq, hausdorff_sq(Q, R)):
        return False, "triangle inequality fails"
    return True, ""


SUITES: Dict[str, Tuple[Callable[[random.Random], Instance], Callable[[Instance], Verdict]]] = {
    "prop1": (_gen_prop1, _check_prop1),
    "order": (_gen_order, _check_order),
    "cor2": (_gen_cor2, _check_cor2),
    "ex11": (_gen_ex11, _check_ex11),
    "oracle": (_gen_oracle, _check_oracle),
    "truncation": (_gen_truncation, _check_truncation),
    "kernel": (_gen_kernel, _check_kernel),
}


def _safe_check(check: Callable[[Instance], Verdict], instance: Instance) -> Verdict:
    try:
        return check(instance)
    except Exception as e:
        logger.error(f"Check raised {type(e).__name__}: {e}")
        return False, f"{type(e).__name__}: {e}"


def run_suite(suite: str, seed: int = 0, count: int = 50, threads: int = 1,
              progress: bool = False) -> SuiteReport:
    """Run one named suite

    Args:
        suite: Suite name, one of ``SUITES``
        seed: Seed of the instance generator
        count: Number of instances
        threads: Worker threads for the checks
        progress: Show a progress bar on stderr

    Returns:
        SuiteReport: Counts, the seed and a reproducer for the smallest failure
    """
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    generate, check = SUITES[suite]
    rng = random.Random(seed)
    instances = [generate(rng) for _ in range(count)]
    logger.info(f"Suite {suite}: {count} instances, seed {seed}, {threads} thread(s)")

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        verdicts = list(tqdm(pool.map(lambda inst: _safe_check(check, inst), instances),
                             total=count, desc=suite, disable=not progress))

    report = SuiteReport(suite, seed, count)
    for index, (instance, (ok, message)) in enumerate(zip(instances, verdicts)):
        if ok:
            report.passed += 1
        else:
            report.failures.append({"index": index, "instance": instance, "message": message,
                                    "size": _size(instance)})
    return report

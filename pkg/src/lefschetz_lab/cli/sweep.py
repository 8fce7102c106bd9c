"""Batch experiments: random complete intersections and ACI fixtures."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from ..aci import check_C1, sample_aci, verify_thmA2, veronese_misses
from ..gradedalg import GradedQuotient, MultiDegree, SystemInput
from ..polycore.field import QQ, Field
from ..polycore.poly import Poly, PolyRing, monomials_of_degree
from .pipeline import certify, consistency_flags, derive_seed

DEFAULT_Q_SWEEP_BOUND = 10
MAX_CI_ATTEMPTS = 50


def default_bound(field: Field) -> int:
    """Q sweeps use small boxes; F_p sweeps draw uniform residues (symmetric representatives)."""
    return DEFAULT_Q_SWEEP_BOUND if field.is_rational else (field.p - 1) // 2


def sample_system(md: MultiDegree, rng, bound: int) -> SystemInput:
    ring = PolyRing.standard(md.n)
    forms = []
    for d in md.degrees:
        terms = {m: rng.randint(-bound, bound) for m in monomials_of_degree(md.n, d)}
        forms.append(Poly(ring, terms, d))
    return SystemInput(tuple(forms), ring)


def _is_ci(sys: SystemInput, field: Field) -> tuple:
    """(is_ci, escalated): a non-CI verdict mod p is re-checked over Q."""
    local = sys if field.is_rational else sys.to_field(field)
    if GradedQuotient(local).is_ci:
        return True, False
    if field.is_rational:
        return False, False
    return GradedQuotient(sys).is_ci, True


def _rate(num: int, den: int) -> str:
    return str(Fraction(num, den)) if den else "0"


def sweep_one(md: MultiDegree, index: int, seed: int, field: Field, bound: int, trials: int) -> dict:
    rng = random.Random(derive_seed(seed, "system", index))
    escalated = False
    for attempt in range(1, MAX_CI_ATTEMPTS + 1):
        sys = sample_system(md, rng, bound)
        ok, esc = _is_ci(sys, field)
        escalated |= esc
        if ok:
            break
    else:
        return {"index": index, "attempts": MAX_CI_ATTEMPTS, "is_ci": False, "escalated": escalated,
                "condition_smooth": None, "condition_veronese": None, "slp1": None,
                "thmA3_equivalence": None, "thmSLP1_implication": None}
    run, esc = certify(sys, field, ks=[1], trials=trials, seed=derive_seed(seed, "slp", index))
    flags = consistency_flags(run)
    slp1 = run.slp[1]
    return {
        "index": index,
        "attempts": attempt,
        "is_ci": True,
        "escalated": escalated or esc,
        "condition_smooth": run.smooth.verdict,
        "condition_veronese": run.veronese.verdict,
        "slp1": slp1.verdict.value,
        "slp1_trials": slp1.trials,
        **flags,
    }


def _sweep_task(args):
    return sweep_one(*args)


def run_sweep(md: MultiDegree, samples: int, field: Field, seed: int, bound: int | None = None,
              trials: int = 20, jobs: int = 1, timing: bool = True) -> dict:
    bound = default_bound(field) if bound is None else bound
    start = time.perf_counter()
    tasks = [(md, i, seed, field, bound, trials) for i in range(samples)]
    if jobs > 1 and samples > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_sweep_task, tasks))
    else:
        outcomes = [_sweep_task(t) for t in tasks]
    ci = [o for o in outcomes if o["is_ci"]]
    draws = sum(o["attempts"] for o in outcomes)
    summary = {
        "multidegree": list(md.degrees),
        "n": md.n,
        "T": md.T,
        "field": str(field),
        "seed": seed,
        "coeff_bound": bound,
        "trials": trials,
        "samples": samples,
        "draws": draws,
        "ci_rate": _rate(len(ci), draws),
        "condition1_rate": _rate(sum(o["condition_smooth"] for o in ci), len(ci)),
        "condition2_rate": _rate(sum(o["condition_veronese"] for o in ci), len(ci)),
        "slp1_rate": _rate(sum(o["slp1"] == "HOLDS_WITH_WITNESS" for o in ci), len(ci)),
        "equivalence_violations": sum(not o["thmA3_equivalence"] for o in ci),
        "implication_violations": sum(not o["thmSLP1_implication"] for o in ci),
        "escalations": sum(o["escalated"] for o in outcomes),
        "outcomes": outcomes,
        "timing": {"total_us": int((time.perf_counter() - start) * 1_000_000)} if timing else None,
    }
    return summary


def aci_one(md: MultiDegree, index: int, seed: int, bound: int, field: Field, ell_trials: int) -> dict:
    rng = random.Random(derive_seed(seed, "aci", index))
    fx = sample_aci(md.n, md, rng, bound, field, seed=derive_seed(seed, "aci", index))
    rep = verify_thmA2(fx)
    c1 = 0
    misses = 0
    ring = fx.ring
    for _ in range(ell_trials):
        coeffs = [0] * md.n
        while not any(field(c) for c in coeffs):
            coeffs = [rng.randint(-bound, bound) for _ in range(md.n)]
        ell = ring.linear_form(coeffs)
        c1 += check_C1(ell, fx.T)
        misses += veronese_misses(fx, ell)
    return {
        "index": index,
        "generators": [g.to_str() for g in fx.generators],
        "claim1": rep.claim1,
        "claim2": rep.claim2,
        "claim3": rep.claim3,
        "passed": rep.passed,
        "dim_J_top": rep.dim_J_top,
        "dim_K_top": rep.dim_K_top,
        "quotient_dim_top": rep.quotient_dim_top,
        "C1_holds": c1,
        "veronese_misses": misses,
        "ell_trials": ell_trials,
        "failures": rep.failures(),
    }


def _aci_task(args):
    return aci_one(*args)


def run_aci(md: MultiDegree, samples: int, seed: int, bound: int = 50, field: Field = QQ,
            ell_trials: int = 100, jobs: int = 1, timing: bool = True) -> dict:
    start = time.perf_counter()
    tasks = [(md, i, seed, bound, field, ell_trials) for i in range(samples)]
    if jobs > 1 and samples > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_aci_task, tasks))
    else:
        outcomes = [_aci_task(t) for t in tasks]
    passed = [o for o in outcomes if o["passed"]]
    return {
        "multidegree": list(md.degrees),
        "n": md.n,
        "T": md.T,
        "field": str(field),
        "seed": seed,
        "coeff_bound": bound,
        "samples": samples,
        "pass_rate": _rate(len(passed), samples),
        "claim1_rate": _rate(sum(o["claim1"] for o in outcomes), samples),
        "claim2_rate": _rate(sum(o["claim2"] for o in outcomes), samples),
        "claim3_rate": _rate(sum(o["claim3"] for o in outcomes), samples),
        "quotient_dims_on_pass": sorted({o["quotient_dim_top"] for o in passed}),
        "C1_rate": _rate(sum(o["C1_holds"] for o in outcomes), sum(o["ell_trials"] for o in outcomes)),
        "veronese_miss_rate": _rate(sum(o["veronese_misses"] for o in outcomes),
                                    sum(o["ell_trials"] for o in outcomes)),
        "outcomes": outcomes,
        "timing": {"total_us": int((time.perf_counter() - start) * 1_000_000)} if timing else None,
    }

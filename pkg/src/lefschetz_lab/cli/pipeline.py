"""Full certification pipeline and its JSON report.

Systems are always held over Q.  In F_p mode every computation runs mod p
first; positive certificates mod p lift to Q (a rank mod p never exceeds
the rank over Q), negative ones do not, so any negative outcome triggers a
complete re-run over Q and the Q results are what gets reported.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field as dc_field

from ..assocform import associated_form
from ..errors import InvariantBreach
from ..gradedalg import GradedQuotient, SystemInput
from ..lefschetz import DEFAULT_COEFF_BOUND, slp_witness_search
from ..polycore.field import QQ, Field
from ..polycore.poly import Poly, _det, gradient, jacobian_det
from ..projgeom import condition_smooth_assocform, condition_veronese_empty

REPORT_KEYS = (
    "input",
    "T",
    "is_ci",
    "hilbert",
    "socle",
    "assoc_form",
    "condition_smooth",
    "condition_veronese",
    "slp",
    "consistency",
    "timing",
)

EXIT_OK = 0
EXIT_NOT_CI = 1
EXIT_INCONSISTENT = 2

MONOMIAL_ORDER = "graded-lex, x1 > ... > xn, largest monomial first"


def derive_seed(seed: int, *labels) -> int:
    """Stable 64-bit seed for a sub-task (sample index, k, ...)."""
    digest = hashlib.blake2b(repr((int(seed),) + labels).encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def scalar_str(field: Field, c) -> str:
    return field.format(c)


def _poly_json(p: Poly) -> dict:
    field = p.ring.field
    return {
        "text": p.to_str(),
        "coefficients": [
            {"exponent": list(m), "coeff": scalar_str(field, c)} for m, c in p.sorted_terms()
        ],
    }


def _monomial_text(ring, m) -> str:
    return ring.monomial(m).to_str()


@dataclass
class Run:
    """Results of one pass of the pipeline over a single field."""

    field: Field
    quotient: GradedQuotient
    socle: object = None
    assoc: object = None
    smooth: object = None
    veronese: object = None
    slp: dict = dc_field(default_factory=dict)
    timing: dict = dc_field(default_factory=dict)

    @property
    def is_ci(self) -> bool:
        return self.quotient.is_ci

    def negative(self) -> bool:
        if not self.is_ci:
            return True
        if not self.smooth.verdict or not self.veronese.verdict:
            return True
        return any(not v.holds for v in self.slp.values())


def _clock(timing: dict, stage: str, start: float) -> float:
    now = time.perf_counter()
    timing[stage] = int((now - start) * 1_000_000)
    return now


def run_pipeline(sys: SystemInput, field: Field, ks, trials: int, seed: int, bound: int) -> Run:
    t0 = time.perf_counter()
    local = sys if sys.field == field else sys.to_field(field)
    run = Run(field, GradedQuotient(local))
    t = _clock(run.timing, "quotient_us", t0)
    if not run.is_ci:
        return run
    q = run.quotient
    run.socle = q.socle
    run.assoc = associated_form(q, run.socle)
    t = _clock(run.timing, "assoc_form_us", t)
    run.smooth = condition_smooth_assocform(run.assoc)
    t = _clock(run.timing, "condition_smooth_us", t)
    run.veronese = condition_veronese_empty(q)
    t = _clock(run.timing, "condition_veronese_us", t)
    for k in ks:
        rng = random.Random(derive_seed(seed, "slp", k))
        run.slp[k] = slp_witness_search(q, k, trials, rng, bound)
    _clock(run.timing, "slp_us", t)
    return run


def default_ks(T: int) -> list:
    return list(range(0, (T + 1) // 2))


def certify(sys: SystemInput, field: Field, ks=None, trials: int = 20, seed: int = 0,
            bound: int = DEFAULT_COEFF_BOUND) -> tuple:
    """Run over ``field``, escalating to Q on any negative; returns (run, escalated)."""
    T = sys.T
    ks = sorted(set(default_ks(T) if ks is None else ks) | {1})
    bad = [k for k in ks if not (0 <= k and 2 * k < T)]
    if bad:
        raise ValueError(f"k = {bad[0]} outside [0, T/2) with T = {T}")
    if field.is_rational:
        return run_pipeline(sys, QQ, ks, trials, seed, bound), False
    try:
        run = run_pipeline(sys, field, ks, trials, seed, bound)
    except (ZeroDivisionError, InvariantBreach):
        run = None
    if run is not None and not run.negative():
        return run, False
    return run_pipeline(sys, QQ, ks, trials, seed, bound), True


def consistency_flags(run: Run) -> dict:
    equivalence = run.smooth.verdict == run.veronese.verdict
    implication = (not run.smooth.verdict) or run.slp[1].holds
    return {"thmA3_equivalence": equivalence, "thmSLP1_implication": implication}


def hessian_matches_jacobian(f: Poly) -> bool:
    """Hess(f), from second partials, equals Jac of the gradient system."""
    n = f.ring.n
    second = [[f.partial(i).partial(j) for j in range(n)] for i in range(n)]
    hess = _det(second, f.ring, n * (f.degree - 2))
    return hess == jacobian_det(gradient(f))


def build_report(sys: SystemInput, field: Field, ks=None, trials: int = 20, seed: int = 0,
                 bound: int = DEFAULT_COEFF_BOUND, timing: bool = True, milnor: Poly | None = None):
    """Return ``(report_dict, exit_code)``."""
    run, escalated = certify(sys, field, ks, trials, seed, bound)
    q = run.quotient
    used = run.field
    ring = q.ring
    input_block = {
        "mode": "milnor" if milnor is not None else "system",
        "n": sys.n,
        "vars": list(ring.names),
        "generators": [f.to_str() for f in sys.forms],
        "degrees": list(sys.degrees),
        "field": str(field),
        "field_used": str(used),
        "escalated_to_q": escalated,
        "seed": seed,
        "trials": trials,
        "coeff_bound": bound,
        "k": sorted(run.slp) if run.is_ci else sorted(set(default_ks(sys.T) if ks is None else ks) | {1}),
        "monomial_order": MONOMIAL_ORDER,
        "milnor": None,
    }
    if milnor is not None:
        input_block["milnor"] = {
            "f": milnor.to_str(),
            "degree": milnor.degree,
            "socle_degree_formula": sys.n * (milnor.degree - 2),
            "hess_equals_jac": hessian_matches_jacobian(milnor),
        }
    verdict = q.ci_verdict
    report = {
        "input": input_block,
        "T": q.T,
        "is_ci": {
            "verdict": verdict.is_ci,
            "failure_degree": verdict.failure_degree,
            "expected_hilbert": list(verdict.expected),
        },
        "hilbert": list(q.hilbert),
        "socle": None,
        "assoc_form": None,
        "condition_smooth": None,
        "condition_veronese": None,
        "slp": [],
        "consistency": None,
        "timing": dict(run.timing) if timing else None,
    }
    if not run.is_ci:
        return report, EXIT_NOT_CI

    s = run.socle
    report["socle"] = {
        "monomial": _monomial_text(ring, s.monomial),
        "exponent": list(s.monomial),
        "c": scalar_str(used, s.c),
        "omega_of_monomial": scalar_str(used, s.omega_of_monomial),
        "jacobian": q.jacobian.to_str(),
    }
    A = run.assoc
    report["assoc_form"] = {
        "degree": A.degree,
        "vars": list(A.form.ring.names),
        "exact": _poly_json(A.form),
        "projective": _poly_json(A.projective()),
    }
    sm = run.smooth
    report["condition_smooth"] = {
        "verdict": sm.verdict,
        "decision_degree": sm.decision_degree,
        "quotient_dim": sm.quotient_dim,
    }
    ver = run.veronese
    report["condition_veronese"] = {
        "verdict": ver.verdict,
        "decision_degree": ver.artinian.decision_degree,
        "quotient_dim": ver.artinian.quotient_dim,
        "h_forms": [h.to_str() for h in ver.h_forms],
        "witness": ver.witness.to_str() if ver.witness is not None else None,
    }
    for k in sorted(run.slp):
        v = run.slp[k]
        report["slp"].append({
            "k": k,
            "map_degree": v.map_degree,
            "verdict": v.verdict.value,
            "witness": v.witness.to_str() if v.witness is not None else None,
            "trials_used": v.trials,
            "sample_size": v.sample_size,
            "degree_bound": v.degree_bound,
            "failure_bound": None if v.failure_bound is None else str(v.failure_bound),
        })
    flags = consistency_flags(run)
    report["consistency"] = flags
    code = EXIT_OK if all(flags.values()) else EXIT_INCONSISTENT
    return report, code

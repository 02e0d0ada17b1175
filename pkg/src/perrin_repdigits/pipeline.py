"""Full replay of the argument: low-range search, initial bounds, two reductions.

The replay assumes a solution with n > 500 exists and closes the argument
by deriving a certified bound on n below 500.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction

from .baker import MODES, bound_chain
from .contfrac import tau, tau_expansion
from .realfield import (
    DEFAULT_PRECISION,
    PrecisionExhausted,
    PrecisionReal,
    format_decimal,
    log_certified,
    max_precision,
    nearest_int_distance,
)
from .reduction import ReductionOutcome, ReductionProblem, dujella_petho, legendre_reduce
from .repdigits import ConcatPattern
from .search import SolutionRecord, brute_search
from .sequences import SequenceCache, root_data

__all__ = [
    "LOW_RANGE",
    "PipelineError",
    "OutcomeRecord",
    "StageResult",
    "Certificate",
    "stage1_reduction",
    "stage2_reduction",
    "stage1_constants",
    "run_pipeline",
    "emit_report",
    "parse_report",
]

log = logging.getLogger(__name__)

LOW_RANGE = 500
# |Lambda_1| < 92 / 10^ell and |Lambda_2| < 8 / alpha^n
STAGE1_NUMERATOR = 92
STAGE2_NUMERATOR = 8
EPSILON_DIGITS = 12
# quotients expanded past the first q > 6M, for epsilon retries
CF_EXTRA = 12


class PipelineError(RuntimeError):
    """A stage failed to certify; the message names the stage and instance."""


@dataclass(frozen=True)
class OutcomeRecord:
    d1: int
    d2: int | None
    ell: int | None
    q_index: int
    q_decimal: str
    epsilon_lower: str | None
    k_bound: int
    method: str

    @classmethod
    def from_outcome(cls, out: ReductionOutcome, d1, d2=None, ell=None) -> OutcomeRecord:
        eps = out.epsilon_lower
        return cls(d1, d2, ell, out.q_index, str(out.q_used),
                   None if eps is None else format_decimal(eps, EPSILON_DIGITS, "down"),
                   out.k_bound, out.method)

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class StageResult:
    bound: int
    q_index: int
    q_decimal: str
    outcomes: tuple[OutcomeRecord, ...]

    def min_epsilon(self) -> Fraction | None:
        eps = [Fraction(o.epsilon_lower) for o in self.outcomes if o.epsilon_lower is not None]
        return min(eps) if eps else None

    def as_dict(self) -> dict:
        return {"bound": self.bound, "q_index": self.q_index, "q_decimal": self.q_decimal,
                "outcomes": [o.as_dict() for o in self.outcomes]}

    @classmethod
    def from_dict(cls, d) -> StageResult:
        return cls(d["bound"], d["q_index"], d["q_decimal"],
                   tuple(OutcomeRecord(**o) for o in d["outcomes"]))


@dataclass(frozen=True)
class Certificate:
    solution_set: tuple[SolutionRecord, ...]
    initial_bounds: dict
    stage1: StageResult
    stage2: StageResult
    final_n_bound: int
    consistency: bool
    precision_used: int
    constants_mode: str


def _problem(kappa, mu, M, numerator, base, roots) -> ReductionProblem:
    return ReductionProblem(kappa=kappa, mu=mu, M=M, A=numerator / roots.log_alpha, B=base)


def stage1_reduction(M: int, precision: int = DEFAULT_PRECISION, d1_values=range(1, 10)) -> StageResult:
    """Bound ell from |(ell+m) tau - n + log(d1/9)/log alpha| < 92 / (10^ell log alpha)."""
    roots = root_data(precision)
    kappa = tau(precision)
    cf = tau_expansion(6 * M, CF_EXTRA, precision)
    log9 = log_certified(9, precision)
    ten = PrecisionReal.exact(10, precision)
    outcomes = []
    for d1 in d1_values:
        if d1 == 9:
            out = legendre_reduce(kappa, cf, M, STAGE1_NUMERATOR / roots.log_alpha, ten)
        else:
            mu = (log_certified(d1, precision) - log9) / roots.log_alpha
            out = _reduce(_problem(kappa, mu, M, STAGE1_NUMERATOR, ten, roots), cf, f"stage 1, d1={d1}")
        outcomes.append(OutcomeRecord.from_outcome(out, d1))
    k = cf.first_index_above(6 * M)
    # ell = 1 is outside the reduction's range, so the bound is at least 1
    bound = max([1] + [o.k_bound for o in outcomes])
    return StageResult(bound, k, str(cf.q(k)), tuple(outcomes))


def _reduce(problem, cf, where):
    try:
        return dujella_petho(problem, cf)
    except PrecisionExhausted:
        raise
    except ArithmeticError as exc:
        raise PipelineError(f"{where}: {exc}") from exc


def stage2_instances(ell_bound: int, d1=None, d2=None, ell=None):
    for a in range(1, 10) if d1 is None else [d1]:
        for b in range(10) if d2 is None else [d2]:
            if a == b:
                continue
            for l in range(1, ell_bound + 1) if ell is None else [ell]:
                yield a, b, l


def stage2_reduction(M: int, ell_bound: int, precision: int = DEFAULT_PRECISION,
                     d1=None, d2=None, ell=None) -> StageResult:
    """Bound n from |m tau - n + log(eta_1)/log alpha| < 8 / (alpha^n log alpha)."""
    roots = root_data(precision)
    kappa = tau(precision)
    cf = tau_expansion(6 * M, CF_EXTRA, precision)
    log9 = log_certified(9, precision)
    outcomes = []
    for a, b, l in stage2_instances(ell_bound, d1, d2, ell):
        numer = a * 10 ** l - (a - b)
        if numer == 9:
            # eta_1 = 1, so the linear form has no constant term
            out = legendre_reduce(kappa, cf, M, STAGE2_NUMERATOR / roots.log_alpha, roots.alpha)
        else:
            mu = (log_certified(numer, precision) - log9) / roots.log_alpha
            out = _reduce(_problem(kappa, mu, M, STAGE2_NUMERATOR, roots.alpha, roots), cf,
                          f"stage 2, (d1, d2, ell)=({a}, {b}, {l})")
        outcomes.append(OutcomeRecord.from_outcome(out, a, b, l))
    k = cf.first_index_above(6 * M)
    bound = max(o.k_bound for o in outcomes)
    return StageResult(bound, k, str(cf.q(k)), tuple(outcomes))


def stage1_constants(M: int, precision: int = DEFAULT_PRECISION, q_index: int | None = None) -> dict:
    """||tau q||, ||mu(d1) q|| for d1 = 1..8 at a single convergent (default: first q > 6M)."""
    roots = root_data(precision)
    kappa = tau(precision)
    cf = tau_expansion(6 * M, CF_EXTRA, precision)
    k = cf.first_index_above(6 * M) if q_index is None else q_index
    q = cf.q(k)
    log9 = log_certified(9, precision)
    m_kappa = M * nearest_int_distance(kappa * q)
    mu_dist = {
        d1: nearest_int_distance((log_certified(d1, precision) - log9) / roots.log_alpha * q)
        for d1 in range(1, 9)
    }
    argmin = min(mu_dist, key=lambda d: mu_dist[d].midpoint)
    return {
        "q_index": k,
        "q": q,
        "M_kappa_distance": m_kappa,
        "mu_distance": mu_dist,
        "argmin_d1": argmin,
        "epsilon": mu_dist[argmin] - m_kappa,
    }


def _escalating(fn, precision: int):
    digits = precision
    cap = max_precision()
    while True:
        try:
            return fn(digits), digits
        except PrecisionExhausted:
            if digits >= cap:
                raise
            log.info("precision %d exhausted, retrying at %d", digits, 2 * digits)
            digits = min(2 * digits, cap)


def run_pipeline(precision: int = DEFAULT_PRECISION, mode: str = "fidelity") -> Certificate:
    if precision < 128:
        raise ValueError("precision must be at least 128 digits")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")

    solutions = tuple(brute_search(0, LOW_RANGE))

    chain, digits = _escalating(lambda d: bound_chain(mode, d), precision)
    M = chain.ell_plus_m_bound
    # the chain's n bound also holds when read with (1 + log n)
    if not chain.sound_ell_plus_m_bound < M:
        raise PipelineError("initial bounds: ell + m bound does not dominate the sound reading")

    stage1, digits = _escalating(lambda d: stage1_reduction(M, d), digits)
    stage2, digits = _escalating(lambda d: stage2_reduction(M, stage1.bound, d), digits)
    final = stage2.bound

    recheck = tuple(brute_search(0, LOW_RANGE, SequenceCache()))
    consistency = final < LOW_RANGE and recheck == solutions
    return Certificate(
        solution_set=solutions,
        initial_bounds={"n_bound": str(chain.n_bound), "ell_plus_m_bound": str(M)},
        stage1=stage1,
        stage2=stage2,
        final_n_bound=final,
        consistency=consistency,
        precision_used=digits,
        constants_mode=mode,
    )


def _cert_dict(cert: Certificate) -> dict:
    return {
        "solution_set": [s.as_dict() for s in cert.solution_set],
        "initial_bounds": dict(cert.initial_bounds),
        "stage1": cert.stage1.as_dict(),
        "stage2": cert.stage2.as_dict(),
        "final_n_bound": cert.final_n_bound,
        "consistency": cert.consistency,
        "precision_used": cert.precision_used,
        "constants_mode": cert.constants_mode,
    }


def emit_report(cert: Certificate, format: str = "json") -> str:
    if format == "json":
        return json.dumps(_cert_dict(cert), indent=1, sort_keys=True) + "\n"
    if format != "text":
        raise ValueError("format must be 'json' or 'text'")
    s1, s2 = cert.stage1, cert.stage2
    lines = [
        f"Perrin numbers that concatenate two distinct repdigits ({cert.constants_mode} constants, "
        f"{cert.precision_used} digits)",
        "",
        f"1. Low range 0 <= n <= {LOW_RANGE}: {len(cert.solution_set)} solutions",
    ]
    for s in cert.solution_set:
        p = s.pattern
        lines.append(f"     P_{s.n} = {s.value}  ({p.d1} x{p.ell}, {p.d2} x{p.m})")
    lines += [
        "2. Initial bounds assuming n > 500:",
        f"     n < {cert.initial_bounds['n_bound']}",
        f"     ell + m < {cert.initial_bounds['ell_plus_m_bound']}",
        f"3. First reduction: convergent q_{s1.q_index} = {s1.q_decimal}",
    ]
    for o in s1.outcomes:
        eps = f"epsilon >= {o.epsilon_lower}" if o.epsilon_lower else "Legendre"
        lines.append(f"     d1={o.d1}: {eps}, q_{o.q_index}, ell <= {o.k_bound}")
    lines.append(f"   => ell <= {s1.bound}")
    eps2 = s2.min_epsilon()
    worst = max(s2.outcomes, key=lambda o: o.k_bound)
    lines += [
        f"4. Second reduction over {len(s2.outcomes)} instances (d1, d2, ell <= {s1.bound}):",
        f"     min epsilon >= {format_decimal(eps2, EPSILON_DIGITS, 'down') if eps2 else '-'}",
        f"     largest bound n <= {worst.k_bound} at (d1, d2, ell) = ({worst.d1}, {worst.d2}, {worst.ell})",
    ]
    for o in s2.outcomes:
        if o.method == "legendre":
            lines.append(f"     Legendre case ({o.d1}, {o.d2}, {o.ell}): n <= {o.k_bound}")
    lines += [f"   => n <= {cert.final_n_bound}", ""]
    if cert.consistency:
        lines.append(f"CONSISTENT: n <= {cert.final_n_bound} contradicts n > {LOW_RANGE}; "
                     "the low range holds every solution.")
    else:
        lines.append(f"NOT CONSISTENT: final bound {cert.final_n_bound}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> Certificate:
    d = json.loads(text)
    sols = tuple(
        SolutionRecord(s["n"], int(s["value"]), ConcatPattern(s["d1"], s["d2"], s["ell"], s["m"]))
        for s in d["solution_set"]
    )
    return Certificate(
        solution_set=sols,
        initial_bounds=dict(d["initial_bounds"]),
        stage1=StageResult.from_dict(d["stage1"]),
        stage2=StageResult.from_dict(d["stage2"]),
        final_n_bound=d["final_n_bound"],
        consistency=d["consistency"],
        precision_used=d["precision_used"],
        constants_mode=d["constants_mode"],
    )

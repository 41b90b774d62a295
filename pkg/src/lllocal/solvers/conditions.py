import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from lllocal.constants import (
    POLYNOMIAL_EXPONENT,
    POLYNOMIAL_LOG2_BOUND,
    REPORTED_CONDITIONS,
    ConditionKind,
    Verdict,
)
from lllocal.csp.algebra import d_param, dependency_graph, p_param
from lllocal.csp.model import CSP
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph
from lllocal.shattering.partitions import shattering_width
from lllocal.shattering.witnesses import SeparationWitness, partition_from_separation
from lllocal.solvers.certified import approximate, approximate_rational, compare_with_exp_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LLLCondition:
    kind: ConditionKind
    s: int = 0

    def __post_init__(self):
        if self.s < 0:
            raise InvalidInputError(f"s must be non-negative, got {self.s}")

    @classmethod
    def classic(cls) -> "LLLCondition":
        return cls(ConditionKind.CLASSIC)

    @classmethod
    def shatter(cls, s: int) -> "LLLCondition":
        return cls(ConditionKind.SHATTER, s)

    @classmethod
    def separation(cls, s: int) -> "LLLCondition":
        return cls(ConditionKind.SEPARATION, s)

    @classmethod
    def polynomial(cls) -> "LLLCondition":
        return cls(ConditionKind.POLYNOMIAL)

    @classmethod
    def exponential(cls) -> "LLLCondition":
        return cls(ConditionKind.EXPONENTIAL)

    def inequality(self) -> str:
        match self.kind:
            case ConditionKind.CLASSIC:
                return "p(d+1) <= e^-1"
            case ConditionKind.SHATTER:
                return f"p(d+1)^{self.s} <= e^-{self.s}"
            case ConditionKind.SEPARATION:
                return f"p(d+1)^{self.s + 1} <= e^-{self.s + 1}"
            case ConditionKind.POLYNOMIAL:
                return f"p(d+1)^{POLYNOMIAL_EXPONENT} <= 2^{POLYNOMIAL_LOG2_BOUND}"
            case ConditionKind.EXPONENTIAL:
                return "p*2^d < 1"

    def evaluate(self, p: Fraction, d: int) -> "ConditionReport":
        p = Fraction(p)
        match self.kind:
            case ConditionKind.CLASSIC:
                return self._against_exp(p, d, 1)
            case ConditionKind.SHATTER:
                return self._against_exp(p, d, self.s)
            case ConditionKind.SEPARATION:
                return self._against_exp(p, d, self.s + 1)
            case ConditionKind.POLYNOMIAL:
                lhs = p * (d + 1) ** POLYNOMIAL_EXPONENT
                rhs = Fraction(1, 2 ** -POLYNOMIAL_LOG2_BOUND)
                verdict = Verdict.HOLDS_STRICTLY if lhs < rhs else Verdict.HOLDS if lhs == rhs else Verdict.FAILS
                return self._report(p, d, lhs, verdict, approximate_rational(rhs), 0)
            case ConditionKind.EXPONENTIAL:
                lhs = p * 2**d
                verdict = Verdict.HOLDS_STRICTLY if lhs < 1 else Verdict.FAILS
                return self._report(p, d, lhs, verdict, "1", 0)

    def _against_exp(self, p: Fraction, d: int, k: int) -> "ConditionReport":
        lhs = p * Fraction(d + 1) ** k
        sign, bits = compare_with_exp_bits(lhs, 1, -k)
        if sign < 0:
            verdict = Verdict.HOLDS_STRICTLY
        elif sign == 0:
            # only reachable for k = 0, where the bound is the rational 1
            verdict = Verdict.HOLDS
        else:
            verdict = Verdict.FAILS
        return self._report(p, d, lhs, verdict, approximate(0, 1, -k), bits)

    def _report(self, p: Fraction, d: int, lhs: Fraction, verdict: Verdict, rhs: str, bits: int) -> "ConditionReport":
        return ConditionReport(
            kind=self.kind,
            s=self.s,
            inequality=self.inequality(),
            p=p,
            d=d,
            lhs=lhs,
            lhs_value=approximate_rational(lhs),
            rhs_value=rhs,
            verdict=verdict,
            precision_bits=bits,
        )


@dataclass(frozen=True)
class ConditionReport:
    kind: ConditionKind
    s: int
    inequality: str
    p: Fraction
    d: int
    lhs: Fraction
    lhs_value: str
    rhs_value: str
    verdict: Verdict
    precision_bits: int

    @property
    def holds(self) -> bool:
        return self.verdict != Verdict.FAILS

    def as_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "s": self.s,
            "inequality": self.inequality,
            "p": str(self.p),
            "d": self.d,
            "lhs": str(self.lhs),
            "lhs_value": self.lhs_value,
            "rhs_value": self.rhs_value,
            "verdict": self.verdict.value,
            "precision_bits": self.precision_bits,
        }


def check_condition(csp: CSP, condition: LLLCondition) -> ConditionReport:
    report = condition.evaluate(p_param(csp), d_param(csp))
    logger.info(f"Condition {report.inequality}: lhs={report.lhs_value} rhs={report.rhs_value} -> {report.verdict.value}")
    return report


def condition_report(csp: CSP, s: int) -> list[ConditionReport]:
    """Every supported condition evaluated on the same p and d."""
    p, d = p_param(csp), d_param(csp)
    reports = []
    for kind in REPORTED_CONDITIONS:
        condition = LLLCondition(kind, s if kind in (ConditionKind.SHATTER, ConditionKind.SEPARATION) else 0)
        reports.append(condition.evaluate(p, d))
    return reports


def shattering_number_upper_bounds(csp: CSP, G: Graph, witness: SeparationWitness) -> dict[str, int]:
    """
    Both upper bounds on the shattering number: s+1 from a separation witness
    of a graph containing G_𝓑, and the maximum domain size. Also reports the
    width actually achieved by the derived partition.
    """
    dependency = dependency_graph(csp)
    for u, v in dependency.edges:
        if u >= G.n or v >= G.n or not G.has_edge(u, v):
            raise InvalidInputError(f"Dependency edge ({u}, {v}) is not an edge of the witness graph")
    partition = partition_from_separation(G, witness)
    return {
        "from_witness": witness.s + 1,
        "from_domains": csp.max_domain_size(),
        "achieved": shattering_width(partition, csp),
    }

"""
Graph-CSP encoding: a bounded CSP whose dependency graph sits inside G is
stored as structure on G. For an ordered tuple 𝐯 listing the underlying set of
some domains, σ(𝐯) is the code of type(𝐯), the multiset of the constraints'
forbidden sets re-indexed to the positions of 𝐯.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from lllocal.csp.algebra import dependency_graph, solution_violations
from lllocal.csp.model import CSP, Constraint, PartialColoring
from lllocal.exceptions import InvalidInputError
from lllocal.graphs.core import Graph
from lllocal.local.problems import graph_csp_lcl
from lllocal.local.runner import check_lcl
from lllocal.local.structured import StructuredGraph

logger = logging.getLogger(__name__)

# domains up to this size get σ on every ordering, larger ones on the sorted one only
ALL_ORDERINGS_UP_TO = 4

TypeKey = tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class GraphCSPEncoding:
    structured: StructuredGraph
    q: int
    codes: Mapping[int, tuple[frozenset, ...]]
    universe: tuple[int, ...]

    @property
    def graph(self) -> Graph:
        return self.structured.graph


def _reindexed(B: Constraint, ordering: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    position = {v: i for i, v in enumerate(B.domain)}
    picks = [position[v] for v in ordering]
    return tuple(sorted(tuple(t[i] for i in picks) for t in B.iter_forbidden()))


def encode_graph_csp(G: Graph, csp: CSP) -> GraphCSPEncoding:
    outside = [v for v in csp.universe if v >= G.n]
    if outside:
        raise InvalidInputError(f"CSP variables {outside} are not vertices of the graph")
    for u, v in dependency_graph(csp).edges:
        if not G.has_edge(u, v):
            raise InvalidInputError(f"Dependency edge ({u}, {v}) is missing from the graph")

    by_set: dict[tuple[int, ...], list[Constraint]] = {}
    for B in csp.constraints:
        by_set.setdefault(tuple(sorted(B.domain)), []).append(B.materialize())

    type_codes: dict[TypeKey, int] = {}
    sigma: dict[tuple[int, ...], int] = {}
    for underlying in sorted(by_set, key=lambda s: (len(s), s)):
        members = by_set[underlying]
        orderings = itertools.permutations(underlying) if len(underlying) <= ALL_ORDERINGS_UP_TO else [underlying]
        for ordering in orderings:
            key = tuple(sorted(_reindexed(B, ordering) for B in members))
            sigma[ordering] = type_codes.setdefault(key, len(type_codes))

    codes = {code: tuple(frozenset(part) for part in key) for key, code in type_codes.items()}
    logger.debug(f"Encoded {len(csp)} constraints with {len(type_codes)} types on {len(sigma)} tuples")
    arity = max((len(t) for t in sigma), default=0)
    return GraphCSPEncoding(StructuredGraph(G, sigma, arity), csp.q, codes, csp.universe)


def decode_graph_csp(encoding: GraphCSPEncoding) -> CSP:
    """Read constraints back from the sorted tuples over the encoded universe; domains come out sorted."""
    constraints = []
    for t, code in sorted(encoding.structured.sigma.items(), key=lambda item: (len(item[0]), item[0])):
        if list(t) != sorted(t):
            continue
        constraints.extend(Constraint(t, forbidden, encoding.q) for forbidden in encoding.codes[code])
    return CSP(encoding.universe, encoding.q, tuple(constraints))


def normalized_constraints(csp: CSP) -> list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]]:
    """Constraints as a sorted multiset of (sorted domain, sorted forbidden tuples)."""
    shapes = []
    for B in csp.constraints:
        normal = B.normalized()
        shapes.append((normal.domain, tuple(sorted(normal.forbidden))))
    return sorted(shapes)


@dataclass
class GraphCSPLabelingCheck:
    lcl_ok: bool
    csp_ok: bool
    violations: list[int]

    @property
    def consistent(self) -> bool:
        return self.lcl_ok == self.csp_ok


def solve_graph_csp_as_lcl(encoding: GraphCSPEncoding, labeling: Sequence[int]) -> GraphCSPLabelingCheck:
    """A labeling passes the radius-1 LCL on the encoding iff it solves the decoded CSP."""
    problem = graph_csp_lcl(encoding.q, encoding.codes)
    verdict = check_lcl(problem, encoding.structured, labeling)
    csp = decode_graph_csp(encoding)
    in_range = all(0 <= c < encoding.q for c in labeling)
    csp_ok = in_range and not solution_violations(csp, PartialColoring(encoding.q, enumerate(labeling)))
    return GraphCSPLabelingCheck(verdict.ok, csp_ok, verdict.violations)

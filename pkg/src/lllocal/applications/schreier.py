"""
Schreier graphs of finite free-looking actions and their (|F|+1)-edge-coloring.

The edge set splits into E_σ, one per order-2 generator and one per inverse
pair of longer generators. Order-2 and even-order parts are colored directly
(matchings take one color, even cycles two). Odd-order parts, plus any
generator flagged as long, go through a complete section of their line-graph
cycles and the section coloring, which needs 1 + 2 per generator. When the
odd cycles admit no independent section, the whole graph is colored by fan
rotation instead, which also stays within Δ + 1 = |F| + 1.
"""
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from pydantic import BaseModel, Field

from lllocal.applications.coloring import section_coloring, union_coloring
from lllocal.applications.edge_coloring import verify_edge_coloring, vizing_edge_coloring
from lllocal.applications.sections import independent_complete_section
from lllocal.constants import DEFAULT_REPORT_INDENT
from lllocal.exceptions import AuditError, InvalidInputError, PreconditionError, UnsatisfiableError
from lllocal.graphs.core import Graph, VertexSet, components, induced_subgraph, line_graph, max_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    name: str
    perm: tuple[int, ...]
    inverse: str
    long: bool = False


def cycles_of(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(perm)
    result = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = perm[x]
        result.append(tuple(cycle))
    return result


@dataclass(frozen=True)
class SchreierAction:
    points: int
    generators: tuple[Generator, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        by_name = {}
        for g in self.generators:
            if g.name in by_name:
                raise InvalidInputError(f"Generator name {g.name} is repeated")
            if sorted(g.perm) != list(range(self.points)):
                raise InvalidInputError(f"Generator {g.name} is not a permutation of {self.points} points")
            by_name[g.name] = g
        for g in self.generators:
            partner = by_name.get(g.inverse)
            if partner is None:
                raise InvalidInputError(f"Inverse {g.inverse} of generator {g.name} is missing")
            if partner.inverse != g.name:
                raise InvalidInputError(f"Generators {g.name} and {g.inverse} are not declared as an inverse pair")
            if any(partner.perm[g.perm[x]] != x for x in range(self.points)):
                raise InvalidInputError(f"{g.inverse} does not invert {g.name}")
            lengths = {len(c) for c in cycles_of(g.perm)}
            if lengths == {1}:
                raise InvalidInputError(f"Generator {g.name} is the identity")
            if len(lengths) != 1:
                raise InvalidInputError(f"Generator {g.name} has cycles of lengths {sorted(lengths)}; the action is not free")
            if lengths == {2} and g.inverse != g.name:
                raise InvalidInputError(f"Order-2 generator {g.name} must be its own inverse")

    def generator(self, name: str) -> Generator:
        return next(g for g in self.generators if g.name == name)

    def order(self, name: str) -> int:
        return len(cycles_of(self.generator(name).perm)[0]) if self.points else 1


@dataclass
class GeneratorClassification:
    order_two: list[str]
    representatives: list[str]
    even: list[str]
    odd: list[str]
    long: list[str]
    orders: dict[str, int]

    @property
    def size(self) -> int:
        """|F| = |F₂| + 2|F_{>2}|."""
        return len(self.order_two) + 2 * len(self.representatives)

    def as_dict(self) -> dict[str, Any]:
        return {
            "F2": self.order_two,
            "F>2": self.representatives,
            "F_even": self.even,
            "F_odd": self.odd,
            "F_long": self.long,
            "orders": self.orders,
        }


def classify(action: SchreierAction) -> GeneratorClassification:
    orders = {g.name: action.order(g.name) for g in action.generators}
    order_two = [g.name for g in action.generators if orders[g.name] == 2]
    representatives = []
    for g in action.generators:
        if orders[g.name] > 2 and g.inverse not in representatives:
            representatives.append(g.name)
    long = [name for name in representatives if action.generator(name).long]
    even = [name for name in representatives if orders[name] % 2 == 0 and name not in long]
    odd = [name for name in representatives if orders[name] % 2 == 1 and name not in long]
    classification = GeneratorClassification(order_two, representatives, even, odd, long, orders)
    if classification.size != len(action.generators):
        raise AuditError(f"|F| = {len(action.generators)} but |F2| + 2|F>2| = {classification.size}")
    return classification


def schreier_graph(action: SchreierAction) -> tuple[Graph, dict[int, str]]:
    """The graph with edges {x, σ·x}, and for each edge index the generator it comes from."""
    classification = classify(action)
    owner: dict[tuple[int, int], str] = {}
    for name in classification.order_two + classification.representatives:
        perm = action.generator(name).perm
        for x in range(action.points):
            edge = (min(x, perm[x]), max(x, perm[x]))
            if owner.setdefault(edge, name) != name:
                raise InvalidInputError(f"Generators {owner[edge]} and {name} both produce edge {edge}")
    G = Graph.from_edges(action.points, owner)
    return G, {G.edge_index(u, v): name for (u, v), name in owner.items()}


def edges_of(G: Graph, labels: dict[int, str], name: str) -> list[int]:
    return sorted(e for e, owner in labels.items() if owner == name)


def _alternating(G: Graph, action: SchreierAction, name: str) -> dict[int, int]:
    """Color the edges {σ^j x, σ^(j+1) x} of every σ-cycle with j mod 2."""
    perm = action.generator(name).perm
    colors = {}
    for cycle in cycles_of(perm):
        for j, x in enumerate(cycle):
            colors[G.edge_index(x, perm[x])] = j % 2
    return colors


def _direct_section(L1: Graph, cycles: Sequence[VertexSet]) -> list[int] | None:
    """One line-graph vertex per cycle, pairwise non-adjacent; cycles shortest first, candidates in id order."""
    order = sorted(range(len(cycles)), key=lambda i: (len(cycles[i]), cycles[i]))
    picked: list[int] = []
    blocked: dict[int, int] = {}

    def search(i: int) -> bool:
        if i == len(order):
            return True
        for e in cycles[order[i]]:
            if blocked.get(e, 0):
                continue
            picked.append(e)
            touched = (e, *L1.neighbors(e))
            for x in touched:
                blocked[x] = blocked.get(x, 0) + 1
            if search(i + 1):
                return True
            for x in touched:
                blocked[x] -= 1
            picked.pop()
        return False

    return sorted(picked) if search(0) else None


@dataclass
class EdgeColoringResult:
    colors: dict[int, int]
    palette: int
    classification: GeneratorClassification
    report: dict[str, Any] = field(default_factory=dict)

    def as_list(self) -> list[int]:
        return [self.colors[e] for e in sorted(self.colors)]


def schreier_edge_coloring(action: SchreierAction, via_sections: bool = False, seed: int | None = None) -> EdgeColoringResult:
    """Proper edge coloring of the Schreier graph with at most |F| + 1 colors."""
    if len(action.generators) < 2:
        raise PreconditionError(f"Need |F| >= 2, got {len(action.generators)}")
    classification = classify(action)
    G, labels = schreier_graph(action)
    L, _ = line_graph(G)

    parts: list[tuple[list[int], dict[int, int]]] = []
    palettes: list[int] = []
    for name in classification.order_two:
        E = edges_of(G, labels, name)
        parts.append((E, {e: 0 for e in E}))
        palettes.append(1)
    for name in classification.even:
        parts.append((edges_of(G, labels, name), _alternating(G, action, name)))
        palettes.append(2)

    sectioned = classification.odd + classification.long
    report: dict[str, Any] = {"classification": classification.as_dict(), "edges": G.m}
    if sectioned:
        odd_edges = sorted(e for name in sectioned for e in edges_of(G, labels, name))
        L1, old_ids, new_id = induced_subgraph(L, odd_edges)
        cycle_parts = [[new_id[e] for e in edges_of(G, labels, name)] for name in sectioned]
        cycles = [c for part in cycle_parts for c in components(L1, within=part)]
        if via_sections:
            same_cycle = Graph.from_edges(L1.n, [(u, v) for c in cycles for u, v in zip(c, c[1:])])
            k = min(len(c) for c in cycles)
            result = independent_complete_section(L1, same_cycle, k, max(max_degree(L1), 2), seed=seed)
            report["section_search"] = result.report
            if not result.found:
                raise UnsatisfiableError("No independent complete section of the odd cycles was found", details=result.report)
            section = list(result.section)
        else:
            # the picked edges are pairwise disjoint in G
            section = _direct_section(L1, cycles) if 2 * len(cycles) <= G.n else None
        if section is None:
            logger.warning(
                f"{len(cycles)} odd-order cycles admit no independent choice of one edge each; "
                f"coloring all {G.m} edges by fan rotation"
            )
            report["section"] = None
        else:
            coloring = section_coloring(L1, cycle_parts, section)
            parts.append((odd_edges, {old_ids[i]: c for i, c in coloring.colors.items()}))
            palettes.append(coloring.palette)
            report["section"] = [old_ids[i] for i in section]

    if sectioned and section is None:
        colors = vizing_edge_coloring(G)
        report["method"] = "fan-rotation"
    else:
        colors = union_coloring(parts, palettes, n=G.m).colors
        report["method"] = "sections" if sectioned else "direct"
    check = verify_edge_coloring(G, colors)
    if not check.ok:
        raise AuditError("Schreier edge coloring is not proper", details=check.as_dict())
    bound = len(action.generators) + 1
    if check.palette > bound:
        raise AuditError(f"Schreier edge coloring uses {check.palette} colors, above |F| + 1 = {bound}")
    report.update({"palette": check.palette, "bound": bound})
    logger.info(f"Edge-colored Schreier graph with {G.m} edges using {check.palette} <= {bound} colors")
    return EdgeColoringResult(colors, check.palette, classification, report)


def translation_action(moduli: Sequence[int], steps: Sequence[Sequence[int] | int], long: Sequence[int] = ()) -> SchreierAction:
    """
    Translations of Z_{m1} × ... × Z_{mk}. Each step g adds +g and -g (one
    generator when 2g = 0). Points use mixed radix with the first coordinate
    varying slowest; steps listed in `long` are flagged as long generators.
    """
    moduli = tuple(moduli)
    if not moduli or any(m < 1 for m in moduli):
        raise InvalidInputError(f"Moduli must be positive, got {moduli}")
    points = math.prod(moduli)

    def decode(x: int) -> list[int]:
        coords = []
        for m in reversed(moduli):
            x, r = divmod(x, m)
            coords.append(r)
        return coords[::-1]

    def encode(coords: Sequence[int]) -> int:
        x = 0
        for c, m in zip(coords, moduli):
            x = x * m + c % m
        return x

    def label(sign: str, g: tuple[int, ...]) -> str:
        return f"{sign}{g[0]}" if len(g) == 1 else f"{sign}({','.join(map(str, g))})"

    generators: list[Generator] = []
    seen: set[tuple[int, ...]] = set()
    for index, raw in enumerate(steps):
        step = (raw,) if isinstance(raw, int) else tuple(raw)
        if len(step) != len(moduli):
            raise InvalidInputError(f"Step {raw} does not match moduli {moduli}")
        g = tuple(c % m for c, m in zip(step, moduli))
        minus = tuple(-c % m for c, m in zip(g, moduli))
        if not any(g) or g in seen or minus in seen:
            raise InvalidInputError(f"Step {raw} is zero or repeats another generator")
        seen.update({g, minus})
        plus_perm = tuple(encode([a + b for a, b in zip(decode(x), g)]) for x in range(points))
        flagged = index in long
        if minus == g:
            generators.append(Generator(label("+", g), plus_perm, label("+", g), flagged))
            continue
        minus_perm = tuple(encode([a + b for a, b in zip(decode(x), minus)]) for x in range(points))
        generators.append(Generator(label("+", g), plus_perm, label("-", g), flagged))
        generators.append(Generator(label("-", g), minus_perm, label("+", g), flagged))
    return SchreierAction(points, tuple(generators))


class GeneratorModel(BaseModel):
    name: str = Field(description="Generator name, unique within the action.")
    perm: list[int] = Field(description="Image of every point.")
    inverse: str = Field(description="Name of the inverse generator (itself for involutions).")
    long: bool = Field(default=False, description="Treat as a long generator when coloring.")


class ActionModel(BaseModel):
    points: int = Field(ge=0, description="Number of points acted on.")
    generators: list[GeneratorModel] = Field(description="Symmetric generating set.")

    @classmethod
    def from_action(cls, action: SchreierAction) -> "ActionModel":
        return cls(
            points=action.points,
            generators=[
                GeneratorModel(name=g.name, perm=list(g.perm), inverse=g.inverse, long=g.long)
                for g in action.generators
            ],
        )

    def to_action(self) -> SchreierAction:
        return SchreierAction(
            self.points, tuple(Generator(g.name, tuple(g.perm), g.inverse, g.long) for g in self.generators)
        )


def load_action(path: str | Path) -> SchreierAction:
    try:
        return ActionModel.model_validate_json(Path(path).read_text()).to_action()
    except ValueError as e:
        raise InvalidInputError(f"Invalid action file {path}: {e}") from e


def dump_action(action: SchreierAction, path: str | Path) -> None:
    Path(path).write_text(ActionModel.from_action(action).model_dump_json(indent=DEFAULT_REPORT_INDENT))

"""
Constraint satisfaction problems with extensional constraints.

A constraint is an ordered domain of variable ids plus the set of forbidden
total assignments of that domain, written as color tuples aligned with the
domain order. Lazy constraints keep a failure predicate instead and enumerate
only what a caller asks for.
"""
import itertools
import logging
import threading
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Union

from lllocal.config import app_cfg
from lllocal.exceptions import BudgetExceededError, InvalidInputError

logger = logging.getLogger(__name__)

Assignment = tuple[int, ...]
FailurePredicate = Callable[[Assignment], bool]


class PartialColoring(Mapping):
    """Partial map from variable ids to colors in 0..q-1."""

    __slots__ = ("q", "_values")

    def __init__(self, q: int, values: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        if q < 1:
            raise InvalidInputError(f"Color count must be positive, got {q}")
        self.q = q
        self._values: dict[int, int] = dict(values or {})
        for v, color in self._values.items():
            if not 0 <= color < q:
                raise InvalidInputError(f"Color {color} at variable {v} is outside 0..{q - 1}")

    @classmethod
    def constant(cls, q: int, ids: Iterable[int], color: int = 0) -> "PartialColoring":
        return cls(q, {v: color for v in ids})

    def __getitem__(self, v: int) -> int:
        return self._values[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def domain(self) -> tuple[int, ...]:
        return tuple(sorted(self._values))

    def restrict(self, ids: Iterable[int]) -> "PartialColoring":
        keep = set(ids)
        return PartialColoring(self.q, {v: c for v, c in self._values.items() if v in keep})

    def union(self, other: "PartialColoring") -> "PartialColoring":
        """Disjoint union f ⊔ f'."""
        if other.q != self.q:
            raise InvalidInputError(f"Cannot join colorings with q={self.q} and q={other.q}")
        overlap = self._values.keys() & other._values.keys()
        if overlap:
            raise InvalidInputError(f"Colorings overlap on {sorted(overlap)[:5]}")
        return PartialColoring(self.q, {**self._values, **other._values})

    def is_total_on(self, ids: Iterable[int]) -> bool:
        return all(v in self._values for v in ids)

    def as_list(self, universe: Iterable[int]) -> list[int]:
        return [self._values[v] for v in universe]

    def __repr__(self) -> str:
        return f"PartialColoring(q={self.q}, {self._values})"


def _check_domain(domain: tuple[int, ...]) -> None:
    if len(set(domain)) != len(domain):
        raise InvalidInputError(f"Constraint domain has repeated variables: {domain}")


@dataclass(frozen=True)
class Constraint:
    """Extensional constraint: forbidden total assignments of an ordered domain."""

    domain: tuple[int, ...]
    forbidden: frozenset[Assignment]
    q: int

    lazy = False

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "forbidden", frozenset(tuple(t) for t in self.forbidden))
        if self.q < 1:
            raise InvalidInputError(f"Color count must be positive, got {self.q}")
        _check_domain(self.domain)
        width = len(self.domain)
        for t in self.forbidden:
            if len(t) != width or any(not 0 <= c < self.q for c in t):
                raise InvalidInputError(f"Forbidden tuple {t} does not fit domain {self.domain} with q={self.q}")

    @classmethod
    def always_violated(cls, q: int) -> "Constraint":
        return cls((), frozenset({()}), q)

    @classmethod
    def always_satisfied(cls, q: int) -> "Constraint":
        return cls((), frozenset(), q)

    @classmethod
    def from_predicate(
        cls,
        domain: Iterable[int],
        q: int,
        predicate: FailurePredicate,
        cap: int | None = None,
    ) -> "Constraint":
        """Materialize the assignments for which `predicate` reports a violation."""
        domain = tuple(domain)
        limit = app_cfg.ENUMERATION_CAP if cap is None else cap
        size = q ** len(domain)
        if size > limit:
            raise BudgetExceededError(
                f"Enumerating {q}^{len(domain)} assignments exceeds the cap of {limit}",
                details={"domain_size": len(domain), "q": q, "cap": limit},
            )
        return cls(domain, frozenset(t for t in itertools.product(range(q), repeat=len(domain)) if predicate(t)), q)

    @property
    def arity(self) -> int:
        return len(self.domain)

    @property
    def is_always_violated(self) -> bool:
        return not self.domain and () in self.forbidden

    @property
    def is_always_satisfied(self) -> bool:
        return not self.forbidden

    def contains(self, values: Assignment) -> bool:
        return values in self.forbidden

    def forbidden_count(self) -> int:
        return len(self.forbidden)

    def iter_forbidden(self) -> Iterator[Assignment]:
        return iter(self.forbidden)

    def materialize(self, cap: int | None = None) -> "Constraint":
        return self

    def normalized(self) -> "Constraint":
        """Same constraint with the domain sorted and tuples permuted to match."""
        order = sorted(range(len(self.domain)), key=lambda i: self.domain[i])
        return Constraint(
            tuple(self.domain[i] for i in order),
            frozenset(tuple(t[i] for i in order) for t in self.forbidden),
            self.q,
        )


class LazyConstraint:
    """
    Constraint given by a failure predicate over assignments of its domain.

    Predicate answers and forbidden counts are memoized; nothing is enumerated
    until a caller needs it.
    """

    lazy = True

    def __init__(self, domain: Iterable[int], q: int, predicate: FailurePredicate):
        self.domain = tuple(domain)
        self.q = q
        _check_domain(self.domain)
        self._predicate = predicate
        self._memo: dict[Assignment, bool] = {}
        self._count: int | None = None
        self._lock = threading.Lock()

    @property
    def arity(self) -> int:
        return len(self.domain)

    @property
    def is_always_violated(self) -> bool:
        return not self.domain and self.contains(())

    @property
    def is_always_satisfied(self) -> bool:
        return self.forbidden_count() == 0

    def contains(self, values: Assignment) -> bool:
        cached = self._memo.get(values)
        if cached is None:
            cached = bool(self._predicate(values))
            with self._lock:
                self._memo[values] = cached
        return cached

    def iter_forbidden(self) -> Iterator[Assignment]:
        for t in itertools.product(range(self.q), repeat=len(self.domain)):
            if self.contains(t):
                yield t

    def forbidden_count(self) -> int:
        if self._count is None:
            self._count = sum(1 for _ in self.iter_forbidden())
        return self._count

    def materialize(self, cap: int | None = None) -> Constraint:
        return Constraint.from_predicate(self.domain, self.q, self.contains, cap)

    def normalized(self) -> Constraint:
        return self.materialize().normalized()

    def __repr__(self) -> str:
        return f"LazyConstraint(domain={self.domain}, q={self.q})"


AnyConstraint = Union[Constraint, LazyConstraint]


@dataclass(frozen=True)
class CSP:
    """A multiset of constraints over a shared variable universe and color count."""

    universe: tuple[int, ...]
    q: int
    constraints: tuple[AnyConstraint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(sorted(set(self.universe))))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.q < 1:
            raise InvalidInputError(f"Color count must be positive, got {self.q}")
        members = set(self.universe)
        for i, B in enumerate(self.constraints):
            if B.q != self.q:
                raise InvalidInputError(f"Constraint {i} has q={B.q}, CSP has q={self.q}")
            outside = [v for v in B.domain if v not in members]
            if outside:
                raise InvalidInputError(f"Constraint {i} uses variables outside the universe: {outside}")

    @classmethod
    def over_range(cls, n: int, q: int, constraints: Iterable[AnyConstraint]) -> "CSP":
        return cls(tuple(range(n)), q, tuple(constraints))

    def __len__(self) -> int:
        return len(self.constraints)

    def max_domain_size(self) -> int:
        return max((B.arity for B in self.constraints), default=0)

    def is_bounded(self, k: int | None = None) -> bool:
        """Every domain has at most k variables (any finite bound when k is omitted)."""
        return k is None or self.max_domain_size() <= k

    def materialized(self, cap: int | None = None) -> "CSP":
        return CSP(self.universe, self.q, tuple(B.materialize(cap) for B in self.constraints))

"""Roman and double Roman dominating functions: verification and exact minima.

A double Roman dominating function (DRDF) labels vertices with 0..3 so that
every 0-vertex has two neighbours labelled 2 or one labelled 3, and every
1-vertex has a neighbour labelled 2 or 3. A Roman dominating function (RDF)
labels with 0..2 so that every 0-vertex has a neighbour labelled 2.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels
from .graph import Graph


class Parameter(str, enum.Enum):
    GAMMA_R = "gamma_r"
    GAMMA_DR = "gamma_dr"

    @property
    def kind(self) -> int:
        return 1 if self is Parameter.GAMMA_DR else 0

    @property
    def alphabet(self) -> tuple[int, ...]:
        return (0, 1, 2, 3) if self is Parameter.GAMMA_DR else (0, 1, 2)

    @classmethod
    def parse(cls, name: str) -> "Parameter":
        aliases = {
            "roman": cls.GAMMA_R, "rdf": cls.GAMMA_R, "gamma_r": cls.GAMMA_R,
            "double-roman": cls.GAMMA_DR, "drdf": cls.GAMMA_DR, "gamma_dr": cls.GAMMA_DR,
        }
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ValueError(f"unknown parameter {name!r}") from None


class AssignmentError(ValueError):
    pass


class ShapeError(AssignmentError):
    pass


class BudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class Assignment:
    values: tuple[int, ...]
    parameter: Parameter = Parameter.GAMMA_DR

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        allowed = self.parameter.alphabet
        for v, x in enumerate(self.values):
            if x not in allowed:
                raise AssignmentError(f"vertex {v}: value {x} not allowed for {self.parameter.value}")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    @property
    def weight(self) -> int:
        return sum(self.values)

    def part(self, i: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.values) if x == i)

    @property
    def partition(self) -> tuple[frozenset[int], ...]:
        """(V0, V1, V2, V3)."""
        return tuple(self.part(i) for i in range(4))

    @classmethod
    def from_partition(cls, n: int, parts: Sequence[Iterable[int]], parameter=Parameter.GAMMA_DR) -> "Assignment":
        values = [None] * n
        for i, part in enumerate(parts):
            for v in part:
                if values[v] is not None:
                    raise AssignmentError(f"vertex {v} in more than one class")
                values[v] = i
        missing = [v for v, x in enumerate(values) if x is None]
        if missing:
            raise AssignmentError(f"vertices {missing} in no class")
        return cls(tuple(values), parameter)


def weight(a: Assignment | Sequence[int]) -> int:
    return sum(a.values) if isinstance(a, Assignment) else sum(a)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a labeling check. ``vertex`` is the lowest-index violator."""

    ok: bool
    vertex: int | None = None
    condition: str | None = None
    violations: tuple[tuple[int, str], ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return f"fail vertex={self.vertex} condition=({self.condition})"


def _verdict(bad: list[tuple[int, str]]) -> Verdict:
    if not bad:
        return Verdict(True)
    v, cond = bad[0]
    return Verdict(False, v, cond, tuple(bad))


def _values(g: Graph, a) -> tuple[int, ...]:
    values = a.values if isinstance(a, Assignment) else tuple(a)
    if len(values) != g.n:
        raise ShapeError(f"assignment has {len(values)} entries, graph has {g.n} vertices")
    return values


def is_drdf(g: Graph, a) -> Verdict:
    """Check both labeling conditions; reports the first violating vertex.

    Condition "i" concerns vertices labelled 0, condition "ii" vertices labelled 1.
    """
    values = _values(g, a)
    for v, x in enumerate(values):
        if x not in (0, 1, 2, 3):
            raise AssignmentError(f"vertex {v}: value {x} outside 0..3")
    bad = []
    for v, x in enumerate(values):
        if x == 0:
            labels = [values[u] for u in g.adjacency[v]]
            if 3 not in labels and labels.count(2) < 2:
                bad.append((v, "i"))
        elif x == 1:
            if not any(values[u] >= 2 for u in g.adjacency[v]):
                bad.append((v, "ii"))
    return _verdict(bad)


def is_rdf(g: Graph, a) -> Verdict:
    values = _values(g, a)
    for v, x in enumerate(values):
        if x not in (0, 1, 2):
            raise AssignmentError(f"vertex {v}: value {x} not allowed in a Roman labeling")
    bad = [(v, "rdf") for v, x in enumerate(values) if x == 0 and not any(values[u] == 2 for u in g.adjacency[v])]
    return _verdict(bad)


def verify(g: Graph, a, parameter: Parameter) -> Verdict:
    return is_drdf(g, a) if parameter is Parameter.GAMMA_DR else is_rdf(g, a)


@dataclass(frozen=True)
class SolveResult:
    parameter: Parameter
    weight: int
    witness: Assignment
    optimal: bool
    nodes: int = 0
    elapsed: float = 0.0
    backend: str = field(default="", compare=False)

    def to_text(self) -> str:
        head = f"parameter={self.parameter.value} weight={self.weight} optimal={str(self.optimal).lower()}"
        return head + "\n" + emit_assignment(self.witness)


# search


def _greedy(g: Graph, parameter: Parameter) -> list[int]:
    """Feasible labeling from repeatedly placing the top value where it covers most."""
    top = 3 if parameter is Parameter.GAMMA_DR else 2
    values = [0] * g.n
    open_ = set(range(g.n))
    while open_:
        v = max(range(g.n), key=lambda u: (len(g.closed_neighbors(u) & open_), -u))
        values[v] = top
        open_ -= g.closed_neighbors(v)
    return values


def search_order(g: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _exact(g, parameter, max_nodes, max_seconds, backend) -> SolveResult:
    impl = _kernels.get(backend)
    indptr, indices = g.csr
    start = time.perf_counter()
    incumbent = _greedy(g, parameter)
    w, values, nodes, complete = impl.bnb_min_weight(
        indptr,
        indices,
        search_order(g),
        parameter.kind,
        incumbent,
        -1 if max_nodes is None else int(max_nodes),
        -1.0 if max_seconds is None else float(max_seconds),
    )
    elapsed = time.perf_counter() - start
    witness = Assignment(values, parameter)
    return SolveResult(parameter, int(w), witness, bool(complete), int(nodes), elapsed, backend or _kernels.DEFAULT_BACKEND)


def exact_gamma_dr(g: Graph, max_nodes: int | None = None, max_seconds: float | None = None, backend: str | None = None) -> SolveResult:
    """Minimum DRDF weight by branch and bound over labels {3, 2, 0}.

    Label 1 is never needed in a minimum DRDF, so the witness has no 1s.
    With a budget, ``optimal`` is False if the search was cut short.
    """
    return _exact(g, Parameter.GAMMA_DR, max_nodes, max_seconds, backend)


def exact_gamma_r(g: Graph, max_nodes: int | None = None, max_seconds: float | None = None, backend: str | None = None) -> SolveResult:
    return _exact(g, Parameter.GAMMA_R, max_nodes, max_seconds, backend)


def exact(g: Graph, parameter: Parameter, **kw) -> SolveResult:
    fn = exact_gamma_dr if parameter is Parameter.GAMMA_DR else exact_gamma_r
    return fn(g, **kw)


BRUTE_FORCE_CAP_4 = 13
BRUTE_FORCE_CAP_3 = 16


def brute_force(g: Graph, parameter: Parameter, *, forbid_one: bool = False, cap: int | None = None, backend: str | None = None) -> SolveResult:
    """Exhaustive minimum over every labeling; an oracle for small graphs.

    ``forbid_one`` drops label 1 from the alphabet. Refuses graphs above the
    cap (13 vertices for 4-letter sweeps, 16 for 3-letter ones).
    """
    alphabet = tuple(x for x in parameter.alphabet if not (forbid_one and x == 1))
    if cap is None:
        cap = BRUTE_FORCE_CAP_4 if len(alphabet) == 4 else BRUTE_FORCE_CAP_3
    if g.n > cap:
        raise BudgetError(f"brute force refused: n={g.n} exceeds cap {cap} for a {len(alphabet)}-letter sweep")
    impl = _kernels.get(backend)
    start = time.perf_counter()
    w, values, checked = impl.enumerate_min_weight(g.n, g.masks, parameter.kind, alphabet)
    elapsed = time.perf_counter() - start
    if w < 0:  # cannot happen: labelling every vertex 2 is always valid
        raise AssertionError("no valid labeling found")
    return SolveResult(parameter, int(w), Assignment(values, parameter), True, int(checked), elapsed, backend or _kernels.DEFAULT_BACKEND)


# assignment files


def parse_assignment(text: str, parameter: Parameter = Parameter.GAMMA_DR) -> Assignment:
    pairs: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        # solver output carries a header line before the witness
        if "=" in line:
            continue
        try:
            idx, val = (int(p) for p in line.split())
        except ValueError:
            raise AssignmentError(f"line {lineno}: expected 'index value', got {line!r}") from None
        if idx in pairs:
            raise AssignmentError(f"line {lineno}: vertex {idx} listed twice")
        pairs[idx] = val
    n = len(pairs)
    if sorted(pairs) != list(range(n)):
        raise AssignmentError("vertex indices must be exactly 0..n-1")
    return Assignment(tuple(pairs[i] for i in range(n)), parameter)


def emit_assignment(a: Assignment) -> str:
    return "\n".join(f"{v} {x}" for v, x in enumerate(a.values))


def minimum_labelings(g: Graph, parameter: Parameter = Parameter.GAMMA_DR, *, forbid_one: bool = True, cap: int = 10):
    """Every minimum-weight labeling, by enumeration. Small graphs only."""
    from itertools import product

    if g.n > cap:
        raise BudgetError(f"refusing to enumerate labelings of {g.n} > {cap} vertices")
    alphabet = [x for x in parameter.alphabet if not (forbid_one and x == 1)]
    target = brute_force(g, parameter, forbid_one=forbid_one).weight
    check = is_drdf if parameter is Parameter.GAMMA_DR else is_rdf
    out = []
    for values in product(alphabet, repeat=g.n):
        if sum(values) == target and check(g, values):
            out.append(Assignment(values, parameter))
    return out

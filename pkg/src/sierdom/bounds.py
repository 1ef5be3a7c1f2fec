"""Lifting a double Roman labeling of G to S(G, t), and the resulting bounds.

Given a V1-free DRDF ``f`` on G and t >= 2, three labelings of S(G, t):

``g``   copies f into every copy of G: ``g(w x) = f(x)``.
``g1``  as ``g``, but every word ``w u u`` with ``f(u) = 3`` drops to 2.
``g2``  as ``g1``, but ``w v v`` drops to 0 when v has a neighbour u with
        ``f(u) = 3`` and ``f(v) = 3`` (v is non-isolated among the 3-vertices).

Their weights are ``n^(t-1) w``, ``n^(t-2) (n w - |V3|)`` and
``n^(t-2) (n w - |V3| - 2 |D3|)`` where w is the weight of f.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .domination import Assignment, Parameter, exact_gamma_dr, exact_gamma_r, is_drdf
from .graph import Graph, GraphError, independence_number
from .sierpinski import SierpinskiGraph, sierpinski

STAGES = ("g", "g1", "g2")


class DepthError(GraphError):
    pass


class LiftPreconditionError(ValueError):
    pass


def _check_depth(t: int) -> None:
    if t < 2:
        raise DepthError(f"t must be >= 2 (got {t}); S(G,1) is G itself")


def d3_set(g: Graph, f: Assignment) -> frozenset[int]:
    v3 = f.part(3)
    return frozenset(v for v in v3 if g.adjacency[v] & v3)


@dataclass(frozen=True)
class LiftResult:
    stage: str
    assignment: Assignment
    predicted_weight: int
    sizes: dict = field(default_factory=dict)
    sgraph: SierpinskiGraph | None = field(default=None, repr=False, compare=False)

    @property
    def weight(self) -> int:
        return self.assignment.weight


def _check_f(base: Graph, f: Assignment) -> None:
    if len(f) != base.n:
        raise LiftPreconditionError(f"labeling has {len(f)} entries, base has {base.n} vertices")
    if f.part(1):
        raise LiftPreconditionError("labeling must not use the value 1")
    verdict = is_drdf(base, f)
    if not verdict:
        raise LiftPreconditionError(f"not a double Roman labeling of the base: {verdict.describe()}")


def _diag_indices(n: int, t: int, letters) -> np.ndarray:
    """Indices of words ``w u u`` for every prefix w of length t-2 and u in letters."""
    letters = np.asarray(sorted(letters), dtype=np.int64)
    prefixes = np.arange(n ** (t - 2), dtype=np.int64)[:, None] * n * n
    return (prefixes + (letters * n + letters)[None, :]).ravel()


def lift(base: Graph, t: int, f: Assignment, stage: str, sgraph: SierpinskiGraph | None = None) -> LiftResult:
    if stage not in STAGES:
        raise ValueError(f"stage must be one of {STAGES}, got {stage!r}")
    _check_depth(t)
    _check_f(base, f)
    n = base.n
    fv = np.asarray(f.values, dtype=np.int8)
    values = np.tile(fv, n ** (t - 1))
    v3 = f.part(3)
    d3 = d3_set(base, f)
    w = f.weight
    sizes = {"v3": len(v3), "d3": len(d3), "s3p": 0, "s3pp": 0}
    if stage == "g":
        predicted = n ** (t - 1) * w
    else:
        s3p = _diag_indices(n, t, v3)
        values[s3p] = 2
        sizes["s3p"] = len(s3p)
        predicted = n ** (t - 2) * (n * w - len(v3))
        if stage == "g2":
            s3pp = _diag_indices(n, t, d3)
            values[s3pp] = 0
            sizes["s3pp"] = len(s3pp)
            predicted = n ** (t - 2) * (n * w - len(v3) - 2 * len(d3))
    return LiftResult(stage, Assignment(values.tolist(), Parameter.GAMMA_DR), predicted, sizes, sgraph)


def lift_step1(base: Graph, t: int, f: Assignment) -> LiftResult:
    return lift(base, t, f, "g")


def lift_step2(base: Graph, t: int, f: Assignment) -> LiftResult:
    return lift(base, t, f, "g1")


def lift_step3(base: Graph, t: int, f: Assignment) -> LiftResult:
    return lift(base, t, f, "g2")


def lower_bound_dr(base: Graph, t: int, gamma_base: int | None = None) -> int:
    """``n^(t-2) * alpha(G) * gamma_dR(G)``."""
    _check_depth(t)
    alpha, _ = independence_number(base)
    if gamma_base is None:
        gamma_base = exact_gamma_dr(base).weight
    return base.n ** (t - 2) * alpha * gamma_base


def lower_bound_r(base: Graph, t: int, gamma_base: int | None = None) -> int:
    _check_depth(t)
    alpha, _ = independence_number(base)
    if gamma_base is None:
        gamma_base = exact_gamma_r(base).weight
    return base.n ** (t - 2) * alpha * gamma_base


def upper_bound_dr_theorem(base: Graph, t: int, f: Assignment, gamma_base: int | None = None) -> int:
    """``n^(t-2) (n gamma_dR(G) - |V3| - |D3|)`` for a minimum-weight, V1-free f."""
    _check_depth(t)
    _check_f(base, f)
    if gamma_base is None:
        gamma_base = exact_gamma_dr(base).weight
    if f.weight != gamma_base:
        raise LiftPreconditionError(f"labeling weight {f.weight} is not the minimum {gamma_base}")
    n = base.n
    return n ** (t - 2) * (n * gamma_base - len(f.part(3)) - len(d3_set(base, f)))


def ram_upper_bound_r(n: int, t: int) -> Fraction:
    """Roman upper bound for S(K_n, t); parity of t picks the branch."""
    if n < 2 or t < 1:
        raise ValueError(f"need n >= 2 and t >= 1, got n={n}, t={t}")
    if t % 2 == 0:
        return Fraction(2 * n**t + n - 1, n + 1)
    return Fraction(2 * (n**t + 1), n + 1)


@dataclass
class BoundsReport:
    n: int
    t: int
    alpha: int
    gamma_base: int
    v3: int
    d3: int
    lower: int
    lift_weights: dict
    lift_valid: dict
    theorem_upper: int
    exact: int | None = None
    exact_optimal: bool | None = None
    verdicts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.verdicts)

    @property
    def verdict(self) -> str:
        if not self.ok:
            return "fail"
        return "pass" if self.exact is not None else "inconclusive"

    def to_text(self) -> str:
        rows = [
            ("n", self.n),
            ("t", self.t),
            ("alpha", self.alpha),
            ("gamma_dr_base", self.gamma_base),
            ("v3", self.v3),
            ("d3", self.d3),
            ("lower", self.lower),
            ("w_g", self.lift_weights["g"]),
            ("w_g1", self.lift_weights["g1"]),
            ("w_g2", self.lift_weights["g2"]),
            ("upper_theorem", self.theorem_upper),
            ("exact", "none" if self.exact is None else self.exact),
        ]
        rows += [(f"check[{name}]", "pass" if ok else "fail") for name, ok in self.verdicts]
        rows.append(("verdict", self.verdict))
        return "\n".join(f"{k}={v}" for k, v in rows)


def sandwich_report(
    base: Graph,
    t: int,
    solve_exact: bool = True,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
) -> BoundsReport:
    _check_depth(t)
    base_sol = exact_gamma_dr(base)
    f = base_sol.witness
    gamma = base_sol.weight
    alpha, _ = independence_number(base)
    s = sierpinski(base, t)
    lifts = {st: lift(base, t, f, st, s) for st in STAGES}
    weights = {st: r.weight for st, r in lifts.items()}
    valid = {st: bool(is_drdf(s.graph, r.assignment)) for st, r in lifts.items()}
    lower = base.n ** (t - 2) * alpha * gamma
    upper = upper_bound_dr_theorem(base, t, f, gamma)
    report = BoundsReport(
        base.n, t, alpha, gamma, len(f.part(3)), len(d3_set(base, f)),
        lower, weights, valid, upper,
    )
    checks = [(f"{st}_is_drdf", valid[st]) for st in STAGES]
    checks += [(f"{st}_weight_closed_form", lifts[st].weight == lifts[st].predicted_weight) for st in STAGES]
    checks += [
        ("w_g2<=w_g1", weights["g2"] <= weights["g1"]),
        ("w_g1<=w_g", weights["g1"] <= weights["g"]),
        ("w_g2<=upper_theorem", weights["g2"] <= upper),
        ("lower<=w_g2", lower <= weights["g2"]),
    ]
    if solve_exact:
        sol = exact_gamma_dr(s.graph, max_nodes=max_nodes, max_seconds=max_seconds)
        report.exact_optimal = sol.optimal
        if sol.optimal:
            report.exact = sol.weight
            checks += [
                ("lower<=exact", lower <= sol.weight),
                ("exact<=w_g2", sol.weight <= weights["g2"]),
                ("exact<=upper_theorem", sol.weight <= upper),
            ]
    report.verdicts = checks
    return report

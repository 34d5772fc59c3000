"""Catalog of machine-checkable claims about tree invariants.

Each claim quantifies over exhaustively enumerated free-tree universes and is
either asserted (a violation would falsify the underlying theorem and makes
the report fail) or scanned (open questions: findings are reported, never
asserted).  Claim evaluation is a pure fold over the tree stream, so a
universe can be striped across worker processes and the partial states merged
associatively; reports are identical for any worker count.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable

from . import constructions
from .enumeration import (
    _layout_leaf_count,
    _layout_to_tree,
    canonical_layouts,
    feasible_internal_counts,
    resolve_max_order,
)
from .errors import InvalidParameters, IoFailure, UnknownClaim, UnknownStatistic
from .invariants import profile_fast, summarize
from .tree import Tree, canonical_code, from_edge_list, leaves

WITNESS_CAP = 5
_CODE_CAP = 64  # argmax/argmin code sets are truncated past this many classes


# -- report types ---------------------------------------------------------------


@dataclass
class TheoremReport:
    """Outcome of one claim over one universe, JSON-friendly throughout."""

    claim: str
    universe: dict
    verdict: str  # "holds" | "fails" | "scan"
    witnesses: list
    values: dict
    wall_time: float

    def to_json_text(self) -> str:
        payload = {
            "claim": self.claim,
            "universe": self.universe,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "values": self.values,
            "wall_time": self.wall_time,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_text(cls, text: str) -> "TheoremReport":
        data = json.loads(text)
        return cls(
            claim=data["claim"],
            universe=data["universe"],
            verdict=data["verdict"],
            witnesses=data["witnesses"],
            values=data["values"],
            wall_time=data["wall_time"],
        )

    def to_csv_text(self) -> str:
        return _rows_to_csv(self.values.get("per_n", []))


@dataclass
class SearchResult:
    """Extremal value of a statistic over a universe, with the optimizers."""

    statistic: str
    direction: str
    n: int
    k: int | None
    universe_count: int
    optimum: int
    optimizer_codes: list
    optimizers: list
    wall_time: float

    def to_json_text(self) -> str:
        payload = {
            "statistic": self.statistic,
            "direction": self.direction,
            "n": self.n,
            "k": self.k,
            "universe_count": self.universe_count,
            "optimum": self.optimum,
            "optimizer_codes": self.optimizer_codes,
            "optimizers": self.optimizers,
            "wall_time": self.wall_time,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_text(cls, text: str) -> "SearchResult":
        data = json.loads(text)
        return cls(**data)

    def to_csv_text(self) -> str:
        row = {
            "n": self.n,
            "universe_count": self.universe_count,
            "statistic_max": self.optimum,
            "statistic_argmax_code": _format_code(self.optimizer_codes[0])
            if self.optimizer_codes
            else "",
        }
        return _rows_to_csv([row])


_CSV_COLUMNS = [
    "n",
    "universe_count",
    "statistic_max",
    "statistic_argmax_code",
    "path_value",
    "exceeds_path",
]


def _format_code(code) -> str:
    return " ".join(str(x) for x in code)


def _rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for row in rows:
        codes = row.get("argmax_codes") or []
        writer.writerow(
            [
                row.get("n", ""),
                row.get("count", row.get("universe_count", "")),
                row.get("optimum", row.get("statistic_max", "")),
                _format_code(codes[0]) if codes else row.get("statistic_argmax_code", ""),
                row.get("path_value", ""),
                row.get("exceeds_path", ""),
            ]
        )
    return buf.getvalue()


# -- statistics ------------------------------------------------------------------

_STAT_FUNCS: dict[str, Callable] = {
    "Uni": lambda s: s.uni_sum,
    "Ecc": lambda s: s.ecc_sum,
    "Delta": lambda s: s.delta_sum,
    "LD": lambda s: s.ld,
    "Ecc-LD": lambda s: s.ecc_sum - s.ld,
    "delta_min": lambda s: s.delta_min,
    "r-rprime": lambda s: s.r - s.r_prime,
}

_STAT_ALIASES = {
    "uni": "Uni",
    "ecc": "Ecc",
    "delta": "Delta",
    "Δ": "Delta",
    "ld": "LD",
    "ecc-ld": "Ecc-LD",
    "Ecc−LD": "Ecc-LD",
    "δ_min": "delta_min",
    "r-rprime": "r-rprime",
    "r−r′": "r-rprime",
}


def resolve_statistic(name: str) -> str:
    """Canonical statistic name, accepting the unicode spellings as aliases."""
    if name in _STAT_FUNCS:
        return name
    alias = _STAT_ALIASES.get(name) or _STAT_ALIASES.get(name.lower())
    if alias is None:
        raise UnknownStatistic(
            f"unknown statistic {name!r}; pick from {sorted(_STAT_FUNCS)}"
        )
    return alias


# -- claim catalog ----------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """One checkable statement: stable id, assert-or-scan mode, order floor."""

    id: str
    mode: str  # "assert" | "scan"
    description: str
    min_n: int = 2
    k_filtered: bool = False
    fixed: bool = False


def _is_star(t: Tree) -> bool:
    return t.n <= 2 or max(len(nbrs) for nbrs in t.adj) == t.n - 1


def _is_path(t: Tree) -> bool:
    return max(len(nbrs) for nbrs in t.adj) <= 2


def _every_internal_next_to_leaf(t: Tree) -> bool:
    leaf_set = leaves(t)
    return all(
        any(nb in leaf_set for nb in t.adj[v])
        for v in range(t.n)
        if v not in leaf_set
    )


def _check_ld_bounds(n, k, t, p, s):
    low = constructions.formula_ld_star(n)
    high = constructions.formula_ld_path(n)
    bad = []
    if not low <= s.ld <= high:
        bad.append(f"LD={s.ld} outside [{low}, {high}]")
    if (s.ld == low) != _is_star(t):
        bad.append("LD hits the star value iff the tree is a star: violated")
    if (s.ld == high) != _is_path(t):
        bad.append("LD hits the path value iff the tree is a path: violated")
    return bad, []


def _check_r_ge_rprime(n, k, t, p, s):
    if s.r < s.r_prime:
        return [f"r={s.r} < r'={s.r_prime}"], []
    return [], []


def _check_ecc_ld_gap(n, k, t, p, s):
    bad = []
    if s.ecc_sum < s.ld + 2:
        bad.append(f"Ecc={s.ecc_sum} < LD+2={s.ld + 2}")
    if (s.ecc_sum == s.ld + 2) != _is_star(t):
        bad.append("Ecc == LD+2 iff star: violated")
    return bad, []


def _check_delta_sum_lower(n, k, t, p, s):
    bound = 2 * (n - 1)
    if s.delta_sum < bound:
        return [f"Delta={s.delta_sum} < {bound}"], []
    if s.delta_sum == bound and not _is_star(t):
        # The bound is proven sharp for stars; other achievers are only reported.
        return [], ["non_star_equality"]
    return [], []


def _check_delta_max_at_ends(n, k, t, p, s):
    dmax = max(p.delta)
    emax = max(p.ecc)
    for v in range(t.n):
        if (p.delta[v] == dmax) != (p.ecc[v] == emax):
            return [f"vertex {v}: max-delta set differs from max-ecc set"], []
    return [], []


def _check_center_delta(n, k, t, p, s):
    if len(s.center) == 1:
        c = s.center[0]
        if p.delta[c] != s.delta_min:
            return [f"single center {c}: delta={p.delta[c]} != min={s.delta_min}"], []
    else:
        for c in s.center:
            if p.delta[c] > s.delta_min + 1:
                return [f"center {c}: delta={p.delta[c]} > min+1={s.delta_min + 1}"], []
    return [], []


def _check_uni_min_characterization(n, k, t, p, s):
    if k is not None and k <= n // 2:
        if (s.uni_sum == k) != _every_internal_next_to_leaf(t):
            return ["Uni == k iff every internal vertex borders a leaf: violated"], []
    return [], []


def _scan_delta_at_center(n, k, t, p, s):
    findings = []
    center = set(s.center)
    argmin = [v for v in range(t.n) if p.delta[v] == s.delta_min]
    if not any(v in center for v in argmin):
        findings.append("no_center_achiever")
    if len(center) == 2 and any(v not in center for v in argmin):
        findings.append("bicentral_non_center_achiever")
    return [], findings


def _finalize_uni_path_max(n, k, state):
    failures = []
    expected = constructions.formula_uni_path(n)
    path_code = list(canonical_code(constructions.path(n)))
    if state["best"] != expected:
        failures.append(f"max Uni = {state['best']}, formula says {expected}")
    if state["best_codes"] != [path_code]:
        failures.append("argmax is not uniquely the path")
    return failures, {"optimum": state["best"], "expected": expected}


def _finalize_uni_star_min(n, k, state):
    failures = []
    star_code = list(canonical_code(constructions.star(n)))
    if state["best"] != 1:
        failures.append(f"min Uni = {state['best']}, expected 1")
    if state["best_codes"] != [star_code]:
        failures.append("argmin is not uniquely the star")
    return failures, {"optimum": state["best"], "expected": 1}


def _finalize_uni_k_max(n, k, state):
    failures = []
    expected = constructions.formula_uni_dumbbell_max(k)
    if state["best"] != expected:
        failures.append(f"max Uni = {state['best']}, formula says {expected}")
    pendants = n - k
    for a in range(1, pendants):
        t = constructions.dumbbell(k, a, pendants - a)
        value = summarize(t, profile_fast(t)).uni_sum
        if value != expected:
            failures.append(f"dumbbell(k={k}, a={a}, b={pendants - a}) has Uni={value}")
    return failures, {"optimum": state["best"], "expected": expected}


def _finalize_uni_k_min(n, k, state):
    failures = []
    expected = constructions.formula_uni_min(n, k)
    if state["best"] != expected:
        failures.append(f"min Uni = {state['best']}, expected {expected}")
    return failures, {"optimum": state["best"], "expected": expected}


def _finalize_delta_sum_lower(n, k, state):
    failures = []
    star_value = summarize(
        constructions.star(n), profile_fast(constructions.star(n))
    ).delta_sum if n >= 2 else 0
    if n >= 2 and star_value != 2 * (n - 1):
        failures.append(f"star has Delta={star_value}, expected {2 * (n - 1)}")
    return failures, {
        "expected": 2 * (n - 1),
        "non_star_equality": state["findings"].get("non_star_equality", 0),
    }


def _path_stat_value(n: int, stat: str) -> int:
    t = constructions.path(n)
    return _STAT_FUNCS[stat](summarize(t, profile_fast(t)))


def _finalize_scan_ecc_minus_ld(n, k, state):
    path_value = _path_stat_value(n, "Ecc-LD")
    return [], {
        "path_value": path_value,
        "exceeds_path": bool(state["best"] is not None and state["best"] > path_value),
        "optimum": state["best"],
    }


def _finalize_scan_delta_max(n, k, state):
    path_value = _path_stat_value(n, "Delta")
    path_code = list(canonical_code(constructions.path(n)))
    return [], {
        "path_value": path_value,
        "exceeds_path": bool(state["best"] is not None and state["best"] > path_value),
        "path_is_maximizer": path_code in state["best_codes"],
        "optimum": state["best"],
    }


@dataclass(frozen=True)
class _ClaimImpl:
    claim: Claim
    per_tree: Callable | None = None
    stat: str | None = None
    stat_dir: str = "max"
    finalize: Callable | None = None
    fixed_eval: Callable | None = None


def _eval_fixed_fig7():
    checks = []
    for label, tree, expected in (
        ("path_14", constructions.path(14), 98),
        ("spider_6_6_1", constructions.starlike([6, 6, 1]), 104),
    ):
        value = summarize(tree, profile_fast(tree)).delta_sum
        checks.append((label, tree, value, expected))
    values = {label: value for label, _, value, _ in checks}
    failures = [
        (tree, f"{label}: Delta={value}, expected {expected}")
        for label, tree, value, expected in checks
        if value != expected
    ]
    return failures, values, [tree for _, tree, _, _ in checks]


def example_tree_disjoint_middles() -> Tree:
    """Eight vertices: a 7-path 0..6 with a pendant 7 at vertex 3.

    Its center {3} and its max-uniformity set {2, 4} are disjoint, and the
    minimum ecc-uni gap 2 is attained at all of 2, 3 and 4.
    """
    edges = [(i, i + 1) for i in range(6)] + [(3, 7)]
    return from_edge_list(8, edges)


def example_tree_offset_middles() -> Tree:
    """Eleven vertices: a 10-path 0..9 with a pendant 10 at vertex 5.

    Bicentral with center {4, 5}, while the max-uniformity set is the single
    vertex {3}, off to one side of the center.
    """
    edges = [(i, i + 1) for i in range(9)] + [(5, 10)]
    return from_edge_list(11, edges)


def _eval_fixed_fig3():
    t = example_tree_disjoint_middles()
    p = profile_fast(t)
    s = summarize(t, p)
    failures = []
    if s.center != (3,):
        failures.append((t, f"center={list(s.center)}, expected [3]"))
    if s.c_uni != (2, 4):
        failures.append((t, f"c_uni={list(s.c_uni)}, expected [2, 4]"))
    if not (p.delta[2] == p.delta[3] == p.delta[4] == 2):
        failures.append((t, f"delta at 2,3,4 = {p.delta[2], p.delta[3], p.delta[4]}, expected all 2"))
    if s.delta_min != 2:
        failures.append((t, f"delta_min={s.delta_min}, expected 2"))
    values = {
        "center": list(s.center),
        "c_uni": list(s.c_uni),
        "delta_at_2_3_4": [p.delta[2], p.delta[3], p.delta[4]],
        "delta_min": s.delta_min,
    }
    return failures, values, [t]


def _eval_fixed_fig6():
    t = example_tree_offset_middles()
    s = summarize(t, profile_fast(t))
    failures = []
    if s.center != (4, 5):
        failures.append((t, f"center={list(s.center)}, expected [4, 5]"))
    if s.c_uni != (3,):
        failures.append((t, f"c_uni={list(s.c_uni)}, expected [3]"))
    if s.r != 5:
        failures.append((t, f"r={s.r}, expected 5"))
    if s.r_prime != 3:
        failures.append((t, f"r'={s.r_prime}, expected 3"))
    values = {
        "center": list(s.center),
        "c_uni": list(s.c_uni),
        "r": s.r,
        "r_prime": s.r_prime,
    }
    return failures, values, [t]


_CLAIM_IMPLS: dict[str, _ClaimImpl] = {}


def _register(impl: _ClaimImpl) -> None:
    _CLAIM_IMPLS[impl.claim.id] = impl


_register(_ClaimImpl(
    Claim("prop_2_1_ld_bounds", "assert",
          "Prop 2.1: the largest distance sum lies between the star and path "
          "values, with equality exactly at those trees", min_n=2),
    per_tree=_check_ld_bounds,
))
_register(_ClaimImpl(
    Claim("thm_2_2_uni_path_max", "assert",
          "Thm 2.2: the uniformity sum is maximized, uniquely, by the path",
          min_n=2),
    stat="Uni", stat_dir="max", finalize=_finalize_uni_path_max,
))
_register(_ClaimImpl(
    Claim("prop_2_3_uni_star_min", "assert",
          "Prop 2.3: the uniformity sum is at least 1, with equality only "
          "for the star", min_n=3),
    stat="Uni", stat_dir="min", finalize=_finalize_uni_star_min,
))
_register(_ClaimImpl(
    Claim("prop_2_4_uni_k_max", "assert",
          "Prop 2.4: with k internal vertices, max uniformity sum equals the "
          "dumbbell formula and every dumbbell split attains it",
          min_n=3, k_filtered=True),
    stat="Uni", stat_dir="max", finalize=_finalize_uni_k_max,
))
_register(_ClaimImpl(
    Claim("prop_2_5_uni_k_min", "assert",
          "Prop 2.5: with k internal vertices, min uniformity sum is k while "
          "k <= n/2 (iff every internal vertex borders a leaf), else the "
          "balanced spider value", min_n=3, k_filtered=True),
    per_tree=_check_uni_min_characterization,
    stat="Uni", stat_dir="min", finalize=_finalize_uni_k_min,
))
_register(_ClaimImpl(
    Claim("prop_3_r_ge_rprime", "assert",
          "Radius >= max nearest-leaf distance on every tree", min_n=1),
    per_tree=_check_r_ge_rprime,
))
_register(_ClaimImpl(
    Claim("prop_4_1_ecc_ld_gap", "assert",
          "Prop 4.1: Ecc >= LD + 2 for n >= 3, equality exactly at stars",
          min_n=3),
    per_tree=_check_ecc_ld_gap,
))
_register(_ClaimImpl(
    Claim("thm_4_3_delta_min", "assert",
          "Thm 4.3: the ecc-uni gap sum is at least 2(n-1), attained by the "
          "star (other achievers reported, not asserted)", min_n=1),
    per_tree=_check_delta_sum_lower, finalize=_finalize_delta_sum_lower,
))
_register(_ClaimImpl(
    Claim("prop_5_1_delta_max_at_ends", "assert",
          "Prop 5.1: the ecc-uni gap is maximized exactly at the vertices of "
          "maximum eccentricity", min_n=1),
    per_tree=_check_delta_max_at_ends,
))
_register(_ClaimImpl(
    Claim("thm_5_2_center_delta", "assert",
          "Thm 5.2: a single center vertex attains the minimum ecc-uni gap; "
          "each of two center vertices is within 1 of it", min_n=1),
    per_tree=_check_center_delta,
))
_register(_ClaimImpl(
    Claim("fig_7_values", "assert",
          "Figure 7: gap sums 98 for the 14-path vs 104 for the (6,6,1) spider",
          fixed=True),
    fixed_eval=_eval_fixed_fig7,
))
_register(_ClaimImpl(
    Claim("fig_3_middle_parts", "assert",
          "Figure 3 example: center {3} disjoint from max-uniformity set {2,4}; "
          "gap 2 at all three", fixed=True),
    fixed_eval=_eval_fixed_fig3,
))
_register(_ClaimImpl(
    Claim("fig_6_middle_parts", "assert",
          "Figure 6 example: center {4,5}, max-uniformity set {3}, r=5, r'=3",
          fixed=True),
    fixed_eval=_eval_fixed_fig6,
))
_register(_ClaimImpl(
    Claim("question_4_2_ecc_minus_ld", "scan",
          "Question 4.2: is Ecc - LD maximized by the path? (reported per n)",
          min_n=2),
    stat="Ecc-LD", stat_dir="max", finalize=_finalize_scan_ecc_minus_ld,
))
_register(_ClaimImpl(
    Claim("conj_6_delta_at_center", "scan",
          "Concluding question: is the minimum ecc-uni gap attained at a "
          "center vertex (and, for bicentral trees, only there)?", min_n=2),
    per_tree=_scan_delta_at_center,
))
_register(_ClaimImpl(
    Claim("delta_max_structure", "scan",
          "Open: which trees maximize the ecc-uni gap sum? (argmax reported "
          "per n, with the order where the path stops being optimal)", min_n=2),
    stat="Delta", stat_dir="max", finalize=_finalize_scan_delta_max,
))

CLAIMS: dict[str, Claim] = {cid: impl.claim for cid, impl in _CLAIM_IMPLS.items()}


def all_claim_ids() -> list[str]:
    return list(CLAIMS)


# -- fold machinery ----------------------------------------------------------------


def _new_state() -> dict:
    return {
        "count": 0,
        "violations": [],  # (index, edges, summary_dict, note)
        "findings": {},  # note -> count
        "finding_wit": [],  # (index, edges, summary_dict, note)
        "best": None,
        "best_codes": [],  # sorted list of code lists, truncated at _CODE_CAP
        "best_wit": [],  # (index, edges, summary_dict)
    }


def _better(a: int, b: int, direction: str) -> bool:
    return a > b if direction == "max" else a < b


def _witness_dict(t: Tree, summary) -> dict:
    return {"edges": [list(e) for e in t.edges()], "summary": summary.to_dict()}


@lru_cache(maxsize=32)
def _cached_layouts(n: int, cap: int) -> tuple[list[int], ...]:
    # Claims and k-strata repeatedly walk the same order's stream; one
    # materialized copy per process amortizes the successor chain.
    return tuple(canonical_layouts(n, cap))


def _striped_trees(
    n: int, k: int | None, worker: int, workers: int, max_order: int | None
):
    """(index, tree) pairs owned by one worker; skipped indices stay as cheap
    level sequences and are never materialized."""
    index = -1
    for layout in _cached_layouts(n, resolve_max_order(max_order)):
        if k is not None and len(layout) - _layout_leaf_count(layout) != k:
            continue
        index += 1
        if index % workers == worker:
            yield index, _layout_to_tree(layout)


def _fold_universe(
    claim_id: str,
    n: int,
    k: int | None,
    worker: int,
    workers: int,
    max_order: int | None,
    keep: int,
) -> dict:
    """Partial claim state over the stream slice with index = worker (mod workers)."""
    impl = _CLAIM_IMPLS[claim_id]
    stat_func = _STAT_FUNCS[impl.stat] if impl.stat else None
    state = _new_state()
    for index, tree in _striped_trees(n, k, worker, workers, max_order):
        state["count"] += 1
        profile = profile_fast(tree)
        summary = summarize(tree, profile)
        if impl.per_tree is not None:
            violations, findings = impl.per_tree(n, k, tree, profile, summary)
            for note in violations:
                if len(state["violations"]) < keep:
                    state["violations"].append(
                        (index, [list(e) for e in tree.edges()], summary.to_dict(), note)
                    )
            for note in findings:
                state["findings"][note] = state["findings"].get(note, 0) + 1
                if len(state["finding_wit"]) < keep:
                    state["finding_wit"].append(
                        (index, [list(e) for e in tree.edges()], summary.to_dict(), note)
                    )
        if stat_func is not None:
            value = stat_func(summary)
            if state["best"] is None or _better(value, state["best"], impl.stat_dir):
                state["best"] = value
                state["best_codes"] = [list(canonical_code(tree))]
                state["best_wit"] = [
                    (index, [list(e) for e in tree.edges()], summary.to_dict())
                ]
            elif value == state["best"]:
                code = list(canonical_code(tree))
                if code not in state["best_codes"] and len(state["best_codes"]) < _CODE_CAP:
                    state["best_codes"].append(code)
                if len(state["best_wit"]) < keep:
                    state["best_wit"].append(
                        (index, [list(e) for e in tree.edges()], summary.to_dict())
                    )
    return state


def _merge_states(a: dict, b: dict, direction: str, keep: int) -> dict:
    out = _new_state()
    out["count"] = a["count"] + b["count"]
    out["violations"] = sorted(a["violations"] + b["violations"])[:keep]
    out["findings"] = dict(a["findings"])
    for note, cnt in b["findings"].items():
        out["findings"][note] = out["findings"].get(note, 0) + cnt
    out["finding_wit"] = sorted(a["finding_wit"] + b["finding_wit"])[:keep]
    if a["best"] is None:
        best_sources = [b]
    elif b["best"] is None:
        best_sources = [a]
    elif a["best"] == b["best"]:
        best_sources = [a, b]
    elif _better(a["best"], b["best"], direction):
        best_sources = [a]
    else:
        best_sources = [b]
    out["best"] = best_sources[0]["best"]
    codes: list = []
    for src in best_sources:
        for code in src["best_codes"]:
            if code not in codes and len(codes) < _CODE_CAP:
                codes.append(code)
    out["best_codes"] = codes
    out["best_wit"] = sorted(
        (wit for src in best_sources for wit in src["best_wit"])
    )[:keep]
    return out


def _normalized_state(state: dict) -> dict:
    state["best_codes"] = sorted(state["best_codes"])
    return state


def _fold_claim_universes(
    claim_id: str,
    universes: list[tuple[int, int | None]],
    worker: int,
    workers: int,
    max_order: int | None,
    keep: int,
) -> list[dict]:
    """One worker's partial states over every universe of a claim.

    Batching all universes into a single task keeps process-pool dispatch
    overhead negligible next to the fold work.
    """
    return [
        _fold_universe(claim_id, n, k, worker, workers, max_order, keep)
        for n, k in universes
    ]


def _run_claim_universes(
    claim_id: str,
    universes: list[tuple[int, int | None]],
    workers: int,
    max_order: int | None,
    keep: int,
    executor: Executor | None,
) -> list[dict]:
    impl = _CLAIM_IMPLS[claim_id]
    if workers <= 1 or executor is None:
        return [
            _normalized_state(_fold_universe(claim_id, n, k, 0, 1, max_order, keep))
            for n, k in universes
        ]
    futures = [
        executor.submit(
            _fold_claim_universes, claim_id, universes, w, workers, max_order, keep
        )
        for w in range(workers)
    ]
    per_worker = [f.result() for f in futures]
    states = []
    for i in range(len(universes)):
        state = per_worker[0][i]
        for other in per_worker[1:]:
            state = _merge_states(state, other[i], impl.stat_dir, keep)
        states.append(_normalized_state(state))
    return states


def _normalize_range(n_range) -> list[int]:
    if n_range is None:
        raise InvalidParameters("an order range is required for this claim")
    if isinstance(n_range, int):
        return [n_range]
    return sorted(set(int(n) for n in n_range))


def check(
    claim_id: str,
    n_range: int | Iterable[int] | None = None,
    k: int | None = None,
    *,
    workers: int = 1,
    witness_cap: int = WITNESS_CAP,
    max_order: int | None = None,
    executor: Executor | None = None,
) -> TheoremReport:
    """Run one claim over exhaustive universes for each order in range.

    Assert-mode claims fail (with smallest-order witnesses) on any violation;
    scan-mode claims always complete with verdict "scan".
    """
    if claim_id not in _CLAIM_IMPLS:
        raise UnknownClaim(f"unknown claim {claim_id!r}; see all_claim_ids()")
    impl = _CLAIM_IMPLS[claim_id]
    started = time.perf_counter()

    if impl.claim.fixed:
        failures, values, trees = impl.fixed_eval()
        witnesses = []
        notes = []
        for tree, note in failures:
            if len(witnesses) < witness_cap:
                witnesses.append(_witness_dict(tree, summarize(tree, profile_fast(tree))))
            notes.append(note)
        values = dict(values)
        if notes:
            values["failure_notes"] = notes
        return TheoremReport(
            claim=claim_id,
            universe={"n": max(t.n for t in trees), "k": None, "count": len(trees)},
            verdict="fails" if failures else "holds",
            witnesses=witnesses,
            values=values,
            wall_time=time.perf_counter() - started,
        )

    universes = _claim_universe_list(impl, _normalize_range(n_range), k)
    cap = resolve_max_order(max_order)
    keep = max(witness_cap, 8)

    own_executor = None
    if workers > 1 and executor is None:
        own_executor = ProcessPoolExecutor(max_workers=workers)
        executor = own_executor
    try:
        states = _run_claim_universes(claim_id, universes, workers, cap, keep, executor)
    finally:
        if own_executor is not None:
            own_executor.shutdown()

    return _assemble_report(claim_id, k, universes, states, witness_cap, started)


def _claim_universe_list(
    impl: _ClaimImpl, orders: list[int], k: int | None
) -> list[tuple[int, int | None]]:
    universes: list[tuple[int, int | None]] = []
    for n in orders:
        if n < impl.claim.min_n:
            continue
        ks = (
            [k] if k is not None
            else (feasible_internal_counts(n) if impl.claim.k_filtered else [None])
        )
        universes.extend((n, kk) for kk in ks)
    return universes


def _assemble_report(
    claim_id: str,
    k: int | None,
    universes: list[tuple[int, int | None]],
    states: list[dict],
    witness_cap: int,
    started: float,
) -> TheoremReport:
    impl = _CLAIM_IMPLS[claim_id]
    rows = []
    failure_notes = []
    witnesses = []
    total = 0
    max_n_examined = 0
    for (n, kk), state in zip(universes, states):
        total += state["count"]
        max_n_examined = max(max_n_examined, n)
        universe_failures: list[str] = []
        extras: dict = {}
        if impl.finalize is not None:
            universe_failures, extras = impl.finalize(n, kk, state)
        row = {"n": n, "count": state["count"]}
        if kk is not None:
            row["k"] = kk
        if state["best"] is not None:
            row["optimum"] = state["best"]
            row["argmax_codes"] = state["best_codes"][:witness_cap]
        row.update(extras)
        if state["findings"]:
            row["findings"] = dict(sorted(state["findings"].items()))
        if state["violations"]:
            row["violations"] = [
                {"index": idx, "note": note}
                for idx, _, _, note in state["violations"]
            ]
        rows.append(row)

        where = f"n={n}" + (f" k={kk}" if kk is not None else "")
        if impl.claim.mode == "assert":
            for idx, edges, summary_dict, note in state["violations"]:
                failure_notes.append(f"{where}: {note}")
                if len(witnesses) < witness_cap:
                    witnesses.append({"edges": edges, "summary": summary_dict})
            for note in universe_failures:
                failure_notes.append(f"{where}: {note}")
                for idx, edges, summary_dict in state["best_wit"]:
                    if len(witnesses) < witness_cap:
                        witnesses.append({"edges": edges, "summary": summary_dict})
        else:
            for idx, edges, summary_dict, note in state["finding_wit"]:
                if len(witnesses) < witness_cap:
                    witnesses.append({"edges": edges, "summary": summary_dict})

    values: dict = {"per_n": rows}
    if failure_notes:
        values["failure_notes"] = failure_notes
    if impl.claim.mode == "scan":
        verdict = "scan"
    else:
        verdict = "fails" if failure_notes else "holds"
    return TheoremReport(
        claim=claim_id,
        universe={"n": max_n_examined, "k": k, "count": total},
        verdict=verdict,
        witnesses=witnesses,
        values=values,
        wall_time=time.perf_counter() - started,
    )


def verify_all(
    claim_ids: Iterable[str] | None = None,
    max_n: int = 10,
    *,
    workers: int = 1,
    witness_cap: int = WITNESS_CAP,
    max_order: int | None = None,
    k_max_n: int | None = None,
    executor: Executor | None = None,
) -> list[TheoremReport]:
    """Check a batch of claims up to a maximum order, sharing one worker pool.

    k-filtered claims run over every feasible internal count, optionally up
    to a separate (smaller) maximum order.  Pass a warm executor to amortize
    pool startup across calls.
    """
    ids = list(claim_ids) if claim_ids is not None else all_claim_ids()
    for cid in ids:
        if cid not in _CLAIM_IMPLS:
            raise UnknownClaim(f"unknown claim {cid!r}")

    def claim_range(impl: _ClaimImpl) -> range:
        top = max_n
        if impl.claim.k_filtered and k_max_n is not None:
            top = min(max_n, k_max_n)
        return range(impl.claim.min_n, top + 1)

    if workers <= 1:
        return [
            check(
                cid,
                claim_range(_CLAIM_IMPLS[cid]),
                witness_cap=witness_cap,
                max_order=max_order,
            )
            for cid in ids
        ]

    # Parallel path: every universe of every claim goes out in a single task
    # per worker, so pool dispatch is paid once per worker, not per claim.
    started = time.perf_counter()
    cap = resolve_max_order(max_order)
    keep = max(witness_cap, 8)
    tasks = [
        (cid, _claim_universe_list(impl, list(claim_range(impl)), None))
        for cid in ids
        for impl in (_CLAIM_IMPLS[cid],)
        if not impl.claim.fixed
    ]
    own_executor = None
    if executor is None:
        own_executor = ProcessPoolExecutor(max_workers=workers)
        executor = own_executor
    try:
        futures = [
            executor.submit(_fold_batch, tasks, w, workers, max_order, keep)
            for w in range(workers)
        ]
        per_worker = [f.result() for f in futures]
    finally:
        if own_executor is not None:
            own_executor.shutdown()

    batched: dict[str, TheoremReport] = {}
    for i, (cid, universes) in enumerate(tasks):
        impl = _CLAIM_IMPLS[cid]
        states = []
        for j in range(len(universes)):
            state = per_worker[0][i][j]
            for other in per_worker[1:]:
                state = _merge_states(state, other[i][j], impl.stat_dir, keep)
            states.append(_normalized_state(state))
        batched[cid] = _assemble_report(cid, None, universes, states, witness_cap, started)
    return [
        batched[cid] if cid in batched else check(cid, witness_cap=witness_cap)
        for cid in ids
    ]


def _fold_batch(
    tasks: list[tuple[str, list[tuple[int, int | None]]]],
    worker: int,
    workers: int,
    max_order: int | None,
    keep: int,
) -> list[list[dict]]:
    """One worker's partial states for every universe of every claim."""
    return [
        _fold_claim_universes(cid, universes, worker, workers, max_order, keep)
        for cid, universes in tasks
    ]


def search(
    statistic: str,
    n: int,
    k: int | None = None,
    direction: str = "max",
    *,
    workers: int = 1,
    witness_cap: int = WITNESS_CAP,
    max_order: int | None = None,
    executor: Executor | None = None,
) -> SearchResult:
    """Exact extremum of a statistic over the free trees of one order."""
    stat = resolve_statistic(statistic)
    if direction not in ("max", "min"):
        raise InvalidParameters(f"direction must be max or min, got {direction!r}")
    started = time.perf_counter()
    keep = max(witness_cap, 8)

    # Reuse the fold by registering a transient claim impl keyed per call is
    # overkill; fold inline instead with the same striping discipline.
    def fold(worker: int, nworkers: int) -> dict:
        return _fold_search(stat, direction, n, k, worker, nworkers, max_order, keep)

    own_executor = None
    if workers > 1 and executor is None:
        own_executor = ProcessPoolExecutor(max_workers=workers)
        executor = own_executor
    try:
        if workers <= 1 or executor is None:
            state = fold(0, 1)
        else:
            futures = [
                executor.submit(
                    _fold_search, stat, direction, n, k, w, workers, max_order, keep
                )
                for w in range(workers)
            ]
            state = futures[0].result()
            for future in futures[1:]:
                state = _merge_states(state, future.result(), direction, keep)
    finally:
        if own_executor is not None:
            own_executor.shutdown()
    state = _normalized_state(state)

    if state["best"] is None:
        raise InvalidParameters(f"empty universe for n={n}, k={k}")
    return SearchResult(
        statistic=stat,
        direction=direction,
        n=n,
        k=k,
        universe_count=state["count"],
        optimum=state["best"],
        optimizer_codes=state["best_codes"][:witness_cap],
        optimizers=[
            {"edges": edges, "summary": summary_dict}
            for _, edges, summary_dict in state["best_wit"][:witness_cap]
        ],
        wall_time=time.perf_counter() - started,
    )


def _fold_search(
    stat: str,
    direction: str,
    n: int,
    k: int | None,
    worker: int,
    workers: int,
    max_order: int | None,
    keep: int,
) -> dict:
    stat_func = _STAT_FUNCS[stat]
    state = _new_state()
    for index, tree in _striped_trees(n, k, worker, workers, max_order):
        state["count"] += 1
        summary = summarize(tree, profile_fast(tree))
        value = stat_func(summary)
        if state["best"] is None or _better(value, state["best"], direction):
            state["best"] = value
            state["best_codes"] = [list(canonical_code(tree))]
            state["best_wit"] = [
                (index, [list(e) for e in tree.edges()], summary.to_dict())
            ]
        elif value == state["best"]:
            code = list(canonical_code(tree))
            if code not in state["best_codes"] and len(state["best_codes"]) < _CODE_CAP:
                state["best_codes"].append(code)
            if len(state["best_wit"]) < keep:
                state["best_wit"].append(
                    (index, [list(e) for e in tree.edges()], summary.to_dict())
                )
    return state


def emit_report(report, format: str = "json", destination="-") -> None:
    """Write a report as JSON or CSV to a path, file object, or "-" (stdout)."""
    if format == "json":
        text = report.to_json_text()
    elif format == "csv":
        text = report.to_csv_text()
    else:
        raise InvalidParameters(f"format must be json or csv, got {format!r}")
    try:
        if destination == "-":
            sys.stdout.write(text)
        elif hasattr(destination, "write"):
            destination.write(text)
        else:
            Path(destination).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write report: {exc}") from exc

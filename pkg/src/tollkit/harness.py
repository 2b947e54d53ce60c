"""Executable checks of the toll-convexity results for strong products.

Each ``check_*`` function takes two factor graphs and returns a
:class:`VerificationReport`.  Hypotheses that do not hold for an instance
(a disconnected or complete factor, no qualifying vertex pairs) produce a
``skip`` report with a reason; a mathematical failure produces a ``fail``
report whose counterexample can be replayed with :func:`replay`.
"""

from __future__ import annotations

import json
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any

from .graph import Graph, GraphError, VertexSet, diametral_pair, iter_bits
from .io import Corpus, emit_graph6, parse_graph6
from .products import ProductGraph, strong_product
from .search import (
    is_t_hull_set,
    is_toll_set,
    t_hull_number,
    tn2_witness_predicate,
    toll_number,
)
from .toll import extreme_bits_from_table, interval_table, is_extreme_vertex, toll_interval

__all__ = [
    "VerificationReport",
    "CHECKS",
    "check_interval_lemmas",
    "check_corollary_covers",
    "check_no_extreme",
    "check_tn_bound_and_characterization",
    "check_th",
    "run_check",
    "sweep",
    "summarize",
    "replay",
    "reports_to_text",
    "reports_to_json",
    "reports_from_json",
]

PASS, FAIL, SKIP = "pass", "fail", "skip"
PRODUCT_SEARCH_LIMIT = 4


@dataclass
class VerificationReport:
    theorem: str
    g6_left: str
    g6_right: str
    outcome: str
    counterexample: dict[str, Any] | None = None
    millis: float = 0.0
    reason: str = ""
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_line(self) -> str:
        parts = [
            f"theorem={self.theorem}",
            f"g6_left={self.g6_left}",
            f"g6_right={self.g6_right}",
            f"outcome={self.outcome}",
        ]
        if self.counterexample is not None:
            parts.append("counterexample=" + json.dumps(self.counterexample, separators=(",", ":")))
        if self.reason:
            parts.append("reason=" + json.dumps(self.reason))
        if self.details:
            parts.append("details=" + json.dumps(self.details, separators=(",", ":"), sort_keys=True))
        parts.append(f"millis={self.millis:.1f}")
        return " ".join(parts)


class _Instance:
    """Factor graphs, their product and the toll-interval tables all checks share."""

    def __init__(self, left: Graph, right: Graph) -> None:
        self.left, self.right = left, right
        self.product: ProductGraph = strong_product(left, right)
        self.graph = self.product.graph
        self.tg = interval_table(left)
        self.th = interval_table(right)
        self.tp = interval_table(self.graph)

    def pair(self, v: int) -> list[int]:
        return list(self.product.decode(v))

    def far_pairs(self) -> Iterable[tuple[int, int, int, int]]:
        """Pairs ``(x1,y1),(x2,y2)`` with ``x1 not in N[x2]`` and ``y1 not in N[y2]``."""
        for x1 in range(self.left.n):
            for x2 in range(self.left.n):
                if self.left.closed_bits(x2) >> x1 & 1:
                    continue
                for y1 in range(self.right.n):
                    for y2 in range(self.right.n):
                        if self.right.closed_bits(y2) >> y1 & 1:
                            continue
                        yield x1, y1, x2, y2


def _report(theorem: str, left: Graph, right: Graph, outcome: str, **kw: Any) -> VerificationReport:
    return VerificationReport(theorem, emit_graph6(left), emit_graph6(right), outcome, **kw)


def _hypothesis_failure(left: Graph, right: Graph, need_noncomplete: bool) -> str:
    for side, g in (("left", left), ("right", right)):
        if g.n < 2:
            return f"{side} factor is trivial"
        if not g.is_connected():
            return f"{side} factor is disconnected"
        if need_noncomplete and g.is_complete():
            return f"{side} factor is complete"
    return ""


# -- interval lemmas ---------------------------------------------------------------


def _lemma_claims(inst: _Instance, x1: int, y1: int, x2: int, y2: int, x: int, y: int) -> list[str]:
    """Which of the interval lemmas claim ``(x, y)`` is in ``T((x1,y1),(x2,y2))``."""
    in_g = bool(inst.tg[x1][x2] >> x & 1)
    in_h = bool(inst.th[y1][y2] >> y & 1)
    a = inst.product.encode(x1, y1)
    b = inst.product.encode(x2, y2)
    v = inst.product.encode(x, y)
    away = not (inst.graph.adj[a] | inst.graph.adj[b]) >> v & 1
    claims = []
    if in_g and in_h:
        claims.append("both_inside")
    if not in_g and in_h and away:
        claims.append("x_outside_away")
    if not in_g and in_h and y not in (y1, y2):
        claims.append("x_outside_y_interior")
    if in_g and not in_h and away:
        claims.append("y_outside_away")
    if in_g and x not in (x1, x2) and not in_h:
        claims.append("y_outside_x_interior")
    if not in_g and not in_h and away:
        claims.append("both_outside_away")
    return claims


def check_interval_lemmas(left: Graph, right: Graph) -> VerificationReport:
    """Every membership claim of the product interval lemmas, on every far pair."""
    theorem = "lemmas"
    start = time.perf_counter()
    why = _hypothesis_failure(left, right, need_noncomplete=False)
    if why:
        return _report(theorem, left, right, SKIP, reason=why)
    inst = _Instance(left, right)
    pairs = checked = 0
    for x1, y1, x2, y2 in inst.far_pairs():
        pairs += 1
        interval = inst.tp[inst.product.encode(x1, y1)][inst.product.encode(x2, y2)]
        for x in range(left.n):
            for y in range(right.n):
                claims = _lemma_claims(inst, x1, y1, x2, y2, x, y)
                if not claims:
                    continue
                checked += 1
                if not interval >> inst.product.encode(x, y) & 1:
                    cx = {"kind": "interval_member", "a": [x1, y1], "b": [x2, y2],
                          "x": [x, y], "claims": claims}
                    return _report(theorem, left, right, FAIL, counterexample=cx,
                                   millis=_ms(start))
    if not pairs:
        return _report(theorem, left, right, SKIP, millis=_ms(start),
                       reason="no pairs with non-adjacent distinct coordinates")
    return _report(theorem, left, right, PASS, millis=_ms(start),
                   details={"pairs": pairs, "claims": checked})


def check_corollary_covers(left: Graph, right: Graph) -> VerificationReport:
    """The interval of a far pair contains everything outside both open neighborhoods."""
    theorem = "covers"
    start = time.perf_counter()
    why = _hypothesis_failure(left, right, need_noncomplete=False)
    if why:
        return _report(theorem, left, right, SKIP, reason=why)
    inst = _Instance(left, right)
    adj = inst.graph.adj
    pairs = 0
    for x1, y1, x2, y2 in inst.far_pairs():
        pairs += 1
        a = inst.product.encode(x1, y1)
        b = inst.product.encode(x2, y2)
        outside = inst.graph.all_bits & ~(adj[a] | adj[b])
        missing = outside & ~inst.tp[a][b]
        if missing:
            v = next(iter_bits(missing))
            cx = {"kind": "interval_member", "a": [x1, y1], "b": [x2, y2],
                  "x": inst.pair(v), "claims": ["outside_neighborhoods"]}
            return _report(theorem, left, right, FAIL, counterexample=cx, millis=_ms(start))
    if not pairs:
        return _report(theorem, left, right, SKIP, millis=_ms(start),
                       reason="no pairs with non-adjacent distinct coordinates")
    return _report(theorem, left, right, PASS, millis=_ms(start), details={"pairs": pairs})


# -- extreme vertices ---------------------------------------------------------------


def _interval_witnesses(g: Graph, table: Sequence[Sequence[int]]) -> list[tuple[int, int, int]]:
    """For each non-extreme ``x``, the first pair ``p < q`` avoiding ``x`` with ``x`` in ``T(p, q)``."""
    found = []
    for x in range(g.n):
        for p, q in combinations(range(g.n), 2):
            if x not in (p, q) and table[p][q] >> x & 1:
                found.append((x, p, q))
                break
    return found


def check_no_extreme(left: Graph, right: Graph) -> VerificationReport:
    """No extreme vertices in the product; non-extreme factor vertices lift layer-wise."""
    theorem = "no_extreme"
    start = time.perf_counter()
    why = _hypothesis_failure(left, right, need_noncomplete=True)
    if why:
        return _report(theorem, left, right, SKIP, reason=why)
    inst = _Instance(left, right)
    ext = extreme_bits_from_table(inst.graph, inst.tp)
    if ext:
        v = next(iter_bits(ext))
        cx = {"kind": "extreme_vertex", "v": inst.pair(v)}
        return _report(theorem, left, right, FAIL, counterexample=cx, millis=_ms(start))
    # x in T_G(x1,x2) lifts to (x,y) in T((x1,y),(x2,y)) inside each layer
    lifted = 0
    layer_triples = [
        (inst.product.encode(p, y), inst.product.encode(q, y), inst.product.encode(x, y))
        for x, p, q in _interval_witnesses(left, inst.tg) for y in range(right.n)
    ] + [
        (inst.product.encode(x, p), inst.product.encode(x, q), inst.product.encode(x, y))
        for y, p, q in _interval_witnesses(right, inst.th) for x in range(left.n)
    ]
    for a, b, v in layer_triples:
        if not inst.tp[a][b] >> v & 1:
            cx = {"kind": "interval_member", "a": inst.pair(a), "b": inst.pair(b),
                  "x": inst.pair(v), "claims": ["layer_lift"]}
            return _report(theorem, left, right, FAIL, counterexample=cx, millis=_ms(start))
        lifted += 1
    return _report(theorem, left, right, PASS, millis=_ms(start), details={"lifted": lifted})


# -- toll number and t-hull number ------------------------------------------------


def _diametral_triple(inst: _Instance) -> tuple[int, int, int]:
    x1, x2 = diametral_pair(inst.left)
    y1, y2 = diametral_pair(inst.right)
    enc = inst.product.encode
    return enc(x1, y1), enc(x2, y1), enc(x2, y2)


def check_tn_bound_and_characterization(left: Graph, right: Graph) -> VerificationReport:
    """Toll number is 2 or 3, equals 2 exactly when the neighborhood condition holds,
    and the diametral triple is a toll set."""
    theorem = "tn_characterization"
    start = time.perf_counter()
    why = _hypothesis_failure(left, right, need_noncomplete=True)
    if why:
        return _report(theorem, left, right, SKIP, reason=why)
    inst = _Instance(left, right)
    g = inst.graph
    result = toll_number(g, max_size=PRODUCT_SEARCH_LIMIT)
    pair = tn2_witness_predicate(inst.product)
    triple = _diametral_triple(inst)
    details = {
        "tn": result.value,
        "witness": [inst.pair(v) for v in result.witness],
        "predicate_pair": [inst.pair(v) for v in pair] if pair else None,
        "diametral_triple": [inst.pair(v) for v in triple],
    }
    cx: dict[str, Any] | None = None
    if result.value not in (2, 3):
        cx = {"kind": "tn_value", "tn": result.value}
    elif (result.value == 2) != (pair is not None):
        cx = {"kind": "tn_characterization", "tn": result.value,
              "pair": details["predicate_pair"]}
    elif not is_toll_set(g, g.vertex_set(triple), inst.tp):
        cx = {"kind": "not_toll_set", "set": details["diametral_triple"]}
    if cx:
        return _report(theorem, left, right, FAIL, counterexample=cx, millis=_ms(start),
                       details=details)
    return _report(theorem, left, right, PASS, millis=_ms(start), details=details)


def check_th(left: Graph, right: Graph) -> VerificationReport:
    """t-hull number is 2 and the diametral pair is a t-hull set."""
    theorem = "th2"
    start = time.perf_counter()
    why = _hypothesis_failure(left, right, need_noncomplete=True)
    if why:
        return _report(theorem, left, right, SKIP, reason=why)
    inst = _Instance(left, right)
    g = inst.graph
    a, middle, b = _diametral_triple(inst)
    result = t_hull_number(g, max_size=PRODUCT_SEARCH_LIMIT)
    details = {"th": result.value, "diametral_pair": [inst.pair(a), inst.pair(b)]}
    cx: dict[str, Any] | None = None
    if result.value != 2:
        cx = {"kind": "th_value", "th": result.value}
    elif not inst.tp[a][b] >> middle & 1:
        cx = {"kind": "interval_member", "a": inst.pair(a), "b": inst.pair(b),
              "x": inst.pair(middle), "claims": ["diametral_middle"]}
    elif not is_t_hull_set(g, g.vertex_set([a, b]), inst.tp):
        cx = {"kind": "not_t_hull_set", "set": [inst.pair(a), inst.pair(b)]}
    if cx:
        return _report(theorem, left, right, FAIL, counterexample=cx, millis=_ms(start),
                       details=details)
    return _report(theorem, left, right, PASS, millis=_ms(start), details=details)


CHECKS: dict[str, Callable[[Graph, Graph], VerificationReport]] = {
    "lemmas": check_interval_lemmas,
    "covers": check_corollary_covers,
    "no_extreme": check_no_extreme,
    "tn_characterization": check_tn_bound_and_characterization,
    "th2": check_th,
}


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def run_check(name: str, left: Graph, right: Graph) -> VerificationReport:
    if name not in CHECKS:
        raise GraphError(f"unknown check {name!r}; expected one of {', '.join(CHECKS)}")
    return CHECKS[name](left, right)


def _run_job(job: tuple[str, str, str]) -> VerificationReport:
    name, g6_left, g6_right = job
    return run_check(name, parse_graph6(g6_left), parse_graph6(g6_right))


def expand_checks(checks: Sequence[str]) -> list[str]:
    names: list[str] = []
    for c in checks:
        for name in (CHECKS if c == "all" else [c]):
            if name not in CHECKS:
                raise GraphError(f"unknown check {name!r}")
            if name not in names:
                names.append(name)
    return names


def sweep(
    corpus_left: Corpus | Iterable[Graph],
    corpus_right: Corpus | Iterable[Graph],
    checks: Sequence[str] = ("all",),
    jobs: int = 1,
) -> list[VerificationReport]:
    """Run every check on every ordered factor pair, in input order.

    Results do not depend on ``jobs``; with ``jobs > 1`` instances fan out to
    worker processes and come back in submission order.
    """
    names = expand_checks(checks)
    lefts = [emit_graph6(g) for g in corpus_left]
    rights = [emit_graph6(g) for g in corpus_right]
    work = [(name, a, b) for a in lefts for b in rights for name in names]
    if jobs <= 1 or len(work) < 2:
        return [_run_job(job) for job in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_job, work, chunksize=max(1, len(work) // (jobs * 8))))


def summarize(reports: Iterable[VerificationReport]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in reports:
        counts[r.outcome] += 1
    return counts


# -- replay and serialization --------------------------------------------------


def replay(report: VerificationReport) -> bool:
    """Re-run the operations behind a counterexample; True if the violation recurs."""
    cx = report.counterexample
    if cx is None:
        return False
    left, right = parse_graph6(report.g6_left), parse_graph6(report.g6_right)
    p = strong_product(left, right)
    g = p.graph
    kind = cx["kind"]
    if kind == "interval_member":
        a, b, x = (p.encode(*cx[k]) for k in ("a", "b", "x"))
        return x not in toll_interval(g, a, b)
    if kind == "extreme_vertex":
        return is_extreme_vertex(g, p.encode(*cx["v"]))
    if kind == "tn_value":
        return toll_number(g, max_size=PRODUCT_SEARCH_LIMIT).value not in (2, 3)
    if kind == "tn_characterization":
        tn = toll_number(g, max_size=PRODUCT_SEARCH_LIMIT).value
        return (tn == 2) != (tn2_witness_predicate(p) is not None)
    if kind == "th_value":
        return t_hull_number(g, max_size=PRODUCT_SEARCH_LIMIT).value != 2
    if kind in ("not_toll_set", "not_t_hull_set"):
        s = g.vertex_set(p.encode(*xy) for xy in cx["set"])
        ok = is_toll_set(g, s) if kind == "not_toll_set" else is_t_hull_set(g, s)
        return not ok
    raise GraphError(f"unknown counterexample kind {kind!r}")


def reports_to_text(reports: Iterable[VerificationReport]) -> str:
    return "".join(r.to_line() + "\n" for r in reports)


def reports_to_json(reports: Sequence[VerificationReport], meta: dict[str, Any] | None = None) -> str:
    doc = {
        "meta": meta or {},
        "summary": summarize(reports),
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2)


def reports_from_json(text: str) -> list[VerificationReport]:
    return [VerificationReport(**r) for r in json.loads(text)["reports"]]

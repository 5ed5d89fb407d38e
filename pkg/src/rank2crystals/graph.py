"""Crystal graphs by breadth-first closure under the lowering operators.

Both realizations are wrapped in a small model object exposing the same
crystal interface, so generation, export, and the axiom checks are shared.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from . import lspath, monomial
from .cartan import CartanData, ClWeight, fundamental_weight, new_cartan, simple_root
from .errors import CrystalError
from .iso import phi_inverse, phi_map


class LSModel:
    kind = "ls"

    def __init__(self, cd: CartanData, i: int, s: int = 0):
        self.cd, self.i, self.s = cd, i, s

    def highest(self):
        return lspath.highest_path(self.i)

    def f(self, x, k):
        return lspath.f(self.cd, x, k)

    def e(self, x, k):
        return lspath.e(self.cd, x, k)

    def wt(self, x):
        return lspath.wt(self.cd, x)

    def eps(self, x, k):
        return lspath.epsilon(self.cd, x, k)

    def phi(self, x, k):
        return lspath.phi(self.cd, x, k)

    def label(self, x):
        return lspath.format_path(x)

    def parse(self, text):
        return lspath.parse_path(text, self.i)


class MonomialModel:
    kind = "monomial"

    def __init__(self, cd: CartanData, i: int, s: int = 0):
        self.cd, self.i, self.s = cd, i, s

    def highest(self):
        return monomial.LaurentMonomial.variable(self.s, self.i)

    def f(self, x, k):
        return monomial.mono_f(self.cd, x, k)

    def e(self, x, k):
        return monomial.mono_e(self.cd, x, k)

    def wt(self, x):
        return monomial.mono_wt(x)

    def eps(self, x, k):
        return monomial.mono_eps(x, k)

    def phi(self, x, k):
        return monomial.mono_phi(x, k)

    def label(self, x):
        return monomial.format_monomial(x)

    def parse(self, text):
        return monomial.parse_monomial(text)


MODELS = {"ls": LSModel, "monomial": MonomialModel}


def make_model(kind: str, cd: CartanData, i: int, s: int = 0):
    try:
        return MODELS[kind](cd, i, s)
    except KeyError:
        raise ValueError(f"unknown crystal kind {kind!r}; expected one of {sorted(MODELS)}") from None


class Node(NamedTuple):
    id: int
    label: str
    wt: ClWeight
    depth: int


class Edge(NamedTuple):
    src: int
    dst: int
    k: int


@dataclass
class CrystalGraph:
    kind: str
    cartan: tuple
    i: int
    shift: int
    depth: int
    nodes: list
    edges: list
    root: int = 0
    elements: dict = field(default_factory=dict, compare=False, repr=False)

    def by_depth(self):
        levels = {}
        for node in self.nodes:
            levels.setdefault(node.depth, []).append(node)
        return levels

    def successors(self, node_id):
        return [(edge.k, edge.dst) for edge in self.edges if edge.src == node_id]


def generate(kind: str, cd: CartanData, i: int, s: int = 0, depth_bound: int = 12) -> CrystalGraph:
    """All elements reachable from the highest weight element by at most ``depth_bound`` f-steps."""
    if depth_bound < 0:
        raise ValueError(f"depth bound must be non-negative, got {depth_bound}")
    model = make_model(kind, cd, i, s)
    root = model.highest()
    depth_of = {root: 0}
    raw_edges = []
    frontier = [root]
    for d in range(depth_bound):
        nxt = []
        for x in frontier:
            for k in (1, 2):
                y = model.f(x, k)
                if y is None:
                    continue
                raw_edges.append((x, y, k))
                if y not in depth_of:
                    depth_of[y] = d + 1
                    nxt.append(y)
        frontier = nxt

    labels = {x: model.label(x) for x in depth_of}
    order = sorted(depth_of, key=lambda x: (depth_of[x], labels[x]))
    ids = {x: n for n, x in enumerate(order)}
    nodes = [Node(ids[x], labels[x], model.wt(x), depth_of[x]) for x in order]
    edges = sorted(Edge(ids[x], ids[y], k) for x, y, k in raw_edges)
    return CrystalGraph(
        kind, (cd.a, cd.b), i, s, depth_bound, nodes, edges, ids[root], {ids[x]: x for x in order}
    )


def export_json(g: CrystalGraph) -> str:
    doc = {
        "kind": g.kind,
        "cartan": list(g.cartan),
        "i": g.i,
        "shift": g.shift,
        "depth": g.depth,
        "nodes": [{"id": n.id, "label": n.label, "wt": [n.wt.c1, n.wt.c2], "depth": n.depth} for n in g.nodes],
        "edges": [{"src": e.src, "dst": e.dst, "k": e.k} for e in g.edges],
    }
    return json.dumps(doc)


def read_json(text: str) -> CrystalGraph:
    doc = json.loads(text)
    nodes = [Node(n["id"], n["label"], ClWeight(*n["wt"]), n["depth"]) for n in doc["nodes"]]
    edges = [Edge(e["src"], e["dst"], e["k"]) for e in doc["edges"]]
    root = min((n for n in nodes if n.depth == 0), key=lambda n: n.id).id if nodes else 0
    g = CrystalGraph(doc["kind"], tuple(doc["cartan"]), doc["i"], doc["shift"], doc["depth"], nodes, edges, root)
    model = make_model(g.kind, new_cartan(*g.cartan), g.i, g.shift)
    g.elements = {n.id: model.parse(n.label) for n in nodes}
    return g


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for n in g.nodes:
        lines.append(f"  n{n.id} [label={_quote(n.label)}];")
    for e in g.edges:
        lines.append(f'  n{e.src} -> n{e.dst} [label="{e.k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_text(g: CrystalGraph) -> str:
    lines = [f"# {g.kind} crystal, cartan={g.cartan[0]},{g.cartan[1]} i={g.i} shift={g.shift} depth<={g.depth}"]
    for n in g.nodes:
        lines.append(f"node {n.id} depth={n.depth} wt=({n.wt.c1},{n.wt.c2}) {n.label}")
    for e in g.edges:
        lines.append(f"edge {e.src} -{e.k}-> {e.dst}")
    return "\n".join(lines) + "\n"


@dataclass
class VerifyReport:
    a: int
    b: int
    i: int
    depth: int
    shift: int
    nodes: int = 0
    edges: int = 0
    checks: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.failures

    @property
    def checks_performed(self) -> int:
        return sum(self.checks.values())

    def fail(self, name, *witnesses):
        self.failures.append((name, tuple(str(w) for w in witnesses)))

    def summary(self) -> str:
        status = "verified" if self.verified else "FAILED"
        lines = [
            f"cartan={self.a},{self.b} i={self.i} shift={self.shift} depth<={self.depth}: {status}",
            f"  nodes={self.nodes} edges={self.edges} checks={self.checks_performed}",
        ]
        for name in sorted(self.checks):
            lines.append(f"  {name}: {self.checks[name]}")
        for name, witnesses in self.failures[:50]:
            lines.append(f"  FAIL {name}: " + " | ".join(witnesses))
        if len(self.failures) > 50:
            lines.append(f"  ... {len(self.failures) - 50} more failures")
        return "\n".join(lines)


def check_crystal_axioms(model, g: CrystalGraph, report: VerifyReport, name: str) -> None:
    """Kashiwara's axioms on every node, with the f-side limited to nodes inside the truncation."""
    cd = model.cd
    for node in g.nodes:
        x = g.elements[node.id]
        for k in (1, 2):
            alpha = simple_root(cd, k)
            try:
                w, ep, ph = model.wt(x), model.eps(x, k), model.phi(x, k)
                report.checks[name] += 1
                if ep < 0 or ph < 0 or ph != ep + w.h(k):
                    report.fail(name, f"phi_{k}={ph} eps_{k}={ep} wt={w}", node.label)
                y = model.e(x, k)
                if (y is None) != (ep == 0):
                    report.fail(name, f"e_{k} zero iff eps_{k}=0", node.label)
                if y is not None:
                    if (
                        model.wt(y) != w.plus(alpha)
                        or model.eps(y, k) != ep - 1
                        or model.phi(y, k) != ph + 1
                        or model.f(y, k) != x
                    ):
                        report.fail(name, f"e_{k} statistics or f_{k} e_{k} = id", node.label)
                if node.depth >= g.depth:
                    continue
                y = model.f(x, k)
                if (y is None) != (ph == 0):
                    report.fail(name, f"f_{k} zero iff phi_{k}=0", node.label)
                if y is not None:
                    if (
                        model.wt(y) != w.minus(alpha)
                        or model.eps(y, k) != ep + 1
                        or model.phi(y, k) != ph - 1
                        or model.e(y, k) != x
                    ):
                        report.fail(name, f"f_{k} statistics or e_{k} f_{k} = id", node.label)
            except CrystalError as exc:
                report.fail(name, type(exc).__name__, node.label, exc)
        if node.depth == 0 and node.id == g.root:
            if any(model.eps(x, k) for k in (1, 2)) or model.wt(x) != fundamental_weight(g.i):
                report.fail(name, "root is not highest of weight Lambda_i", node.label)


def verify_isomorphism(cd: CartanData, i: int, s: int = 0, depth_bound: int = 12) -> VerifyReport:
    """Check that Phi_s is a crystal isomorphism on the depth-truncated crystals."""
    report = VerifyReport(cd.a, cd.b, i, depth_bound, s)
    ls_model, mono_model = LSModel(cd, i, s), MonomialModel(cd, i, s)
    g_ls = generate("ls", cd, i, s, depth_bound)
    g_mono = generate("monomial", cd, i, s, depth_bound)
    report.nodes = len(g_ls.nodes)
    report.edges = len(g_ls.edges)

    def image(x):
        try:
            return phi_map(cd, i, s, x)
        except CrystalError as exc:
            report.fail("integrality", lspath.format_path(x), exc)
            return None

    images = {}
    for node in g_ls.nodes:
        pi = g_ls.elements[node.id]
        images[node.id] = image(pi)
        report.checks["membership"] += 1
        reason = lspath.membership_failure(cd, pi)
        if reason:
            report.fail("membership", node.label, reason)
        for k in (1, 2):
            report.checks["q_integrality"] += 1
            try:
                lspath.height_profile(cd, pi, k)
            except CrystalError as exc:
                report.fail("q_integrality", node.label, exc)

    # (1) per-depth bijection onto the monomial side
    ls_levels, mono_levels = g_ls.by_depth(), g_mono.by_depth()
    for d in sorted(set(ls_levels) | set(mono_levels)):
        report.checks["bijection"] += 1
        mapped = [images[n.id] for n in ls_levels.get(d, [])]
        mapped_set = set(mapped)
        if len(mapped_set) != len(mapped):
            dup = [str(X) for X, c in Counter(mapped).items() if c > 1]
            report.fail("bijection", f"Phi not injective at depth {d}", *dup)
        targets = {g_mono.elements[n.id] for n in mono_levels.get(d, [])}
        if mapped_set != targets:
            missing = sorted(str(X) for X in targets - mapped_set)
            extra = sorted(str(X) for X in mapped_set - targets if X is not None)
            report.fail("bijection", f"depth {d}", f"unmatched monomials {missing}", f"extra images {extra}")

    # (2) commutation with the operators, (3) preservation, (4) round trip
    for node in g_ls.nodes:
        pi, X = g_ls.elements[node.id], images[node.id]
        if X is None:
            continue
        try:
            for k in (1, 2):
                report.checks["preserve"] += 1
                if (
                    lspath.epsilon(cd, pi, k) != monomial.mono_eps(X, k)
                    or lspath.phi(cd, pi, k) != monomial.mono_phi(X, k)
                ):
                    report.fail("preserve", f"eps/phi_{k}", node.label, X)
                if node.depth < depth_bound:
                    report.checks["commute_f"] += 1
                    lhs, rhs = lspath.f(cd, pi, k), monomial.mono_f(cd, X, k)
                    if (lhs is None) != (rhs is None) or (lhs is not None and image(lhs) != rhs):
                        report.fail("commute_f", f"k={k}", node.label, X, lhs, rhs)
                report.checks["commute_e"] += 1
                lhs, rhs = lspath.e(cd, pi, k), monomial.mono_e(cd, X, k)
                if (lhs is None) != (rhs is None) or (lhs is not None and image(lhs) != rhs):
                    report.fail("commute_e", f"k={k}", node.label, X, lhs, rhs)
            report.checks["preserve"] += 1
            if lspath.wt(cd, pi) != monomial.mono_wt(X):
                report.fail("preserve", "wt", node.label, X)
            report.checks["round_trip"] += 1
            if phi_inverse(cd, i, s, X) != pi:
                report.fail("round_trip", node.label, X)
        except CrystalError as exc:
            report.fail("operators", type(exc).__name__, node.label, exc)
    for node in g_mono.nodes:
        X = g_mono.elements[node.id]
        report.checks["round_trip"] += 1
        try:
            if phi_map(cd, i, s, phi_inverse(cd, i, s, X)) != X:
                report.fail("round_trip", node.label)
        except CrystalError as exc:
            report.fail("round_trip", type(exc).__name__, node.label, exc)

    # (6) crystal axioms on both realizations
    check_crystal_axioms(ls_model, g_ls, report, "axioms_ls")
    check_crystal_axioms(mono_model, g_mono, report, "axioms_monomial")
    return report

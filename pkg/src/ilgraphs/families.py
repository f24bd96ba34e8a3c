"""Closures of a graph under triangle-to-star (delta-Y) and star-to-triangle
(Y-delta) moves, up to isomorphism."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .graphcore import Graph, canonical_form, degree_three_vertices, delta_y, to_graph6, triangles, y_delta

DEFAULT_MAX_MEMBERS = 10_000


@dataclass
class FamilyMember:
    certificate: str
    graph: Graph              # canonically relabeled representative
    delta_y_only: bool = False

    @property
    def graph6(self) -> str:
        return to_graph6(self.graph)


@dataclass
class FamilyClosure:
    members: list[FamilyMember]
    moves: list[tuple[int, str, tuple, int]] = field(default_factory=list)  # (src, kind, where, dst)
    allow_y_delta: bool = True
    complete: bool = True

    def __len__(self):
        return len(self.members)

    def index_of(self, g: Graph) -> int | None:
        cert = canonical_form(g)[1]
        for i, m in enumerate(self.members):
            if m.certificate == cert:
                return i
        return None

    def certificates(self) -> set[str]:
        return {m.certificate for m in self.members}

    @property
    def ydelta_required(self) -> list[int]:
        """Members that cannot be reached from the seed by delta-Y moves alone."""
        return [i for i, m in enumerate(self.members) if not m.delta_y_only]

    def to_json(self):
        return {
            "members": len(self.members),
            "ydelta_required": len(self.ydelta_required),
            "complete": self.complete,
            "allow_y_delta": self.allow_y_delta,
            "family": [
                {"certificate": m.certificate, "graph6": m.graph6, "vertices": m.graph.vertex_count,
                 "edges": m.graph.edge_count, "delta_y_only": m.delta_y_only}
                for m in self.members
            ],
            "moves": [[s, k, list(w), d] for s, k, w, d in self.moves],
        }


def _canon(g: Graph) -> tuple[str, Graph]:
    perm, cert = canonical_form(g)
    return cert, g.relabel(perm)


def closure(seed: Graph, allow_y_delta: bool = True, max_members: int = DEFAULT_MAX_MEMBERS) -> FamilyClosure:
    """Breadth-first closure of ``seed``; members in discovery order, the new
    members found from one source sorted by certificate."""
    seed.require_simple("closure")
    cert, rep = _canon(seed)
    fam = FamilyClosure([FamilyMember(cert, rep)], allow_y_delta=allow_y_delta)
    where = {cert: 0}
    head = 0
    while head < len(fam.members):
        g = fam.members[head].graph
        images = [("delta_y", t, delta_y(g, t)) for t in triangles(g)]
        if allow_y_delta:
            images += [("y_delta", (v,), y_delta(g, v)) for v in degree_three_vertices(g)]
        fresh: dict[str, Graph] = {}
        pending = []
        for kind, at, img in images:
            c, r = _canon(img)
            if c not in where and c not in fresh:
                fresh[c] = r
            pending.append((kind, at, c))
        for c in sorted(fresh):
            if len(fam.members) >= max_members:
                fam.complete = False
                _mark_delta_y_only(fam)
                raise BudgetExceeded(f"closure exceeded {max_members} members", partial=fam)
            where[c] = len(fam.members)
            fam.members.append(FamilyMember(c, fresh[c]))
        for kind, at, c in pending:
            fam.moves.append((head, kind, at, where[c]))
        head += 1
    _mark_delta_y_only(fam)
    return fam


def _mark_delta_y_only(fam: FamilyClosure) -> None:
    out: dict[int, list[int]] = {}
    for s, kind, _, d in fam.moves:
        if kind == "delta_y":
            out.setdefault(s, []).append(d)
    reach = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in out.get(v, ()):
            if w not in reach:
                reach.add(w)
                stack.append(w)
    for i, m in enumerate(fam.members):
        m.delta_y_only = i in reach


def descendants(seed: Graph, max_members: int = DEFAULT_MAX_MEMBERS) -> FamilyClosure:
    """Graphs reachable from ``seed`` by delta-Y moves only."""
    return closure(seed, allow_y_delta=False, max_members=max_members)


def family_report(fam: FamilyClosure, classify: bool = True, budget=None) -> dict:
    """Sizes and per-member vertex/edge counts, with IL / minor-minimal IL /
    IK classifications when ``classify`` is set."""
    from .minors import DEFAULT_BUDGET, classify_ik, is_il, is_minor_minimal_il

    budget = DEFAULT_BUDGET if budget is None else budget
    rows = []
    for i, m in enumerate(fam.members):
        row = {"index": i, "graph6": m.graph6, "vertices": m.graph.vertex_count,
               "edges": m.graph.edge_count, "delta_y_only": m.delta_y_only}
        if classify:
            row["is_il"] = is_il(m.graph, budget).is_il
            row["is_minor_minimal_il"] = is_minor_minimal_il(m.graph, budget)
            row["ik"] = classify_ik(m.graph, budget).verdict
        rows.append(row)
    return {
        "members": len(fam.members),
        "delta_y_only": sum(m.delta_y_only for m in fam.members),
        "ydelta_required": len(fam.ydelta_required),
        "complete": fam.complete,
        "rows": rows,
    }

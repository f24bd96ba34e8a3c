"""Planarity by the Demoucron-Malgrange-Pertuiset face-embedding algorithm.

Each biconnected block is embedded incrementally: start from a cycle, then
repeatedly pick a fragment (bridge) of the rest of the block, and route a
path of it through a face containing all of its attachment vertices. A
fragment with no such face proves the block non-planar. Fragments with a
single admissible face are placed first.
"""

from __future__ import annotations

from .graphcore import Graph


def _blocks(adj: dict[int, set[int]]) -> list[set[tuple[int, int]]]:
    """Edge sets of the biconnected components (Hopcroft-Tarjan)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    out: list[set[tuple[int, int]]] = []
    counter = 0

    for root in adj:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        work = [(root, None, iter(sorted(adj[root])))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    stack.append((v, w))
                    index[w] = low[w] = counter
                    counter += 1
                    work.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if low[v] >= index[parent]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.add(e)
                        if e == (parent, v):
                            break
                    out.append(block)
    return out


def _cycle(adj: dict[int, set[int]]) -> list[int]:
    """A simple cycle of a biconnected block with >= 3 vertices."""
    start = min(adj)
    nbrs = sorted(adj[start])
    a, b = nbrs[0], nbrs[1]
    # path from a to b avoiding start
    prev = {a: None}
    queue = [a]
    for v in queue:
        if v == b:
            break
        for w in sorted(adj[v]):
            if w != start and w not in prev:
                prev[w] = v
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return [start] + path[::-1]


def _planar_block(edges: set[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    nv, ne = len(adj), len(edges)
    if nv <= 4 or ne <= nv:
        return True
    if ne > 3 * nv - 6:
        return False

    cyc = _cycle(adj)
    faces = [list(cyc), list(cyc)]
    hv = set(cyc)
    he = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
    all_edges = {frozenset(e) for e in edges}

    while len(he) < len(all_edges):
        # fragments
        frags = []  # (attachments, kind, data)
        for e in sorted(all_edges - he, key=sorted):
            u, v = sorted(e)
            if u in hv and v in hv:
                frags.append(({u, v}, "edge", (u, v)))
        seen = set()
        for s in sorted(adj):
            if s in hv or s in seen:
                continue
            comp = {s}
            queue = [s]
            att = set()
            for v in queue:
                for w in adj[v]:
                    if w in hv:
                        att.add(w)
                    elif w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            frags.append((att, "comp", comp))

        chosen = None
        chosen_face = None
        for att, kind, data in frags:
            ok = [i for i, f in enumerate(faces) if att <= set(f)]
            if not ok:
                return False
            if chosen is None or (len(ok) == 1 and chosen_face[1] > 1):
                chosen = (att, kind, data)
                chosen_face = (ok[0], len(ok))
        att, kind, data = chosen
        fi = chosen_face[0]

        if kind == "edge":
            path = list(data)
        else:
            comp = data
            a = min(att)
            # BFS from a through the component to another attachment
            prev = {a: None}
            queue = [a]
            end = None
            for v in queue:
                if v != a and v in hv:
                    end = v
                    break
                for w in sorted(adj[v]):
                    if w in prev:
                        continue
                    if v == a and w not in comp:
                        continue
                    if w in comp or (w in hv and w != a):
                        prev[w] = v
                        queue.append(w)
            path = [end]
            while path[-1] != a:
                path.append(prev[path[-1]])
            path.reverse()

        face = faces[fi]
        a, b = path[0], path[-1]
        i, j = face.index(a), face.index(b)
        L = len(face)
        walk1 = [face[(i + k) % L] for k in range((j - i) % L + 1)]
        walk2 = [face[(j + k) % L] for k in range((i - j) % L + 1)]
        inner = path[1:-1]
        faces[fi] = walk1 + inner[::-1]
        faces.append(walk2 + inner)
        hv.update(path)
        for k in range(len(path) - 1):
            he.add(frozenset((path[k], path[k + 1])))
    return True


def is_planar_dmp(g: Graph) -> bool:
    s = g.simple()
    n, e = s.vertex_count, s.edge_count
    if n <= 4 or e <= 8:
        return True
    if e > 3 * n - 6:
        return False
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in s.edges:
        adj[u].add(v)
        adj[v].add(u)
    adj = {v: nb for v, nb in adj.items() if nb}
    return all(_planar_block(b) for b in _blocks(adj))


def is_planar_masks(adj: list[int]) -> bool:
    edges = [(u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1]
    return is_planar_dmp(Graph(len(adj), edges))

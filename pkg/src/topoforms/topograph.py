"""Topograph navigation: directed-edge cursors, vertex views, BFS, river and
well location, and dot/json export.

The tree is never materialized; a cursor is a form plus the turn word that
produced it, and every neighbour is reached by one of the moves of step().
"""

import json
from dataclasses import dataclass

from .exact import DomainError, is_square, surd_floor
from .forms import QuadForm, roots


@dataclass(frozen=True)
class EdgeCursor:
    """A directed edge carrying `form`; `path` records the turns from the
    declared root (provenance only, it never affects navigation)."""

    form: QuadForm
    path: tuple = ()


@dataclass(frozen=True)
class VertexView:
    regions: tuple  # (r, s, t)
    out_labels: tuple  # (e, f, g) directed out of the vertex


@dataclass(frozen=True)
class RiverDescriptor:
    kind: str  # "periodic" or "finite"
    edges: tuple  # EdgeCursor sequence: one period, or lake to lake
    word: tuple  # the L/R letters taken along edges


@dataclass(frozen=True)
class WellDescriptor:
    kind: str  # "vertex_well" or "edge_well"
    at: EdgeCursor
    labels: tuple


_STEPS = {
    "L": lambda a, b, c: (a, b + 2 * a, a + b + c),
    "R": lambda a, b, c: (a + b + c, b + 2 * c, c),
    "Li": lambda a, b, c: (a, b - 2 * a, a - b + c),
    "Ri": lambda a, b, c: (a - b + c, b - 2 * c, c),
    "S": lambda a, b, c: (c, -b, a),
}


def step(cur, turn):
    try:
        f = _STEPS[turn]
    except KeyError:
        raise DomainError(f"unknown turn {turn!r}") from None
    return EdgeCursor(QuadForm(*f(*cur.form)), cur.path + (turn,))


def head_view(cur):
    """The vertex the cursor points at."""
    a, b, c = cur.form
    return VertexView((a, c, a + b + c), (-b, b + 2 * a, b + 2 * c))


def tail_view(cur):
    """The vertex the cursor points away from."""
    a, b, c = cur.form
    return VertexView((a, c, a - b + c), (b, 2 * a - b, 2 * c - b))


def _root_frontier(root):
    # the three edges leaving the tail vertex of the root cursor
    back = step(root, "S")
    return [root, step(back, "L"), step(back, "R")]


def bfs_vertices(root, max_depth):
    """Every vertex within max_depth edges of the root cursor's tail vertex,
    exactly once, in deterministic (depth, then L-before-R) order."""
    if max_depth < 0:
        raise DomainError("negative depth")
    yield tail_view(root)
    frontier = _root_frontier(root)
    for _ in range(max_depth):
        nxt = []
        for cur in frontier:
            yield head_view(cur)
            nxt.append(step(cur, "L"))
            nxt.append(step(cur, "R"))
        frontier = nxt


def find_well(q):
    """Descend a definite topograph to its unique well.

    Each move goes to a strictly smaller neighbouring region (the climbing
    lemma guarantees termination); the well is the edge [a,0,c] or the
    vertex whose three outgoing labels are all positive.
    """
    if q.discriminant() >= 0:
        raise DomainError("find_well needs negative discriminant")
    if q.a < 0 or q.c < 0:
        raise DomainError("negative definite; negate the form first")
    cur = EdgeCursor(q)
    while True:
        a, b, c = cur.form
        if b == 0:
            return WellDescriptor("edge_well", cur, (a, c))
        if b < 0:
            cur = step(cur, "S")  # reorient so the positive label points out
            continue
        # tail out-labels are (b, 2a-b, 2c-b); all positive means well,
        # a zero label is an edge well, and crossing a negative label
        # replaces the opposite region r by r + 2*label (strictly smaller)
        back = step(cur, "S")
        if 2 * a - b == 0:
            at = step(back, "R")
            return WellDescriptor("edge_well", at, (at.form.a, at.form.c))
        if 2 * c - b == 0:
            at = step(back, "L")
            return WellDescriptor("edge_well", at, (at.form.a, at.form.c))
        if 2 * a - b > 0 and 2 * c - b > 0:
            return WellDescriptor("vertex_well", cur, (b, 2 * a - b, 2 * c - b))
        cur = step(back, "R") if 2 * a - b < 0 else step(back, "L")


def _simple(form):
    a, _, c = form
    return a > 0 > c


def find_river(q):
    """Locate the river: one full period for non-square D>0, or the whole
    lake-to-lake stretch for square D."""
    D = q.discriminant()
    if D <= 0:
        raise DomainError("find_river needs positive discriminant")
    if is_square(D):
        return _find_river_square(q)
    cur = EdgeCursor(q)
    # follow the root path of the first root: alternate L and R blocks whose
    # sizes are the continued-fraction terms of zeta
    letter = "L"
    guard = 0
    while not _simple(cur.form):
        z = roots(cur.form).first
        k = surd_floor(z) if letter == "L" else surd_floor(z.invert())
        turn = letter if k >= 0 else ("Li" if letter == "L" else "Ri")
        for _ in range(abs(k)):
            cur = step(cur, turn)
            if _simple(cur.form):
                break
        letter = "R" if letter == "L" else "L"
        guard += 1
        if guard > 10000:  # pragma: no cover
            raise AssertionError("root path failed to reach the river")
    anchor = cur.form
    edges = []
    word = []
    while True:
        edges.append(cur)
        a, b, c = cur.form
        turn = "L" if a + b + c < 0 else "R"
        word.append(turn)
        cur = step(cur, turn)
        if cur.form == anchor:
            break
    return RiverDescriptor("periodic", tuple(edges), tuple(word))


def _find_river_square(q):
    from .contfrac import normalize_parity, real_cf
    from .exact import Rat, isqrt
    from .reduce import reduce_square

    D = q.discriminant()
    m = isqrt(D)
    res = reduce_square(q)
    r = res.canonical.c
    start = EdgeCursor(QuadForm(r, -m, 0))  # on the left lake, zeta = m/r
    cf = normalize_parity(real_cf(Rat(m, r)), want_odd_index=True)
    letters = []
    for i, a in enumerate(cf.terms):
        letters.extend(["L" if i % 2 == 0 else "R"] * a)
    visited = [start]
    cur = start
    for t in letters:
        cur = step(cur, t)
        visited.append(cur)
    # first and last edges sit on the lakes; the rest is the river
    return RiverDescriptor("finite", tuple(visited[1:-1]),
                           tuple(letters[1:-1]))


def export(root, max_depth, fmt):
    """Serialize the BFS ball around the root as dot or json."""
    if fmt not in ("dot", "json"):
        raise DomainError(f"unknown format {fmt!r}")
    D = root.form.discriminant()
    records = []  # (id, regions, out_labels, parent, turn, edge_form)
    v = tail_view(root)
    records.append((0, v.regions, v.out_labels, None, None, None))
    frontier = []
    if max_depth > 0:
        for cur, turn in zip(_root_frontier(root), (None, "L", "R")):
            frontier.append((cur, 0, turn))
    next_id = 1
    for _ in range(max_depth):
        nxt = []
        for cur, parent, turn in frontier:
            v = head_view(cur)
            records.append((next_id, v.regions, v.out_labels, parent, turn,
                            cur.form))
            nxt.append((step(cur, "L"), next_id, "L"))
            nxt.append((step(cur, "R"), next_id, "R"))
            next_id += 1
        frontier = nxt
    if fmt == "json":
        doc = {
            "discriminant": str(D),
            "root": ",".join(str(x) for x in root.form),
            "vertices": [
                {
                    "id": i,
                    "regions": [str(x) for x in regs],
                    "out_labels": [str(x) for x in outs],
                    "parent": parent,
                    "turn": turn,
                }
                for i, regs, outs, parent, turn, _ in records
            ],
        }
        return json.dumps(doc, indent=2)
    lines = ["digraph topograph {"]
    for i, regs, _, _, _, _ in records:
        label = ",".join(str(x) for x in regs)
        lines.append(f'  v{i} [label="{label}"];')
    for i, _, _, parent, _, form in records:
        if parent is None:
            continue
        a, b, c = form
        lines.append(f'  v{parent} -> v{i} [label="{b} | {a} | {c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

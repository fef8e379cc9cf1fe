"""Memoized functional graph over encodings for one (base, width) pair.

Every non-zero encoding has exactly one successor under the encoding-space
step, so the graph is a union of rho shapes: trees hanging off cycles. One
pass with path-marking finds each node's successor, its terminal cycle, and
its depth, computing every successor exactly once.

Depth conventions. Internally, cycle members have depth 0 and every other
node is one more than its successor. The *reported* depth -- the iteration
count tabulated everywhere user-facing -- is internal depth + 1: the least
x >= 1 such that x applications of the raw step land on the terminal cycle.
The two agree off-cycle because distinct encodings map to distinct post-step
raw values, and a constant's own class reports depth 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .encoding import (
    Encoding,
    class_size,
    encode,
    encoding_count,
    enumerate_encodings,
    post_step_value,
    step_diffs,
)
from .errors import RepdigitInput, StateSpaceTooLarge, StepLimitExceeded
from .radix import DigitString, kaprekar_step

STATE_GUARD = 10_000_000
DEFAULT_MAX_STEPS = 64

Diffs = tuple[int, ...]


@dataclass(frozen=True)
class NodeRecord:
    encoding: Encoding
    successor: Encoding
    depth: int  # internal: 0 on a cycle
    cycle_id: int
    class_size: int

    @property
    def reported_depth(self) -> int:
        return self.depth + 1


@dataclass(frozen=True)
class Cycle:
    """Encodings closed under the step; a length-1 cycle is a fixed point."""

    members: tuple[Encoding, ...]

    @property
    def length(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class KaprekarGraph:
    base: int
    width: int
    nodes: dict[Encoding, NodeRecord]
    cycles: tuple[Cycle, ...]
    step_evaluations: int

    def node(self, e: Encoding) -> NodeRecord:
        return self.nodes[e]


ZERO_SINK = -1  # cycle_id of nodes whose orbit falls into the repdigit class


@dataclass
class SolvedSpace:
    """Raw solve of one encoding space, keyed by differential tuples."""

    base: int
    width: int
    successor: dict[Diffs, Diffs]
    depth: dict[Diffs, int]
    cycle_id: dict[Diffs, int]
    cycles: list[tuple[Diffs, ...]]
    step_evaluations: int


def solve_space(base: int, width: int, max_states: int | None = None) -> SolvedSpace:
    """Walk every successor chain once, marking the current path.

    Meeting a marked node closes a new cycle; meeting a solved node reuses
    its cached depth. Each encoding's successor is evaluated exactly once,
    which is where the speedup over the per-string sweep comes from.

    The zero class is not part of the domain, but a step can land in it (in
    some spaces a non-repdigit string's difference is a repdigit, e.g.
    20 - 02 = 11 in base 3). It is pre-seeded as a sink with depth 0 and
    cycle id ZERO_SINK so walks terminate there without listing it as a
    cycle.
    """
    if max_states is None:
        max_states = STATE_GUARD
    states = encoding_count(base, width)
    if states > max_states:
        raise StateSpaceTooLarge(
            f"(base={base}, width={width}) has {states} encoded states; guard is {max_states}"
        )

    zero = (0,) * (width // 2)
    succ: dict[Diffs, Diffs] = {zero: zero}
    depth: dict[Diffs, int] = {zero: 0}
    cycle_of: dict[Diffs, int] = {zero: ZERO_SINK}
    cycles: list[tuple[Diffs, ...]] = []
    steps = 0

    for start_enc in enumerate_encodings(base, width):
        start = start_enc.diffs
        if start == zero or start in depth:
            continue
        path: list[Diffs] = []
        on_path: dict[Diffs, int] = {}
        cur = start
        while cur not in depth and cur not in on_path:
            on_path[cur] = len(path)
            path.append(cur)
            nxt = step_diffs(cur, base, width)
            steps += 1
            succ[cur] = nxt
            cur = nxt
        if cur in on_path:
            # the path closed on itself: a newly discovered cycle
            cid = len(cycles)
            members = tuple(path[on_path[cur]:])
            cycles.append(members)
            for m in members:
                depth[m] = 0
                cycle_of[m] = cid
            tail = path[: on_path[cur]]
        else:
            tail = path
        for d in reversed(tail):
            nxt = succ[d]
            depth[d] = depth[nxt] + 1
            cycle_of[d] = cycle_of[nxt]

    return SolvedSpace(base, width, succ, depth, cycle_of, cycles, steps)


def build_graph(base: int, width: int, max_states: int | None = None) -> KaprekarGraph:
    """Solve the whole encoding space and attach class sizes per node.

    A node's cycle_id is ZERO_SINK when its orbit drains into the repdigit
    class instead of a genuine cycle; such nodes still carry exact depths.
    """
    solved = solve_space(base, width, max_states)
    zero = (0,) * (width // 2)

    def to_encoding(diffs: Diffs) -> Encoding:
        return Encoding(base, width, diffs)

    nodes = {}
    for enc in enumerate_encodings(base, width):
        if enc.diffs == zero:
            continue
        nodes[enc] = NodeRecord(
            encoding=enc,
            successor=to_encoding(solved.successor[enc.diffs]),
            depth=solved.depth[enc.diffs],
            cycle_id=solved.cycle_id[enc.diffs],
            class_size=class_size(enc),
        )
    cycle_objs = tuple(
        Cycle(tuple(to_encoding(d) for d in members)) for members in solved.cycles
    )
    return KaprekarGraph(base, width, nodes, cycle_objs, solved.step_evaluations)


@dataclass(frozen=True)
class Trace:
    """An orbit ending at its first repeated value."""

    values: tuple[DigitString, ...]
    kind: str  # fixed-point | cycle | zero
    cycle_length: int


def trace(n: DigitString, max_steps: int = DEFAULT_MAX_STEPS) -> Trace:
    """Raw orbit of n up to and including the first repeated value."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    seen = {n.digits: 0}
    values = [n]
    cur = n
    for _ in range(max_steps):
        cur = kaprekar_step(cur)
        values.append(cur)
        if cur.digits in seen:
            entry = seen[cur.digits]
            members = values[entry:-1]
            if not any(cur.digits):
                kind = "zero"
            elif len(members) == 1:
                kind = "fixed-point"
            else:
                kind = "cycle"
            return Trace(values=tuple(values), kind=kind, cycle_length=len(members))
        seen[cur.digits] = len(values) - 1
    raise StepLimitExceeded(f"no repeat within {max_steps} steps from {n.digits}")


def depth_of(n: DigitString, g: KaprekarGraph) -> int:
    """Reported depth of a raw string: least x >= 1 with K^x(n) on the cycle."""
    if n.base != g.base or n.width != g.width:
        raise ValueError(
            f"string is over (base={n.base}, width={n.width}); "
            f"graph is (base={g.base}, width={g.width})"
        )
    if n.is_repdigit():
        raise RepdigitInput(f"{n.digits} is a repdigit; depth is undefined")
    return g.nodes[encode(n)].reported_depth


def cycles_of(g: KaprekarGraph) -> tuple[Cycle, ...]:
    """All terminal cycles in encoding space (the zero class is excluded)."""
    return g.cycles


def cycle_values(g: KaprekarGraph, cycle: Cycle) -> tuple[DigitString, ...]:
    """Decode a cycle to the raw values that actually loop.

    The raw cycle member in class e is the (unique) post-step value of the
    cycle predecessor of e.
    """
    members = cycle.members
    return tuple(post_step_value(members[i - 1]) for i in range(len(members)))


def graph_to_json(g: KaprekarGraph) -> str:
    """One record per encoding plus a cycle table, in enumeration order."""
    nodes = []
    for e in enumerate_encodings(g.base, g.width):
        if e.is_zero():
            continue
        rec = g.nodes[e]
        nodes.append(
            {
                "encoding": str(e),
                "successor": str(rec.successor),
                "reported_depth": rec.reported_depth,
                "cycle_id": rec.cycle_id,
                "class_size": rec.class_size,
            }
        )
    cycles = []
    for cid, cyc in enumerate(g.cycles):
        cycles.append(
            {
                "id": cid,
                "length": cyc.length,
                "members": [str(m) for m in cyc.members],
                "values": [list(v.digits) for v in cycle_values(g, cyc)],
            }
        )
    doc = {
        "base": g.base,
        "width": g.width,
        "state_count": encoding_count(g.base, g.width),
        "nodes": nodes,
        "cycles": cycles,
    }
    return json.dumps(doc, indent=2) + "\n"


def graph_to_dot(g: KaprekarGraph) -> str:
    """DOT export: encoding nodes, successor edges labeled with the source
    class size (how many raw strings flow along the edge)."""
    lines = [f'digraph "kaprekar_b{g.base}_n{g.width}" {{']
    has_zero_sink = any(rec.successor.is_zero() for rec in g.nodes.values())
    if has_zero_sink:
        zero = Encoding(g.base, g.width, (0,) * (g.width // 2))
        lines.append(f'  "{zero}" [label="{zero}" shape=box];')
    for e in enumerate_encodings(g.base, g.width):
        if e.is_zero():
            continue
        rec = g.nodes[e]
        shape = " shape=doublecircle" if rec.depth == 0 else ""
        lines.append(f'  "{e}" [label="{e}"{shape}];')
    for e in enumerate_encodings(g.base, g.width):
        if e.is_zero():
            continue
        rec = g.nodes[e]
        lines.append(f'  "{e}" -> "{rec.successor}" [label="{rec.class_size}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

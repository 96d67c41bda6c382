"""Decomposition trees, cycle geometries, length accounting, validity checks.

A decomposition of n punctures is a full binary tree with the n point
indices as leaves and one cycle per internal node (n-1 cycles). Three cycle
classes exist, one per solver family:

  IntervalCycle(i, j) — rank interval over the x-order, length 2*(x_j - x_i)
  RectCycle(rect)     — axis-aligned rectangle, length = perimeter
  RunCycle(a, b)      — contiguous tour-position run, length twice the path
                        edges between positions a..b (out-and-back)

All tree traversals here are iterative: optimal trees can degenerate into
depth-n chains, which would overflow Python's recursion stack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from pantsdecomp.geom import Point, PointSet, Rect, euclid_dist, rect_perimeter


@dataclass(frozen=True)
class IntervalCycle:
    """Cycle around the points with x-order positions i..j (0-based, i <= j)."""
    i: int
    j: int


@dataclass(frozen=True)
class RectCycle:
    rect: Rect


@dataclass(frozen=True)
class RunCycle:
    """Cycle around the points at tour positions a..b (0-based, a <= b)."""
    a: int
    b: int


CycleGeom = Union[IntervalCycle, RectCycle, RunCycle]


@dataclass(frozen=True, eq=False)
class Leaf:
    index: int


@dataclass(frozen=True, eq=False)
class Internal:
    cycle: CycleGeom
    left: "Node"
    right: "Node"


Node = Union[Leaf, Internal]


@dataclass(frozen=True, eq=False)
class DecompTree:
    root: Node

    def nodes(self) -> Iterator[Node]:
        """Preorder traversal, left before right."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, Internal):
                stack.append(node.right)
                stack.append(node.left)

    def internal_nodes(self) -> Iterator[Internal]:
        for node in self.nodes():
            if isinstance(node, Internal):
                yield node

    def leaf_indices(self) -> list[int]:
        return [node.index for node in self.nodes() if isinstance(node, Leaf)]

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_indices())


@dataclass(frozen=True)
class Violation:
    node: str
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "valid"
        return "; ".join(f"{v.kind}@{v.node}: {v.detail}" for v in self.violations)


@dataclass
class SolveStats:
    states_evaluated: int = 0
    candidates_examined: int = 0
    wall_time: float = 0.0


@dataclass
class SolveResult:
    """Universal solver output: cost, tree, and instrumentation.

    Solver-specific attachments (DP tables, tour, MST, per-diagonal counts)
    ride along as optional fields.
    """

    cost: float
    tree: DecompTree
    stats: SolveStats = field(default_factory=SolveStats)
    tables: object | None = None
    tour: object | None = None
    mst: object | None = None
    diag_candidates: object | None = None


# ---------------------------------------------------------------------------
# Length accounting


def cycle_length(cycle: CycleGeom, sorted_xs, path_prefix) -> float:
    if isinstance(cycle, IntervalCycle):
        return 2.0 * (sorted_xs[cycle.j] - sorted_xs[cycle.i])
    if isinstance(cycle, RectCycle):
        return rect_perimeter(cycle.rect)
    if isinstance(cycle, RunCycle):
        return 2.0 * (path_prefix[cycle.b] - path_prefix[cycle.a])
    raise TypeError(f"unknown cycle class: {cycle!r}")


def tour_path_prefix(ps: PointSet, order) -> list[float]:
    """prefix[t] = length of the tour path from position 0 to position t."""
    prefix = [0.0]
    for t in range(1, len(order)):
        prefix.append(prefix[-1] + euclid_dist(ps.points[order[t - 1]],
                                               ps.points[order[t]]))
    return prefix


def total_length(tree: DecompTree, ps: PointSet, tour=None) -> float:
    """Sum of cycle lengths over all internal nodes (multiplicity counted).

    A tour is required iff any cycle is a RunCycle.
    """
    sorted_xs = ps.sorted_xs()
    path_prefix = None
    total = 0.0
    for node in tree.internal_nodes():
        cycle = node.cycle
        if isinstance(cycle, RunCycle):
            if tour is None:
                raise ValueError("missing tour: run cycles need the tour order")
            if path_prefix is None:
                path_prefix = tour_path_prefix(ps, tour.order)
        total += cycle_length(cycle, sorted_xs, path_prefix)
    return total


# ---------------------------------------------------------------------------
# Shared validator plumbing


def _check_cycle_class(tree: DecompTree, klass) -> None:
    for node in tree.internal_nodes():
        if not isinstance(node.cycle, klass):
            raise ValueError(
                f"cycle class mismatch: expected {klass.__name__}, "
                f"got {type(node.cycle).__name__}")


def _leaf_permutation_violations(tree: DecompTree, n: int) -> list[Violation]:
    seen: dict[int, int] = {}
    for idx in tree.leaf_indices():
        seen[idx] = seen.get(idx, 0) + 1
    out = []
    for idx, count in sorted(seen.items()):
        if idx < 0 or idx >= n:
            out.append(Violation(f"leaf[{idx}]", "V1", f"index {idx} out of range 0..{n - 1}"))
        elif count > 1:
            out.append(Violation(f"leaf[{idx}]", "V1", f"index {idx} appears {count} times"))
    for idx in range(n):
        if idx not in seen:
            out.append(Violation(f"leaf[{idx}]", "V1", f"index {idx} missing"))
    return out


def _contiguity_violations(tree: DecompTree, pos_of_leaf, n: int,
                           lo_of, hi_of, kind_name: str) -> list[Violation]:
    """Shared check for interval and run trees: every internal node's range
    [lo, hi] must be split by its children into [lo, k] and [k+1, hi]."""
    out = []
    # Bottom-up ranges computed iteratively (post-order via reversed preorder).
    order = list(tree.nodes())
    span: dict[int, tuple[int, int]] = {}
    for node in reversed(order):
        if isinstance(node, Leaf):
            p = pos_of_leaf(node.index)
            span[id(node)] = (p, p)
        else:
            ll, lh = span[id(node.left)]
            rl, rh = span[id(node.right)]
            span[id(node)] = (min(ll, rl), max(lh, rh))
    for node in order:
        if isinstance(node, Leaf):
            continue
        lo, hi = lo_of(node), hi_of(node)
        name = f"{kind_name}[{lo},{hi}]"
        ll, lh = span[id(node.left)]
        rl, rh = span[id(node.right)]
        if (ll, lh) > (rl, rh):
            (ll, lh), (rl, rh) = (rl, rh), (ll, lh)
        if not (ll == lo and rh == hi and lh + 1 == rl):
            out.append(Violation(
                name, "partition",
                f"children cover [{ll},{lh}] and [{rl},{rh}], not a split of [{lo},{hi}]"))
    return out


def validate_interval_tree(tree: DecompTree, ps: PointSet) -> ValidationReport:
    """Check an interval-cycle tree: leaves are a permutation and every
    internal interval [i,j] splits into children [i,k] and [k+1,j]."""
    _check_cycle_class(tree, IntervalCycle)
    n = ps.n
    violations = _leaf_permutation_violations(tree, n)
    if not violations:
        violations += _contiguity_violations(
            tree, lambda idx: ps.x_pos[idx], n,
            lambda nd: nd.cycle.i, lambda nd: nd.cycle.j, "interval")
    return ValidationReport(tuple(violations))


def validate_run_tree(tree: DecompTree, tour) -> ValidationReport:
    """Same contiguity check in tour-position space; root run is [0, n-1]."""
    _check_cycle_class(tree, RunCycle)
    n = len(tour.order)
    pos = {point: p for p, point in enumerate(tour.order)}
    violations = _leaf_permutation_violations(tree, n)
    if not violations:
        violations += _contiguity_violations(
            tree, lambda idx: pos[idx], n,
            lambda nd: nd.cycle.a, lambda nd: nd.cycle.b, "run")
        if isinstance(tree.root, Internal):
            root = tree.root.cycle
            if (root.a, root.b) != (0, n - 1):
                violations.append(Violation(
                    f"run[{root.a},{root.b}]", "root", f"root run is not [0,{n - 1}]"))
    return ValidationReport(tuple(violations))


def validate_box_tree(tree: DecompTree, ps: PointSet,
                      require_tight: bool = False) -> ValidationReport:
    """Check a rectangle-cycle tree.

    V1: leaves are a permutation of 0..n-1.
    V2: each internal rectangle contains (closed) its descendants' points and
        both children's rectangles.
    V3: sibling rectangles have disjoint open interiors (touching allowed).
    V4: no point lies strictly inside a rectangle that is not its ancestor.

    With require_tight, each rectangle must equal the tight bounding box of
    its descendant points (solver outputs satisfy this; hand-built valid
    trees need not).
    """
    _check_cycle_class(tree, RectCycle)
    n = ps.n
    violations = _leaf_permutation_violations(tree, n)

    order = list(tree.nodes())
    members: dict[int, int] = {}  # bitmask of descendant leaf indices
    for node in reversed(order):
        if isinstance(node, Leaf):
            members[id(node)] = 1 << node.index
        else:
            members[id(node)] = members[id(node.left)] | members[id(node.right)]

    def rect_of(node: Node) -> Optional[Rect]:
        return node.cycle.rect if isinstance(node, Internal) else None

    for node in order:
        if isinstance(node, Leaf):
            continue
        rect = node.cycle.rect
        name = f"rect[{rect.xmin},{rect.xmax}]x[{rect.ymin},{rect.ymax}]"
        mask = members[id(node)]
        # V2: descendant points inside (closed), children rects inside.
        for idx in range(n):
            if mask >> idx & 1 and not rect.contains_point(ps.points[idx]):
                violations.append(Violation(
                    name, "V2", f"descendant point {idx} outside rectangle"))
        for side, child in (("left", node.left), ("right", node.right)):
            crect = rect_of(child)
            if crect is not None and not rect.contains_rect(crect):
                violations.append(Violation(
                    name, "V2", f"{side} child rectangle not contained"))
        # V3: children interiors disjoint.
        lrect, rrect = rect_of(node.left), rect_of(node.right)
        lbox = lrect if lrect is not None else _point_rect(ps, node.left.index)
        rbox = rrect if rrect is not None else _point_rect(ps, node.right.index)
        if lbox.interior_intersects(rbox):
            violations.append(Violation(name, "V3", "sibling interiors overlap"))
        # V4: foreign points must not be strictly inside.
        for idx in range(n):
            if not (mask >> idx & 1) and rect.contains_point(ps.points[idx], strict=True):
                violations.append(Violation(
                    name, "V4", f"foreign point {idx} strictly inside rectangle"))
        if require_tight:
            tight = _mask_bbox(ps, mask)
            if tight != rect:
                violations.append(Violation(
                    name, "tightness", f"rectangle is not the tight bbox {tight}"))
    return ValidationReport(tuple(violations))


def _point_rect(ps: PointSet, idx: int) -> Rect:
    p = ps.points[idx]
    return Rect(p.x, p.x, p.y, p.y)


def _mask_bbox(ps: PointSet, mask: int) -> Rect:
    xs = []
    ys = []
    idx = 0
    while mask:
        if mask & 1:
            xs.append(ps.points[idx].x)
            ys.append(ps.points[idx].y)
        mask >>= 1
        idx += 1
    return Rect(min(xs), max(xs), min(ys), max(ys))

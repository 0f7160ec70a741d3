"""Recognition of graphs that admit a tree-of-parts structure.

Two phases.  Splitting repeatedly cuts the graph along bridges until every
piece is bridgeless, then requires each piece (atom) to belong to a
registered family; the pieces and the single edges between them form a
tree.  Merging tries each atom as the root in turn and walks the rooted
tree children-first, at every node absorbing leaf children through a
largest-possible set of its downward connectors so that at most `c`
connectors survive and the enlarged part stays inside a family.  If some
node cannot shed enough connectors for any root choice, the graph has no
structure with the requested bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import GraphError, NotInFamilyError
from .families import FamilyRegistry
from .graph import Graph
from .structure import SimpleTreeStructure, mdc, validate_structure


@dataclass(frozen=True)
class AtomForest:
    """Bridgeless family pieces and the single edges joining them."""

    atoms: tuple[tuple[int, ...], ...]
    links: dict[tuple[int, int], tuple[int, int]]  # (atom l, atom m) -> edge (x, y)


@dataclass
class RecognitionOutcome:
    member: bool
    structure: SimpleTreeStructure | None
    roots_tried: int
    failure_detail: str | None = None
    stats: dict = field(default_factory=dict)


def split_phase(
    g: Graph, registry: FamilyRegistry, events: list | None = None
) -> AtomForest:
    """Cut along bridges until bridgeless, then check family membership.

    Always cuts the lexicographically smallest bridge of the piece at
    hand.  Raises NotInFamilyError as soon as a bridgeless piece belongs
    to no registered family.  When `events` is a list, one record per cut
    is appended to it.
    """
    queue = [list(range(g.n))]
    atoms = []
    while queue:
        vs = queue.pop(0)
        sub, mapping = g.induced_subgraph(vs)
        bridges = sub.bridges()
        if bridges:
            # vs is sorted, so local order mirrors global order and the
            # first local bridge is also globally smallest.
            a, b = bridges[0]
            sides = _split_on_edge(sub, a, b)
            inv = {local: vs[local] for local in range(sub.n)}
            if events is not None:
                events.append({"piece": list(vs), "bridge": [vs[a], vs[b]]})
            for side in sides:
                queue.append(sorted(inv[x] for x in side))
            continue
        if registry.lookup(sub) is None:
            raise NotInFamilyError(
                f"bridgeless piece {vs} fits no registered family", atom=tuple(vs)
            )
        atoms.append(tuple(vs))
    atoms.sort(key=lambda a: a[0])
    links: dict[tuple[int, int], tuple[int, int]] = {}
    for l in range(len(atoms)):
        for m in range(l + 1, len(atoms)):
            count = g.cross_edge_count(atoms[l], atoms[m])
            if count == 0:
                continue
            if count > 1:
                raise AssertionError(
                    f"atoms {l} and {m} share {count} edges; splitting is broken"
                )
            right = set(atoms[m])
            edge = next(
                (x, y)
                for x in atoms[l]
                for y in sorted(g.neighbor_set(x) & right)
            )
            links[(l, m)] = edge
    if len(links) != len(atoms) - 1:
        raise AssertionError("atom links do not form a tree; splitting is broken")
    return AtomForest(tuple(atoms), links)


def _split_on_edge(sub: Graph, a: int, b: int) -> list[list[int]]:
    """The two components left after deleting one cut edge."""
    sides = []
    for start, other in ((a, b), (b, a)):
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in sub.neighbor_set(v):
                if (v, w) in ((a, b), (b, a)):
                    continue
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        sides.append(sorted(seen))
    if len(sides[0]) + len(sides[1]) != sub.n:
        raise AssertionError("cut edge did not split the piece in two")
    return sides


class _RootFailed(Exception):
    pass


def merge_phase(
    g: Graph,
    forest: AtomForest,
    c: int,
    registry: FamilyRegistry,
    debug: bool = False,
    trace: list | None = None,
) -> tuple[SimpleTreeStructure, int]:
    """Search root choices and leaf merges for a structure with <= c connectors.

    Returns the structure and the number of roots tried.  Raises
    NotInFamilyError when the last root fails.  When `trace` is a list,
    one record per root trial is appended to it.
    """
    h = len(forest.atoms)
    neighbors: dict[int, list[int]] = {i: [] for i in range(h)}
    for (l, m) in forest.links:
        neighbors[l].append(m)
        neighbors[m].append(l)

    member_memo: dict[frozenset, bool] = {}

    def in_family(vertices: frozenset) -> bool:
        if vertices not in member_memo:
            sub, _ = g.induced_subgraph(sorted(vertices))
            member_memo[vertices] = registry.lookup(sub) is not None
        return member_memo[vertices]

    last_error = None
    for r in range(h):
        record: dict | None = None
        if trace is not None:
            record = {"root": r, "visits": [], "accepted": False}
            trace.append(record)
        try:
            structure = _try_root(
                g, forest, neighbors, r, c, in_family, debug, registry, record
            )
            if record is not None:
                record["accepted"] = True
            return structure, r + 1
        except _RootFailed as exc:
            last_error = str(exc)
            if record is not None:
                record["failure"] = last_error
    raise NotInFamilyError(
        f"no root admits a structure with at most {c} connectors per part; "
        f"last failure: {last_error}"
    )


def _try_root(g, forest, neighbors, r, c, in_family, debug, registry, record=None):
    h = len(forest.atoms)
    parent: dict[int, int] = {r: -1}
    order = [r]
    stack = [r]
    while stack:
        node = stack.pop()
        for nb in sorted(neighbors[node]):
            if nb not in parent:
                parent[nb] = node
                order.append(nb)
                stack.append(nb)
    # dc vertex serving each child = the link endpoint inside the parent atom.
    dc_of: dict[int, int] = {}
    for child, par in parent.items():
        if par == -1:
            continue
        key = (min(child, par), max(child, par))
        x, y = forest.links[key]
        dc_of[child] = x if key[0] == par else y

    blob = {i: set(forest.atoms[i]) for i in range(h)}
    kids = {i: [] for i in range(h)}
    for node in order:
        if parent[node] != -1:
            kids[parent[node]].append(node)

    def current_structure() -> SimpleTreeStructure:
        alive = sorted(blob)
        index = {node: idx for idx, node in enumerate(alive)}
        parts = [tuple(sorted(blob[node])) for node in alive]
        par = [index[parent[node]] if parent[node] != -1 else -1 for node in alive]
        return SimpleTreeStructure.derive(g, parts, par)

    def current_mdc() -> int:
        worst = 0
        for node in blob:
            worst = max(worst, len({dc_of[ch] for ch in kids[node]}))
        return worst

    if current_mdc() <= c:
        if record is not None:
            record["immediate"] = True
        return current_structure()

    post = [node for node in reversed(order)]  # children precede parents
    for node in post:
        groups: dict[int, list[int]] = {}
        for ch in kids[node]:
            groups.setdefault(dc_of[ch], []).append(ch)
        connectors = sorted(groups)
        found = None
        picked: tuple[int, ...] = ()
        for size in range(len(connectors), max(0, len(connectors) - c) - 1, -1):
            for chosen in combinations(connectors, size):
                absorbed = [ch for u in chosen for ch in groups[u]]
                if any(kids[ch] for ch in absorbed):
                    continue  # only childless parts may be absorbed
                merged = frozenset(blob[node]).union(*(blob[ch] for ch in absorbed))
                if in_family(merged):
                    found = absorbed
                    picked = chosen
                    break
            if found is not None:
                break
        if record is not None:
            record["visits"].append({
                "part": sorted(blob[node]),
                "dc_vertices": connectors,
                "absorbed_via": list(picked) if found is not None else None,
                "absorbed_parts": [sorted(blob[ch]) for ch in (found or [])],
            })
        if found is None:
            raise _RootFailed(
                f"root {r}: part at atom {node} cannot reduce below "
                f"{len(connectors)} connectors"
            )
        for ch in found:
            blob[node] |= blob[ch]
            del blob[ch]
            del kids[ch]
        kids[node] = [ch for ch in kids[node] if ch not in set(found)]
        if debug:
            report = validate_structure(g, current_structure(), registry)
            assert report.valid, f"merge broke the structure: {report.violations}"
    return current_structure()


def recognize(
    g: Graph,
    c: int,
    registry: FamilyRegistry,
    debug: bool = False,
    explain: bool = False,
) -> RecognitionOutcome:
    """Decide membership in the family of c-bounded tree-of-parts graphs.

    The graph must be connected; split disconnected inputs into components
    first.  A positive outcome carries a structure that validates with at
    most `c` downward connectors per part.  With `explain` the stats hold
    a machine-readable trace of every cut and merge decision.
    """
    if g.n == 0:
        raise GraphError("cannot recognize the empty graph")
    if len(g.connected_components()) != 1:
        raise GraphError("recognition needs a connected graph; decompose first")
    if c < 1:
        raise GraphError(f"connector bound must be positive, got {c}")
    splits: list | None = [] if explain else None
    roots_trace: list | None = [] if explain else None

    def with_explain(stats: dict) -> dict:
        if explain:
            stats["explain"] = {"splits": splits, "roots": roots_trace}
        return stats

    try:
        forest = split_phase(g, registry, events=splits)
    except NotInFamilyError as exc:
        return RecognitionOutcome(
            False, None, 0, exc.detail, with_explain({"phase": "split"})
        )
    try:
        structure, roots = merge_phase(
            g, forest, c, registry, debug=debug, trace=roots_trace
        )
    except NotInFamilyError as exc:
        return RecognitionOutcome(
            False, None, len(forest.atoms), exc.detail,
            with_explain({"phase": "merge", "atoms": len(forest.atoms)}),
        )
    return RecognitionOutcome(
        True, structure, roots, None,
        with_explain({"atoms": len(forest.atoms), "parts": len(structure.parts)}),
    )

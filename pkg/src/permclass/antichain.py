"""The mu family of pairwise-incomparable permutations, its graph
certificates, and finite class/basis computations.

mu(i) (odd i >= 7) is built so that its ascent graph is a double fork: a path
with one pendant hung on the second and one on the penultimate path vertex.
Double forks of distinct sizes are mutually non-embeddable, which certifies
incomparability of the mu's in one direction; the direct pairwise containment
check is the default verification route.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import perm as P
from .errors import InvalidIndex, NotATree
from .perm import Perm


@dataclass(frozen=True)
class PermGraph:
    """Ascent graph: vertex i is the point (i, p(i)); i-j is an edge iff the
    two points form an ascent."""

    n: int
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class Tree:
    n: int
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class AvoidanceBasis:
    perms: tuple[Perm, ...]


@dataclass(frozen=True)
class ClosureOf:
    perms: tuple[Perm, ...]


ClassSpec = AvoidanceBasis | ClosureOf

SHORT_BASIS = tuple(
    Perm.from_text(t) for t in ("123", "3214", "2143", "15432")
)


def mu(i: int) -> Perm:
    """Member of the infinite antichain, indexed by its length (odd, >= 7)."""
    if i < 7 or i % 2 == 0:
        raise InvalidIndex(f"index must be odd and >= 7, got {i}")
    k = (i - 5) // 2
    vals = [2 * k + 2, 2 * k + 5, 2 * k + 4]
    for j in range(k, 1, -1):
        vals.extend((2 * j, 2 * j + 3))
    vals.extend((1, 5, 3, 2))
    return Perm(tuple(vals))


def perm_graph(p: Perm) -> PermGraph:
    n = len(p)
    edges = frozenset(
        (i, j)
        for i, j in combinations(range(1, n + 1), 2)
        if p[i - 1] < p[j - 1]
    )
    return PermGraph(n, edges)


def double_fork(i: int) -> Tree:
    """Path on i-2 vertices with pendants at the second and penultimate
    path vertices; i vertices total."""
    if i < 6:
        raise InvalidIndex(f"double fork needs >= 6 vertices, got {i}")
    path_len = i - 2
    edges = {(j, j + 1) for j in range(1, path_len)}
    edges.add((2, path_len + 1))
    edges.add((path_len - 1, path_len + 2))
    return Tree(i, frozenset(tuple(sorted(e)) for e in edges))


def _adjacency(n: int, edges: Iterable[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in range(1, n + 1):
        adj.setdefault(v, [])
    return adj


def is_tree(g: PermGraph | Tree) -> bool:
    n, edges = g.n, list(g.edges)
    if n == 0 or len(edges) != n - 1:
        return False
    adj = _adjacency(n, edges)
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def _centers(n: int, adj: dict[int, list[int]]) -> list[int]:
    if n == 1:
        return [1]
    degree = {v: len(adj[v]) for v in adj}
    leaves = deque(v for v, d in degree.items() if d <= 1)
    remaining = n
    while remaining > 2:
        layer = len(leaves)
        remaining -= layer
        for _ in range(layer):
            v = leaves.popleft()
            degree[v] = 0
            for w in adj[v]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        leaves.append(w)
    return sorted(leaves)


def _encode(adj: dict[int, list[int]], root: int, parent: int) -> tuple:
    return tuple(
        sorted(_encode(adj, w, root) for w in adj[root] if w != parent)
    )


def tree_canonical(g: PermGraph | Tree) -> tuple:
    """Canonical form of an unlabeled tree: rooted encodings at its center(s)."""
    if not is_tree(g):
        raise NotATree(f"not a tree: {g.n} vertices, {len(g.edges)} edges")
    adj = _adjacency(g.n, g.edges)
    return tuple(sorted(_encode(adj, c, 0) for c in _centers(g.n, adj)))


def tree_isomorphic(a: PermGraph | Tree, b: PermGraph | Tree) -> bool:
    return tree_canonical(a) == tree_canonical(b)


def is_antichain(
    ps: Iterable[Perm],
) -> tuple[bool, Optional[tuple[Perm, Perm]]]:
    """Pairwise incomparability check; on failure returns a comparable pair
    (pattern, host) as witness."""
    items = sorted(set(ps))
    for a, b in combinations(items, 2):
        if P.contains(a, b):
            return False, (a, b)
        if P.contains(b, a):
            return False, (b, a)
    return True, None


def _closure_by_length(gens: Iterable[Perm], floor: int) -> dict[int, set[Perm]]:
    by_len: dict[int, set[Perm]] = defaultdict(set)
    for g in gens:
        by_len[len(g)].add(g)
    if not by_len:
        return by_len
    for length in range(max(by_len), floor, -1):
        for p in by_len[length]:
            by_len[length - 1] |= P.deletions(p)
    return by_len


def closure_members(gens: Iterable[Perm], n: int) -> set[Perm]:
    """All length-n members of the downward closure of the generators."""
    gens = [g for g in gens if len(g) >= n]
    return set(_closure_by_length(gens, n).get(n, set()))


def normalize_basis(perms: Iterable[Perm]) -> tuple[Perm, ...]:
    """Keep only the containment-minimal elements."""
    items = sorted(set(perms))
    out = [
        p
        for p in items
        if not any(q != p and P.contains(q, p) for q in items)
    ]
    return tuple(out)


def normalize_generators(perms: Iterable[Perm]) -> tuple[Perm, ...]:
    """Keep only the containment-maximal generators."""
    items = sorted(set(perms))
    out = [
        p
        for p in items
        if not any(q != p and P.contains(p, q) for q in items)
    ]
    return tuple(out)


def members(c: ClassSpec, n: int) -> set[Perm]:
    """Length-n members of the class."""
    if isinstance(c, AvoidanceBasis):
        basis = normalize_basis(c.perms)
        return {
            p
            for p in P.all_perms(n)
            if not any(P.contains(b, p) for b in basis)
        }
    gens = normalize_generators(c.perms)
    return closure_members(gens, n)


def basis_up_to(c: ClassSpec, max_len: int) -> set[Perm]:
    """All containment-minimal non-members of length <= max_len.

    Candidates at length m are one-point extensions (inserting the maximum
    value) of length-(m-1) members: every minimal non-member arises this way
    because all of its one-point deletions are members.
    """
    if isinstance(c, AvoidanceBasis):
        c = AvoidanceBasis(normalize_basis(c.perms))
        level_members = {m: members(c, m) for m in range(1, max_len + 1)}
    else:
        c = ClosureOf(normalize_generators(c.perms))
        by_len = _closure_by_length(c.perms, 0)
        level_members = {
            m: set(by_len.get(m, set())) for m in range(1, max_len + 1)
        }
    basis: set[Perm] = set()
    prev = {P.EMPTY}
    for m in range(1, max_len + 1):
        mem = level_members[m]
        candidates: set[Perm] = set()
        for p in prev:
            for pos in range(len(p) + 1):
                candidates.add(
                    Perm(p.values[:pos] + (m,) + p.values[pos:])
                )
        below = level_members.get(m - 1, set()) if m > 1 else {P.EMPTY}
        for cand in candidates:
            if cand in mem:
                continue
            if all(d in below for d in P.deletions(cand)):
                basis.add(cand)
        prev = mem
    return basis

"""Planar knot diagrams in PD form, the Kauffman bracket, and certificates.

A crossing is a 4-tuple of edge labels in counterclockwise order starting at
an under-strand edge, so slots 0 and 2 carry the under-strand and slots 1 and
3 the over-strand (the standard PD convention).  Conventions fixed here:

* bracket normalization: <unknot> = 1;
* smoothing: the A-smoothing of ``(e0, e1, e2, e3)`` joins e0-e1 and e2-e3,
  the B-smoothing joins e0-e3 and e1-e2; a positive kink evaluates to -A**3;
* Jones variable: t = A**-4, and ``jones`` returns the polynomial in t.

The bracket has two independent evaluation routes: a state-merging sweep that
memoizes partial contractions (the production path, fine up to a few hundred
crossings) and a raw 2**c state enumeration kept as the oracle for small
diagrams.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import DomainError
from .laurent import LaurentPoly

Crossing = tuple[int, int, int, int]

_DELTA = LaurentPoly({2: -1, -2: -1})


@dataclass(frozen=True)
class PDDiagram:
    """A planar diagram: crossings, crossingless circles, open boundary labels.

    Interior edge labels appear exactly twice among the crossing slots;
    boundary labels (open tangle ends) exactly once.
    """

    crossings: tuple[Crossing, ...] = ()
    circles: int = 0
    boundary: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple(tuple(c) for c in self.crossings)
        )
        object.__setattr__(self, "boundary", tuple(self.boundary))
        if self.circles < 0:
            raise DomainError("negative circle count")
        for c in self.crossings:
            if len(c) != 4:
                raise DomainError(f"crossing {c!r} does not have four edges")
        counts: dict[int, int] = {}
        for c in self.crossings:
            for l in c:
                counts[l] = counts.get(l, 0) + 1
        bset = set(self.boundary)
        if len(bset) != len(self.boundary):
            raise DomainError("duplicate boundary labels")
        for l, n in counts.items():
            want = 1 if l in bset else 2
            if n != want:
                raise DomainError(
                    f"edge label {l} appears {n} times, expected {want}"
                )
        for l in bset:
            if counts.get(l, 0) != 1:
                raise DomainError(f"boundary label {l} does not appear in a crossing")

    # -- basic structure ---------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_closed(self) -> bool:
        return not self.boundary

    def edge_labels(self) -> set[int]:
        return {l for c in self.crossings for l in c}

    def _homes(self) -> dict[int, list[tuple[int, int]]]:
        homes: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(self.crossings):
            for si, l in enumerate(c):
                homes.setdefault(l, []).append((ci, si))
        return homes

    def component_count(self) -> int:
        """Number of closed components (crossingless circles included)."""
        if self.boundary:
            raise DomainError("component count is defined for closed diagrams")
        labels = self.edge_labels()
        parent = {l: l for l in labels}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        n = len(labels)
        for c in self.crossings:
            for a, b in ((c[0], c[2]), (c[1], c[3])):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    n -= 1
        return n + self.circles

    def is_knot(self) -> bool:
        return self.is_closed and self.component_count() == 1

    def mirror(self) -> "PDDiagram":
        """Swap every crossing's over- and under-strand."""
        return PDDiagram(
            tuple((c[1], c[2], c[3], c[0]) for c in self.crossings),
            self.circles,
            self.boundary,
        )

    def canonical_labels(self) -> "PDDiagram":
        """Relabel edges 1..E in first-appearance order (deterministic)."""
        mapping: dict[int, int] = {}
        for c in self.crossings:
            for l in c:
                if l not in mapping:
                    mapping[l] = len(mapping) + 1
        for l in self.boundary:
            if l not in mapping:
                mapping[l] = len(mapping) + 1
        return PDDiagram(
            tuple(tuple(mapping[l] for l in c) for c in self.crossings),
            self.circles,
            tuple(mapping[l] for l in self.boundary),
        )

    def validate(self) -> None:
        """Check planarity of a closed diagram via the Euler formula.

        The rotation system given by the crossing tuples must make every
        connected component a sphere: V - E + F = 2.
        """
        if self.boundary or not self.crossings:
            return
        homes = self._homes()

        def other_home(ci: int, si: int) -> tuple[int, int]:
            a, b = homes[self.crossings[ci][si]]
            return b if a == (ci, si) else a

        # connected components of the crossing graph
        comp = {}
        for ci in range(len(self.crossings)):
            if ci in comp:
                continue
            stack = [ci]
            comp[ci] = ci
            while stack:
                u = stack.pop()
                for si in range(4):
                    v, _ = other_home(u, si)
                    if v not in comp:
                        comp[v] = ci
                        stack.append(v)

        # faces from the rotation system
        faces: dict[int, int] = {}
        seen: set[tuple[int, int]] = set()
        for start in ((ci, si) for ci in range(len(self.crossings)) for si in range(4)):
            if start in seen:
                continue
            cur = start
            while True:
                seen.add(cur)
                cj, sj = other_home(*cur)
                cur = (cj, (sj + 1) % 4)
                if cur == start:
                    break
            faces[comp[start[0]]] = faces.get(comp[start[0]], 0) + 1

        verts: dict[int, int] = {}
        edges: dict[int, int] = {}
        for ci in range(len(self.crossings)):
            verts[comp[ci]] = verts.get(comp[ci], 0) + 1
        for l, hs in homes.items():
            edges[comp[hs[0][0]]] = edges.get(comp[hs[0][0]], 0) + 1
        for root, v in verts.items():
            euler = v - edges[root] + faces.get(root, 0)
            if euler != 2:
                raise DomainError(
                    f"crossing data is not planar (Euler characteristic {euler})"
                )


# -- PD text format ---------------------------------------------------------

_TOKEN = re.compile(r"X\[([^\]]*)\]|O|\S+")


def parse_pd(text: str) -> PDDiagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` entries (``O`` = a circle).

    Labels must each appear exactly twice; violations are reported with the
    line and column of the offending token.
    """
    crossings: list[Crossing] = []
    circles = 0
    counts: dict[int, int] = {}
    where: dict[int, tuple[int, int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        for m in _TOKEN.finditer(line):
            col = m.start() + 1
            tok = m.group(0)
            if tok == "O":
                circles += 1
                continue
            if m.group(1) is None:
                raise DomainError(
                    f"line {lineno}, column {col}: unrecognized token {tok!r}"
                )
            fields = [f.strip() for f in m.group(1).split(",")]
            if len(fields) != 4 or not all(
                f and (f.lstrip("-").isdigit()) for f in fields
            ):
                raise DomainError(
                    f"line {lineno}, column {col}: bad crossing {tok!r}, "
                    "expected X[a,b,c,d] with integer labels"
                )
            labels = tuple(int(f) for f in fields)
            for l in labels:
                counts[l] = counts.get(l, 0) + 1
                if counts[l] > 2:
                    raise DomainError(
                        f"line {lineno}, column {col}: label {l} appears more "
                        "than twice"
                    )
                where.setdefault(l, (lineno, col))
            crossings.append(labels)
    for l, n in sorted(counts.items()):
        if n != 2:
            lineno, col = where[l]
            raise DomainError(
                f"line {lineno}, column {col}: label {l} appears {n} time(s), "
                "expected exactly 2"
            )
    return PDDiagram(tuple(crossings), circles)


def dumps_pd(d: PDDiagram) -> str:
    if d.boundary:
        raise DomainError("the PD text format covers closed diagrams only")
    parts = ["X[%d,%d,%d,%d]" % c for c in d.crossings] + ["O"] * d.circles
    return " ".join(parts)


# -- knot traversal ----------------------------------------------------------


def _require_knot(d: PDDiagram, op: str) -> None:
    if d.boundary:
        raise DomainError(f"{op} requires a closed diagram")
    if d.component_count() != 1:
        raise DomainError(
            f"{op} requires a single component, found {d.component_count()}"
        )


def _trace_knot(d: PDDiagram) -> list[tuple[int, int]]:
    """Visit every strand pass of a knot once; returns (crossing, entry slot)."""
    if not d.crossings:
        return []
    homes = d._homes()

    def other_home(ci: int, si: int) -> tuple[int, int]:
        a, b = homes[d.crossings[ci][si]]
        return b if a == (ci, si) else a

    start = (0, 0)
    out: list[tuple[int, int]] = []
    cur = start
    while True:
        out.append(cur)
        ci, si = cur
        exit_slot = (si + 2) % 4
        cur = other_home(ci, exit_slot)
        if cur == start:
            break
        if len(out) > 2 * len(d.crossings):
            raise DomainError("traversal does not close up")
    if len(out) != 2 * len(d.crossings):
        raise DomainError("diagram is not a single closed component")
    return out


def writhe(d: PDDiagram) -> int:
    """Sum of crossing signs; orientation-independent for knots."""
    _require_knot(d, "writhe")
    entries: dict[int, list[int]] = {}
    for ci, si in _trace_knot(d):
        entries.setdefault(ci, []).append(si)
    total = 0
    for ci, slots in entries.items():
        under_in = next(s for s in slots if s % 2 == 0)
        over_in = next(s for s in slots if s % 2 == 1)
        total += 1 if (under_in, over_in) in ((0, 3), (2, 1)) else -1
    return total


def is_alternating(d: PDDiagram) -> bool:
    """True when the traversal alternates over/under; vacuous for 0 crossings."""
    _require_knot(d, "is_alternating")
    passes = _trace_knot(d)
    if not passes:
        return True
    kinds = [si % 2 for ci, si in passes]
    return all(kinds[i] != kinds[i - 1] for i in range(len(kinds)))


def is_reduced(d: PDDiagram) -> bool:
    """True when no crossing is nugatory (a cut vertex of the diagram graph)."""
    _require_knot(d, "is_reduced")
    n = len(d.crossings)
    if n == 0:
        return True
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (l, hs) in enumerate(d._homes().items()):
        (c1, _), (c2, _) = hs
        if c1 == c2:
            return False  # a kink: the edge returns to its own crossing
        adj[c1].append((c2, eid))
        adj[c2].append((c1, eid))

    # iterative articulation-point search, safe for parallel edges
    disc = [-1] * n
    low = [0] * n
    timer = 0
    root_children = 0
    stack: list[tuple[int, int, int]] = [(0, -1, 0)]  # node, entry edge id, child idx
    order: list[tuple[int, int]] = []
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        u, in_edge, idx = stack.pop()
        if idx < len(adj[u]):
            stack.append((u, in_edge, idx + 1))
            v, eid = adj[u][idx]
            if eid == in_edge:
                continue
            if disc[v] == -1:
                disc[v] = low[v] = timer
                timer += 1
                if u == 0:
                    root_children += 1
                order.append((u, v))
                stack.append((v, eid, 0))
            else:
                low[u] = min(low[u], disc[v])
    # fold low-links back up the DFS tree
    for u, v in reversed(order):
        low[u] = min(low[u], low[v])
        if u != 0 and low[v] >= disc[u]:
            return False
    if root_children > 1:
        return False
    return True


# -- bracket state sum -------------------------------------------------------


@dataclass
class _Element:
    """A partial contraction: legs plus weighted pairings of those legs."""

    legs: tuple[int, ...]
    options: list[tuple[tuple[tuple[int, int], ...], dict[int, int]]] = field(
        default_factory=list
    )


def _pair_key(pairs) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def _small_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


_DELTA_SMALL = {2: -1, -2: -1}


def _crossing_element(c: Crossing) -> _Element:
    a, b, cc, d = c
    return _Element(
        legs=(a, b, cc, d),
        options=[
            (((a, b), (cc, d)), {1: 1}),
            (((a, d), (b, cc)), {-1: 1}),
        ],
    )


def _merge_elements(e1: _Element, e2: _Element, shared: set[int]) -> _Element:
    ext = tuple(l for l in e1.legs if l not in shared) + tuple(
        l for l in e2.legs if l not in shared
    )
    acc: dict[tuple, dict[int, int]] = {}
    for pairs1, c1 in e1.options:
        for pairs2, c2 in e2.options:
            adj: dict[int, list[int]] = {}
            for x, y in pairs1 + pairs2:
                adj.setdefault(x, []).append(y)
                adj.setdefault(y, []).append(x)
            seen: set[int] = set()
            newpairs = []
            for l in ext:
                if l in seen:
                    continue
                seen.add(l)
                prev, cur = l, adj[l][0]
                while cur in shared:
                    seen.add(cur)
                    nbrs = adj[cur]
                    nxt = nbrs[1] if nbrs[0] == prev else nbrs[0]
                    prev, cur = cur, nxt
                seen.add(cur)
                newpairs.append((l, cur))
            coeff = _small_mul(c1, c2)
            loops = sum(1 for s in shared if s not in seen) // 2
            for _ in range(loops):
                coeff = _small_mul(coeff, _DELTA_SMALL)
            key = _pair_key(newpairs)
            if key in acc:
                for e, v in coeff.items():
                    s = acc[key].get(e, 0) + v
                    if s:
                        acc[key][e] = s
                    else:
                        acc[key].pop(e, None)
            else:
                acc[key] = dict(coeff)
    options = [(k, v) for k, v in acc.items() if v]
    return _Element(legs=ext, options=options)


def _compress(elements: list[_Element]) -> list[_Element]:
    """Contract pairs of elements sharing exactly two labels (twist chains)."""
    alive: dict[int, _Element] = dict(enumerate(elements))
    homes: dict[int, set[int]] = {}
    for i, el in alive.items():
        for l in el.legs:
            homes.setdefault(l, set()).add(i)
    next_id = len(elements)
    queue = list(alive.keys())
    while queue:
        i = queue.pop()
        if i not in alive:
            continue
        el = alive[i]
        if len(set(el.legs)) != 4:
            continue
        partner = None
        for l in el.legs:
            for j in homes.get(l, ()):
                if j == i or j not in alive:
                    continue
                other = alive[j]
                if len(set(other.legs)) != 4:
                    continue
                shared = set(el.legs) & set(other.legs)
                if len(shared) == 2:
                    partner = (j, shared)
                    break
            if partner:
                break
        if not partner:
            continue
        j, shared = partner
        merged = _merge_elements(el, alive[j], shared)
        for k in (i, j):
            for l in alive[k].legs:
                homes[l].discard(k)
            del alive[k]
        alive[next_id] = merged
        for l in merged.legs:
            homes.setdefault(l, set()).add(next_id)
        queue.append(next_id)
        next_id += 1
    return [alive[k] for k in sorted(alive)]


def _greedy_order(elements: list[_Element]) -> list[_Element]:
    remaining_homes: dict[int, int] = {}
    for el in elements:
        for l in el.legs:
            remaining_homes[l] = remaining_homes.get(l, 0) + 1
    open_labels: set[int] = set()
    todo = list(range(len(elements)))
    order: list[_Element] = []
    while todo:
        best, best_score = None, None
        for idx in todo:
            legs = elements[idx].legs
            after = len(open_labels)
            for l in set(legs):
                mult = legs.count(l)
                if l in open_labels:
                    after -= 1
                elif remaining_homes[l] - mult > 0:
                    after += 1
            score = (after, idx)
            if best_score is None or score < best_score:
                best, best_score = idx, score
        todo.remove(best)
        el = elements[best]
        order.append(el)
        for l in set(el.legs):
            mult = el.legs.count(l)
            remaining_homes[l] -= mult
            if l in open_labels:
                open_labels.discard(l)
            elif remaining_homes[l] > 0:
                open_labels.add(l)
    return order


# dense Laurent layer for the sweep: (offset, coeff list), exponent step 2
_Dense = tuple[int, list[int]]


def _dense_mul_small(p: _Dense, small: list[tuple[int, int]]) -> _Dense:
    off, cs = p
    min_e = small[0][0]
    width = (small[-1][0] - min_e) // 2
    out = [0] * (len(cs) + width)
    for e, k in small:
        sh = (e - min_e) // 2
        if k == 1:
            for i, c in enumerate(cs):
                out[i + sh] += c
        else:
            for i, c in enumerate(cs):
                out[i + sh] += c * k
    return (off + min_e, out)


def _dense_add(a: _Dense, b: _Dense) -> _Dense:
    off_a, ca = a
    off_b, cb = b
    if (off_a - off_b) % 2:
        raise AssertionError("bracket exponents left the parity lattice")
    if off_a > off_b:
        off_a, ca, off_b, cb = off_b, cb, off_a, ca
    shift = (off_b - off_a) // 2
    out = list(ca) + [0] * max(0, shift + len(cb) - len(ca))
    for i, c in enumerate(cb):
        out[i + shift] += c
    return (off_a, out)


def _bracket_sweep(d: PDDiagram) -> LaurentPoly:
    elements = [_crossing_element(c) for c in d.crossings]
    elements = _compress(elements)
    order = _greedy_order(elements)
    for el in order:
        for pairs, coeff in el.options:
            exps = sorted(coeff)
            if any((e - exps[0]) % 2 for e in exps):
                raise AssertionError("bracket exponents left the parity lattice")

    states: dict[tuple, _Dense] = {(): (0, [1])}
    for el in order:
        new_states: dict[tuple, _Dense] = {}
        for key, poly in states.items():
            base = dict(key)
            base.update({b: a for a, b in key})
            for pairs, coeff in el.options:
                m2 = dict(base)
                loops = 0
                for x, y in pairs:
                    if x == y:
                        loops += 1
                        continue
                    if m2.get(x) == y:
                        del m2[x]
                        del m2[y]
                        loops += 1
                        continue
                    if x in m2:
                        px = m2.pop(x)
                        del m2[px]
                    else:
                        px = x
                    if y in m2:
                        py = m2.pop(y)
                        del m2[py]
                    else:
                        py = y
                    m2[px] = py
                    m2[py] = px
                small = sorted(coeff.items())
                contrib = _dense_mul_small(poly, small)
                for _ in range(loops):
                    contrib = _dense_mul_small(contrib, [(-2, -1), (2, -1)])
                newkey = tuple(sorted((a, b) for a, b in m2.items() if a < b))
                if newkey in new_states:
                    new_states[newkey] = _dense_add(new_states[newkey], contrib)
                else:
                    new_states[newkey] = contrib
        states = new_states
    if set(states) - {()}:
        raise AssertionError("sweep left unmatched open edges")
    off, cs = states.get((), (0, [0]))
    total = LaurentPoly({off + 2 * i: c for i, c in enumerate(cs)})
    total = total * (_DELTA ** d.circles)
    return total.exact_div(_DELTA)


def kauffman_bracket(d: PDDiagram) -> LaurentPoly:
    """Bracket polynomial with <unknot> = 1, via the memoized contraction sweep."""
    _require_knot(d, "kauffman_bracket")
    if not d.crossings:
        return _DELTA ** (d.circles - 1)
    return _bracket_sweep(d)


def bracket_bruteforce(d: PDDiagram) -> LaurentPoly:
    """Oracle: enumerate all 2**c smoothings directly.  Keep c small (<= 20)."""
    _require_knot(d, "bracket_bruteforce")
    c = len(d.crossings)
    if c == 0:
        return _DELTA ** (d.circles - 1)
    if c > 24:
        raise DomainError("brute-force bracket is limited to 24 crossings")
    labels = sorted(d.edge_labels())
    index = {l: i for i, l in enumerate(labels)}
    n = len(labels)
    merges_a = [((index[x[0]], index[x[1]]), (index[x[2]], index[x[3]])) for x in d.crossings]
    merges_b = [((index[x[0]], index[x[3]]), (index[x[1]], index[x[2]])) for x in d.crossings]
    profile: dict[tuple[int, int], int] = {}
    parent = list(range(n))
    for mask in range(1 << c):
        for i in range(n):
            parent[i] = i

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = n
        a_count = 0
        for i in range(c):
            if mask >> i & 1:
                pairs = merges_b[i]
            else:
                pairs = merges_a[i]
                a_count += 1
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
                    loops -= 1
        key = (2 * a_count - c, loops)
        profile[key] = profile.get(key, 0) + 1
    total = LaurentPoly.zero()
    delta_pows: dict[int, LaurentPoly] = {0: LaurentPoly.one()}
    for (exp, loops), count in sorted(profile.items()):
        p = loops + d.circles - 1
        if p not in delta_pows:
            delta_pows[p] = _DELTA ** p
        total = total + delta_pows[p].shifted(exp) * count
    return total


def jones(d: PDDiagram) -> LaurentPoly:
    """Jones polynomial in t = A**-4: (-A)**(-3w) <d> reparametrized."""
    _require_knot(d, "jones")
    br = kauffman_bracket(d)
    w = writhe(d) if d.crossings else 0
    f = br.shifted(-3 * w)
    if w % 2:
        f = -f
    return f.reexponent(-4)


# -- nontriviality certificates ----------------------------------------------


@dataclass(frozen=True)
class ReducedAlternating:
    """Nontrivial: a reduced alternating diagram with at least one crossing."""

    crossings: int


@dataclass(frozen=True)
class JonesWitness:
    """Nontrivial: the Jones polynomial differs from the unknot's."""

    jones: LaurentPoly


@dataclass(frozen=True)
class Inconclusive:
    reason: str


Certificate = ReducedAlternating | JonesWitness | Inconclusive


def certify_nontrivial(d: PDDiagram) -> Certificate:
    """Certify a knot diagram nontrivial, preferring the combinatorial route."""
    _require_knot(d, "certify_nontrivial")
    if d.crossings and is_reduced(d) and is_alternating(d):
        return ReducedAlternating(len(d.crossings))
    j = jones(d)
    if not j.is_one:
        return JonesWitness(j)
    return Inconclusive("diagram is not reduced alternating and its Jones polynomial is trivial")

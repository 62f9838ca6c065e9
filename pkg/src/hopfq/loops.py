"""I.P. loops: validation of multiplication tables and backtracking enumeration.

A table is a list of rows, ``table[u][v]`` is the index of the product ``uv``.
Enumeration works on normalized tables (row 0 and column 0 are the identity
permutation) and does not identify isomorphic loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

MAX_ENUMERATION_ORDER = 9
DEFAULT_NODE_BUDGET = 2_000_000


class LoopError(ValueError):
    pass


class NotLatin(LoopError):
    pass


class NoIdentity(LoopError):
    pass


class NotInverseProperty(LoopError):
    def __init__(self, u, v, msg=None):
        self.u = u
        self.v = v
        super().__init__(msg or f"inverse property fails at u={u}, v={v}")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class LoopTable:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity_index: int
    inverse: tuple[int, ...] = field(compare=False)

    def mul(self, u, v):
        return self.table[u][v]

    def is_associative(self):
        return associativity_witness(self.table) is None

    def is_commutative(self):
        n = self.order
        return all(self.table[u][v] == self.table[v][u] for u in range(n) for v in range(n))

    def as_lists(self):
        return [list(row) for row in self.table]


def associativity_witness(table):
    """First triple (u, v, w) with (uv)w != u(vw), or None."""
    n = len(table)
    for u in range(n):
        for v in range(n):
            uv = table[u][v]
            for w in range(n):
                if table[uv][w] != table[u][table[v][w]]:
                    return (u, v, w)
    return None


def loop_from_table(grid) -> LoopTable:
    rows = [list(r) for r in grid]
    n = len(rows)
    if n == 0:
        raise NotLatin("empty table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NotLatin(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise NotLatin(f"row {i} contains invalid entry {x!r}")
    full = set(range(n))
    for i, row in enumerate(rows):
        if set(row) != full:
            raise NotLatin(f"row {i} is not a permutation")
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise NotLatin(f"column {j} is not a permutation")

    e = None
    for cand in range(n):
        if all(rows[cand][v] == v and rows[v][cand] == v for v in range(n)):
            e = cand
            break
    if e is None:
        raise NoIdentity("no two-sided identity")

    # in a quasigroup with identity the right inverse is unique
    inv = [rows[u].index(e) for u in range(n)]
    for u in range(n):
        ui = inv[u]
        for v in range(n):
            if rows[ui][rows[u][v]] != v or rows[rows[v][u]][ui] != v:
                raise NotInverseProperty(u, v)
    return LoopTable(
        order=n,
        table=tuple(tuple(r) for r in rows),
        identity_index=e,
        inverse=tuple(inv),
    )


def _involutions(elems):
    """Involutions of ``elems`` in lexicographic order of their value lists."""
    elems = list(elems)
    n = len(elems)
    img = [None] * n

    def rec(i):
        while i < n and img[i] is not None:
            i += 1
        if i == n:
            yield tuple(img)
            return
        for j in range(i, n):
            if img[j] is not None:
                continue
            img[i] = elems[j]
            img[j] = elems[i]
            yield from rec(i + 1)
            img[i] = None
            img[j] = None

    for res in rec(0):
        yield {elems[k]: res[k] for k in range(n)}


class _Search:
    def __init__(self, n, inv, budget):
        self.n = n
        self.inv = inv
        self.budget = budget
        self.nodes = 0
        self.T = [[-1] * n for _ in range(n)]
        self.row_used = [[False] * n for _ in range(n)]
        self.col_used = [[False] * n for _ in range(n)]

    def assign(self, u, v, w, trail):
        """Set T[u][v] = w and close under the inverse-property rules."""
        T, inv = self.T, self.inv
        stack = [(u, v, w)]
        while stack:
            a, b, c = stack.pop()
            cur = T[a][b]
            if cur == c:
                continue
            if cur != -1 or self.row_used[a][c] or self.col_used[b][c]:
                return False
            T[a][b] = c
            self.row_used[a][c] = True
            self.col_used[b][c] = True
            trail.append((a, b, c))
            stack.append((inv[a], c, b))
            stack.append((c, inv[b], a))
            stack.append((inv[b], inv[a], inv[c]))
        return True

    def undo(self, trail, mark):
        T = self.T
        while len(trail) > mark:
            a, b, c = trail.pop()
            T[a][b] = -1
            self.row_used[a][c] = False
            self.col_used[b][c] = False

    def run(self, out, limit):
        n = self.n
        trail = []
        for x in range(n):
            if not self.assign(0, x, x, trail) or not self.assign(x, 0, x, trail):
                return
        for x in range(1, n):
            if not self.assign(x, self.inv[x], 0, trail):
                return
        self._rec(trail, out, limit)

    def _rec(self, trail, out, limit):
        if len(out) >= limit:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"node budget {self.budget} exhausted")
        n, T = self.n, self.T
        cell = None
        for a in range(1, n):
            row = T[a]
            for b in range(1, n):
                if row[b] == -1:
                    cell = (a, b)
                    break
            if cell:
                break
        if cell is None:
            out.append([row[:] for row in T])
            return
        a, b = cell
        for c in range(n):
            if self.row_used[a][c] or self.col_used[b][c]:
                continue
            mark = len(trail)
            if self.assign(a, b, c, trail):
                self._rec(trail, out, limit)
            self.undo(trail, mark)
            if len(out) >= limit:
                return


def enumerate_ip_loops(order, limit=10**9, budget=DEFAULT_NODE_BUDGET):
    """Normalized I.P. loop tables of the given order, at most ``limit`` of them.

    Search branches first on the inverse involution, then fills cells in
    row-major order.  Results come back in that deterministic order.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if order > MAX_ENUMERATION_ORDER:
        raise BudgetExceeded(f"order {order} exceeds search limit {MAX_ENUMERATION_ORDER}")
    if order == 1:
        return [loop_from_table([[0]])]
    out = []
    nodes = 0
    for inv_map in _involutions(range(1, order)):
        inv = [0] + [inv_map[x] for x in range(1, order)]
        s = _Search(order, inv, budget - nodes)
        s.run(out, limit)
        nodes += s.nodes
        if len(out) >= limit:
            break
    return [loop_from_table(t) for t in out[:limit]]


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def direct_product_table(t1, t2):
    n1, n2 = len(t1), len(t2)
    return [
        [t1[a][c] * n2 + t2[b][d] for c, d in product(range(n1), range(n2))]
        for a, b in product(range(n1), range(n2))
    ]


def s3_table():
    """Cayley table of S3; element 0 is the identity permutation."""
    from itertools import permutations

    elems = sorted(permutations(range(3)))
    idx = {p: i for i, p in enumerate(elems)}
    # (p*q)(x) = p(q(x))
    return [[idx[tuple(p[q[x]] for x in range(3))] for q in elems] for p in elems]


def canonical_form(loop: LoopTable):
    """Lexicographically least relabelled table fixing the identity at 0."""
    from itertools import permutations

    n = loop.order
    e = loop.identity_index
    others = [x for x in range(n) if x != e]
    best = None
    for perm in permutations(range(1, n)):
        relabel = {e: 0}
        relabel.update({others[i]: perm[i] for i in range(n - 1)})
        back = {v: k for k, v in relabel.items()}
        t = tuple(tuple(relabel[loop.table[back[a]][back[b]]] for b in range(n)) for a in range(n))
        if best is None or t < best:
            best = t
    return best

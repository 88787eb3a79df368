"""Standard tableaux of bipartitions and their grading statistics.

A tableau stores its shape and, for each component, the rows of entries.
Standard means entries increase along rows and down columns within each
component.  The *column-initial* tableau fills 1..n down consecutive
columns, left to right, component 2 first.

The degree counts addable-minus-removable same-residue nodes strictly
*below* the node being peeled, the codegree counts strictly *above*;
both peel the largest entry first with value 0 on the empty tableau.
The two statistics are never interchanged: the codegree is the one that
grades the basis indexed by standard tableaux here.
"""

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly, ONE, ZERO
from .partitions import (
    Bipartition, Node, check_e, residue, size, node_position,
    addable_nodes, removable_nodes, remove_node, EMPTY_BP,
)

SIZE_BOUND = 25


@dataclass(frozen=True)
class Tableau:
    shape: Bipartition
    rows: tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]

    @property
    def n(self) -> int:
        return size(self.shape)

    def entry(self, node: Node) -> int:
        r, c, m = node
        return self.rows[m - 1][r - 1][c - 1]

    def node_map(self) -> dict[int, Node]:
        """entry -> node."""
        out = {}
        for m in (1, 2):
            for r, row in enumerate(self.rows[m - 1], start=1):
                for c, val in enumerate(row, start=1):
                    out[val] = (r, c, m)
        return out

    def __str__(self):
        def comp(rows):
            return "[" + "/".join(",".join(str(v) for v in row) for row in rows) + "]"
        return comp(self.rows[0]) + "|" + comp(self.rows[1])


def is_standard(t: Tableau) -> bool:
    seen = set()
    for m in (1, 2):
        rows = t.rows[m - 1]
        shape_rows = t.shape[m - 1]
        if tuple(len(r) for r in rows) != shape_rows:
            return False
        for r, row in enumerate(rows):
            for c, val in enumerate(row):
                if val in seen:
                    return False
                seen.add(val)
                if c > 0 and row[c - 1] >= val:
                    return False
                if r > 0 and rows[r - 1][c] >= val:
                    return False
    return seen == set(range(1, t.n + 1))


def _check_bound(shape: Bipartition, bound: int):
    if size(shape) > bound:
        raise ValueError(f"size {size(shape)} exceeds bound {bound}")


def standard_tableaux(shape: Bipartition, word=None, e: int | None = None,
                      bound: int = SIZE_BOUND) -> list[Tableau]:
    """All standard tableaux of ``shape`` in a deterministic order (entries
    placed 1..n, candidate nodes tried from above to below).

    When ``word`` is given, only tableaux whose residue sequence equals it
    are produced, pruning as entries are placed.
    """
    _check_bound(shape, bound)
    n = size(shape)
    if word is not None:
        check_e(e)
        word = tuple(x % e for x in word)
        if len(word) != n:
            raise ValueError(f"word length {len(word)} != size {n}")
    lens = [[0] * len(shape[0]), [0] * len(shape[1])]
    fill: dict[Node, int] = {}
    out: list[Tableau] = []

    def candidates():
        cands = []
        for m in (1, 2):
            comp = shape[m - 1]
            cur = lens[m - 1]
            for r in range(1, len(comp) + 1):
                c = cur[r - 1] + 1
                if c > comp[r - 1]:
                    continue
                if r > 1 and cur[r - 2] < c:
                    continue
                cands.append((r, c, m))
        return cands

    def place(entry):
        if entry > n:
            rows1 = tuple(tuple(fill[(r, c, 1)] for c in range(1, shape[0][r - 1] + 1))
                          for r in range(1, len(shape[0]) + 1))
            rows2 = tuple(tuple(fill[(r, c, 2)] for c in range(1, shape[1][r - 1] + 1))
                          for r in range(1, len(shape[1]) + 1))
            out.append(Tableau(shape, (rows1, rows2)))
            return
        for node in candidates():
            if word is not None and residue(node, e) != word[entry - 1]:
                continue
            r, c, m = node
            lens[m - 1][r - 1] += 1
            fill[node] = entry
            place(entry + 1)
            del fill[node]
            lens[m - 1][r - 1] -= 1

    place(1)
    return out


@lru_cache(maxsize=None)
def count_standard(shape: Bipartition) -> int:
    """Number of standard tableaux, by peeling removable nodes (independent
    of the placement enumeration)."""
    if shape == EMPTY_BP:
        return 1
    return sum(count_standard(remove_node(shape, a)) for a in removable_nodes(shape))


def column_initial_tableau(shape: Bipartition) -> Tableau:
    fill = {}
    entry = 1
    for m in (2, 1):
        comp = shape[m - 1]
        if not comp:
            continue
        heights = [sum(1 for part in comp if part >= c) for c in range(1, comp[0] + 1)]
        for c, h in enumerate(heights, start=1):
            for r in range(1, h + 1):
                fill[(r, c, m)] = entry
                entry += 1
    rows1 = tuple(tuple(fill[(r, c, 1)] for c in range(1, shape[0][r - 1] + 1))
                  for r in range(1, len(shape[0]) + 1))
    rows2 = tuple(tuple(fill[(r, c, 2)] for c in range(1, shape[1][r - 1] + 1))
                  for r in range(1, len(shape[1]) + 1))
    return Tableau(shape, (rows1, rows2))


def residue_sequence(t: Tableau, e: int) -> tuple[int, ...]:
    check_e(e)
    node_of = t.node_map()
    return tuple(residue(node_of[r], e) for r in range(1, t.n + 1))


def node_degree(shape: Bipartition, node: Node, e: int, above: bool) -> int:
    """Addable minus removable nodes of the residue of ``node`` strictly
    above (or below) it in ``shape``; ``node`` itself lies in ``shape``."""
    i = residue(node, e)
    pos = node_position(node)
    total = 0
    for a in addable_nodes(shape, i, e):
        p = node_position(a)
        if p != pos and (p < pos) == above:
            total += 1
    for a in removable_nodes(shape, i, e):
        p = node_position(a)
        if p != pos and (p < pos) == above:
            total -= 1
    return total


def _statistic(t: Tableau, e: int, above: bool) -> int:
    check_e(e)
    if not is_standard(t):
        raise ValueError(f"tableau is not standard: {t}")
    node_of = t.node_map()
    shape = t.shape
    total = 0
    for r in range(t.n, 0, -1):
        node = node_of[r]
        total += node_degree(shape, node, e, above)
        shape = remove_node(shape, node)
    return total


def degree(t: Tableau, e: int) -> int:
    return _statistic(t, e, above=False)


def codegree(t: Tableau, e: int) -> int:
    return _statistic(t, e, above=True)


@lru_cache(maxsize=None)
def graded_dimension(shape: Bipartition, e: int) -> LaurentPoly:
    """Sum of q^codegree over all standard tableaux, computed by peeling
    removable nodes (no enumeration)."""
    check_e(e)
    if shape == EMPTY_BP:
        return ONE
    total = ZERO
    for node in removable_nodes(shape):
        d = node_degree(shape, node, e, above=True)
        total = total + graded_dimension(remove_node(shape, node), e).shift(d)
    return total


def graded_dimension_by_enumeration(shape: Bipartition, e: int,
                                    bound: int = SIZE_BOUND) -> LaurentPoly:
    """Independent route: enumerate the tableaux and sum q^codegree."""
    _check_bound(shape, bound)
    total = ZERO
    for t in standard_tableaux(shape, bound=bound):
        total = total + LaurentPoly.q_power(codegree(t, e))
    return total


def word_graded_dimension(shape: Bipartition, word, e: int) -> LaurentPoly:
    """Sum of q^codegree over standard tableaux with the given residue
    sequence, by a peel recursion keyed on sub-shapes."""
    check_e(e)
    word = tuple(x % e for x in word)
    if len(word) != size(shape):
        raise ValueError(f"word length {len(word)} != size {size(shape)}")
    memo: dict[Bipartition, LaurentPoly] = {}

    def rec(sub: Bipartition) -> LaurentPoly:
        if sub == EMPTY_BP:
            return ONE
        if sub in memo:
            return memo[sub]
        target = word[size(sub) - 1]
        total = ZERO
        for node in removable_nodes(sub, target, e):
            d = node_degree(sub, node, e, above=True)
            total = total + rec(remove_node(sub, node)).shift(d)
        memo[sub] = total
        return total

    return rec(shape)


def gg_word(nu, e: int) -> tuple[int, ...]:
    """The residue word 0^n1 1^n1 .. (e-1)^n1 0^n2 .. for a composition nu."""
    check_e(e)
    if any(part < 1 for part in nu):
        raise ValueError(f"composition parts must be >= 1, got {tuple(nu)}")
    out = []
    for part in nu:
        for i in range(e):
            out.extend([i] * part)
    return tuple(out)


def one_row_components(shape: Bipartition) -> bool:
    return len(shape[0]) <= 1 and len(shape[1]) <= 1


def v_tableau(shape: Bipartition, second_entries) -> Tableau:
    """The tableau of a one-row-per-component shape whose second component
    holds exactly the given entries (in increasing order)."""
    if not one_row_components(shape):
        raise ValueError(f"{shape} does not have one-row components")
    n = size(shape)
    second = tuple(sorted(int(x) for x in second_entries))
    if len(second) != sum(shape[1]) or any(not 1 <= x <= n for x in second):
        raise ValueError(f"bad second-component entries {second} for {shape}")
    first = tuple(x for x in range(1, n + 1) if x not in set(second))
    rows1 = (first,) if first else ()
    rows2 = (second,) if second else ()
    return Tableau(shape, (rows1, rows2))


def tableau_to_obj(t: Tableau):
    from .partitions import format_bipartition
    if one_row_components(t.shape):
        return {"shape": format_bipartition(t.shape),
                "v": list(t.rows[1][0]) if t.rows[1] else []}
    return {"shape": format_bipartition(t.shape),
            "rows": [[list(r) for r in t.rows[0]], [list(r) for r in t.rows[1]]]}


def tableau_from_obj(obj) -> Tableau:
    from .partitions import parse_bipartition
    shape = parse_bipartition(obj["shape"])
    if "v" in obj:
        return v_tableau(shape, obj["v"])
    rows = obj["rows"]
    return Tableau(shape, (tuple(tuple(r) for r in rows[0]),
                           tuple(tuple(r) for r in rows[1])))

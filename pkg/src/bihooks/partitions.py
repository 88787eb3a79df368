"""Partitions, bipartitions, Young diagrams, nodes and residues.

Conventions used throughout the package:

* a partition is a tuple of weakly decreasing positive integers
  (trailing zeros are stripped, so equality is structural);
* a bipartition is a pair of partitions, drawn with component 1 on top
  of component 2;
* a node is a triple ``(row, col, comp)`` with 1-based row and column
  and ``comp`` in {1, 2};
* the node ``(r, c, m)`` is *above* ``(r', c', m')`` when ``m < m'`` or
  (``m == m'`` and ``r < r'``); node lists are always emitted from top
  to bottom in this order;
* residues are taken mod ``e`` with bicharge (0, 0), so the residue of
  ``(r, c, m)`` is ``(c - r) % e``.

The canonical text form of a bipartition separates components with
``|`` and renders the empty component as ``-``, e.g. ``21|15``,
``6,1|3`` and ``-|-``.
"""

from functools import lru_cache

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]
Node = tuple[int, int, int]

EMPTY: Partition = ()
EMPTY_BP: Bipartition = ((), ())


def as_partition(parts) -> Partition:
    """Validate and canonicalise an iterable of parts; strips trailing zeros."""
    out = []
    prev = None
    for p in parts:
        p = int(p)
        if p < 0:
            raise ValueError(f"negative part {p}")
        if prev is not None and p > prev:
            raise ValueError(f"parts not weakly decreasing: {tuple(parts)}")
        prev = p
        if p > 0:
            out.append(p)
    return tuple(out)


def as_bipartition(pair) -> Bipartition:
    c1, c2 = pair
    return (as_partition(c1), as_partition(c2))


def check_e(e: int) -> int:
    if not isinstance(e, int) or e < 2:
        raise ValueError(f"quantum characteristic must be an integer >= 2, got {e}")
    return e


def partition_size(p: Partition) -> int:
    return sum(p)


def size(bp: Bipartition) -> int:
    return sum(bp[0]) + sum(bp[1])


def conjugate_partition(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def conjugate(bp: Bipartition) -> Bipartition:
    """The conjugate bipartition (c2', c1'): components swap and transpose."""
    return (conjugate_partition(bp[1]), conjugate_partition(bp[0]))


def contains(bp: Bipartition, node: Node) -> bool:
    r, c, m = node
    comp = bp[m - 1]
    return 1 <= r <= len(comp) and 1 <= c <= comp[r - 1]


def residue(node: Node, e: int) -> int:
    r, c, m = node
    return (c - r) % e


def node_position(node: Node) -> tuple[int, int]:
    """Sort key realising the above/below order (component, then row)."""
    r, c, m = node
    return (m, r)


def is_above(a: Node, b: Node) -> bool:
    return node_position(a) < node_position(b)


def hook_length(p: Partition, row: int, col: int) -> int:
    """Arm + leg + 1 of the node (row, col), which must lie in the diagram."""
    if not (1 <= row <= len(p) and 1 <= col <= p[row - 1]):
        raise ValueError(f"node ({row},{col}) outside diagram of {p}")
    conj = conjugate_partition(p)
    return p[row - 1] - col + conj[col - 1] - row + 1


def _partition_addable(p: Partition) -> list[tuple[int, int]]:
    out = []
    for r in range(1, len(p) + 2):
        cur = p[r - 1] if r <= len(p) else 0
        if r == 1 or p[r - 2] > cur:
            out.append((r, cur + 1))
    return out


def _partition_removable(p: Partition) -> list[tuple[int, int]]:
    out = []
    for r in range(1, len(p) + 1):
        nxt = p[r] if r < len(p) else 0
        if p[r - 1] > nxt:
            out.append((r, p[r - 1]))
    return out


def addable_nodes(bp: Bipartition, i: int | None = None, e: int | None = None) -> list[Node]:
    """All addable nodes of ``bp`` from top to bottom, optionally filtered
    to those of residue ``i`` mod ``e``."""
    nodes = [(r, c, m) for m in (1, 2) for (r, c) in _partition_addable(bp[m - 1])]
    if i is None:
        return nodes
    check_e(e)
    return [a for a in nodes if residue(a, e) == i % e]


def removable_nodes(bp: Bipartition, i: int | None = None, e: int | None = None) -> list[Node]:
    """All removable nodes of ``bp`` from top to bottom, optionally filtered
    to those of residue ``i`` mod ``e``."""
    nodes = [(r, c, m) for m in (1, 2) for (r, c) in _partition_removable(bp[m - 1])]
    if i is None:
        return nodes
    check_e(e)
    return [a for a in nodes if residue(a, e) == i % e]


def add_node(bp: Bipartition, node: Node) -> Bipartition:
    r, c, m = node
    comp = list(bp[m - 1])
    if r == len(comp) + 1:
        comp.append(0)
    if not (1 <= r <= len(comp) and c == comp[r - 1] + 1):
        raise ValueError(f"{node} not addable to {bp}")
    if r > 1 and comp[r - 2] < c:
        raise ValueError(f"{node} not addable to {bp}")
    comp[r - 1] += 1
    new = tuple(comp)
    return (new, bp[1]) if m == 1 else (bp[0], new)


def remove_node(bp: Bipartition, node: Node) -> Bipartition:
    r, c, m = node
    comp = list(bp[m - 1])
    if not (1 <= r <= len(comp) and c == comp[r - 1]):
        raise ValueError(f"{node} not removable from {bp}")
    if r < len(comp) and comp[r] == comp[r - 1]:
        raise ValueError(f"{node} not removable from {bp}")
    comp[r - 1] -= 1
    if comp[r - 1] == 0:
        comp.pop()
    new = tuple(comp)
    return (new, bp[1]) if m == 1 else (bp[0], new)


def all_nodes(bp: Bipartition) -> list[Node]:
    return [(r, c, m) for m in (1, 2)
            for r, length in enumerate(bp[m - 1], start=1)
            for c in range(1, length + 1)]


def dominance_key(bp: Bipartition, rows: int | None = None) -> tuple[int, ...]:
    """Partial-sum vector: ``lam`` dominates ``mu`` (same size) iff the key of
    ``lam`` is pointwise >= the key of ``mu``.  The key determines ``bp``."""
    c1, c2 = bp
    n = size(bp) if rows is None else rows
    out = []
    s = 0
    for r in range(n):
        s += c1[r] if r < len(c1) else 0
        out.append(s)
    for r in range(n):
        s += c2[r] if r < len(c2) else 0
        out.append(s)
    return tuple(out)


def dominates(lam: Bipartition, mu: Bipartition) -> bool:
    """Dominance on bipartitions of equal size: row partial sums of the
    first component, then first-component size plus partial sums of the
    second, must all be at least as large."""
    n = size(lam)
    if n != size(mu):
        raise ValueError(f"dominance needs equal sizes, got {n} and {size(mu)}")
    ka, kb = dominance_key(lam, n), dominance_key(mu, n)
    return all(x >= y for x, y in zip(ka, kb))


def is_hook(p: Partition) -> bool:
    return len(p) >= 1 and all(part == 1 for part in p[1:])


def is_bihook(bp: Bipartition) -> bool:
    """Both components are (nonempty) hooks (a,1^b)."""
    return is_hook(bp[0]) and is_hook(bp[1])


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, largest first part first."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All bipartitions of n."""
    out = []
    for a in range(n + 1):
        for c1 in partitions(a):
            for c2 in partitions(n - a):
                out.append((c1, c2))
    return tuple(out)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "-"


def format_bipartition(bp: Bipartition) -> str:
    return f"{format_partition(bp[0])}|{format_partition(bp[1])}"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    parts = [int(tok) for tok in text.split(",")]
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive in {text!r}")
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError(f"parts not weakly decreasing in {text!r}")
    return tuple(parts)


def parse_bipartition(text: str) -> Bipartition:
    pieces = text.strip().split("|")
    if len(pieces) != 2:
        raise ValueError(f"expected two components separated by '|' in {text!r}")
    return (parse_partition(pieces[0]), parse_partition(pieces[1]))

"""i-signatures, crystal operators, regularity, the Mullineux map and the
label maps used to transport module structures between bihook families.

The i-signature of a bipartition reads the diagram from the top of the
first component to the bottom of the second, writing + for each addable
i-node and - for each removable i-node.  Reduction cancels adjacent +-
pairs until the word has shape -...-+...+.  The good i-node is the last
surviving -, the cogood i-node the first surviving +.

A bipartition is regular when successive good-node removals reach the
empty bipartition.  The test below removes the good node of the smallest
residue that has one and backtracks over residues if stuck; crystal
theory makes the backtracking vacuous, and the exhaustive oracle in the
test-suite checks that.
"""

from functools import lru_cache

from .partitions import (
    Bipartition, Node, Partition, EMPTY_BP, add_node, addable_nodes, as_partition,
    check_e, node_position, remove_node, removable_nodes,
)

Signature = list[tuple[str, Node]]


def signature(bp: Bipartition, i: int, e: int) -> Signature:
    check_e(e)
    marks = [("+", a) for a in addable_nodes(bp, i, e)]
    marks += [("-", a) for a in removable_nodes(bp, i, e)]
    marks.sort(key=lambda sa: node_position(sa[1]))
    return marks


def reduced_signature(bp: Bipartition, i: int, e: int) -> Signature:
    stack: Signature = []
    for sign, node in signature(bp, i, e):
        if sign == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((sign, node))
    return stack


def good_node(bp: Bipartition, i: int, e: int) -> Node | None:
    """Lowest normal i-node: the last - of the reduced signature."""
    best = None
    for sign, node in reduced_signature(bp, i, e):
        if sign == "-":
            best = node
    return best


def cogood_node(bp: Bipartition, i: int, e: int) -> Node | None:
    """Highest conormal i-node: the first + of the reduced signature."""
    for sign, node in reduced_signature(bp, i, e):
        if sign == "+":
            return node
    return None


def epsilon(bp: Bipartition, i: int, e: int) -> int:
    return sum(1 for sign, _ in reduced_signature(bp, i, e) if sign == "-")


def phi(bp: Bipartition, i: int, e: int) -> int:
    return sum(1 for sign, _ in reduced_signature(bp, i, e) if sign == "+")


def f_tilde(bp: Bipartition, i: int, e: int) -> Bipartition | None:
    node = cogood_node(bp, i, e)
    return None if node is None else add_node(bp, node)


def e_tilde(bp: Bipartition, i: int, e: int) -> Bipartition | None:
    node = good_node(bp, i, e)
    return None if node is None else remove_node(bp, node)


@lru_cache(maxsize=None)
def good_peel(bp: Bipartition, e: int) -> tuple[int, ...] | None:
    """Residues of a good-node removal sequence from bp down to empty, or
    None when no sequence exists.  Smallest residue first, with
    backtracking over the remaining residues."""
    if bp == EMPTY_BP:
        return ()
    for i in range(e):
        down = e_tilde(bp, i, e)
        if down is not None:
            rest = good_peel(down, e)
            if rest is not None:
                return (i,) + rest
    return None


def is_regular(bp: Bipartition, e: int) -> bool:
    check_e(e)
    return good_peel(bp, e) is not None


def cogood_build(residues, e: int) -> Bipartition:
    """Add cogood nodes of the given residues to the empty bipartition."""
    bp = EMPTY_BP
    for i in residues:
        nxt = f_tilde(bp, i % e, e)
        if nxt is None:
            raise ValueError(f"no cogood node of residue {i % e} on {bp}")
        bp = nxt
    return bp


def mullineux(bp: Bipartition, e: int) -> Bipartition:
    """Rebuild bp by cogood additions, then redo the additions with all
    residues negated.  An involution on regular bipartitions."""
    check_e(e)
    peel = good_peel(bp, e)
    if peel is None:
        raise ValueError(f"{bp} is not regular for e={e}")
    addition_order = tuple(reversed(peel))
    return cogood_build(((-i) % e for i in addition_order), e)


def braces_int(x: int, e: int) -> Partition:
    """The weakly decreasing sequence of e-1 nonnegative integers summing
    to x whose entries are floor((x+e-2-t)/(e-1)) for t = 0..e-2."""
    check_e(e)
    if x < 0:
        raise ValueError("braces of a negative integer")
    return as_partition((x + e - 2 - t) // (e - 1) for t in range(e - 1))


def braces_partition(p: Partition, e: int) -> Partition:
    out = []
    for part in p:
        out.extend(braces_int(part, e))
    return as_partition(out)


def braces(bp: Bipartition, e: int) -> Bipartition:
    return (braces_partition(bp[0], e), braces_partition(bp[1], e))


def scrt(mu: Partition, e: int) -> Bipartition:
    """Label map sending a two-column partition to the bipartition indexing
    the matching graded simple module: (1^n) goes to ((ne), -) and
    (2^m, 1^(n-2m)) to (((n-m)e, (m-1)e+1), (e-1))."""
    check_e(e)
    if any(part > 2 for part in mu):
        raise ValueError(f"{mu} is not a two-column partition")
    n = sum(mu)
    if n == 0:
        return EMPTY_BP
    m = sum(1 for part in mu if part == 2)
    if m == 0:
        return ((n * e,), ())
    return (((n - m) * e, (m - 1) * e + 1), (e - 1,))


def induction_recipe(a: int, b: int, e: int) -> list[tuple[int, int]]:
    """Expanded (residue, multiplicity) steps of the induction label map,
    in application order.  Valid parameters: a = b = 0, or 0 < a <= e and
    0 <= b < e with a + b != e."""
    check_e(e)
    if a == 0 and b == 0:
        return []
    if not (0 < a <= e and 0 <= b < e and a + b != e):
        raise ValueError(f"invalid induction parameters a={a}, b={b} for e={e}")
    if a + b < e:
        steps = [(i, 2) for i in range(a)]
        steps += [(i, 2) for i in range(e - 1, e - b - 1, -1)]
    else:
        steps = [(i, 2) for i in range(a - 1)]
        steps += [(i, 2) for i in range(e - 1, a - 1, -1)]
        steps += [(a - 1, 4)]
        steps += [(i, 2) for i in range(a - 2, e - b - 1, -1)]
    return steps


def induce(bp: Bipartition, a: int, b: int, e: int, negate: bool = False) -> Bipartition:
    """Apply the induction label map: cogood additions following the
    expanded recipe, with residues negated mod e when ``negate``."""
    steps = induction_recipe(a, b, e)
    cur = bp
    for i, mult in steps:
        res = (-i) % e if negate else i
        for _ in range(mult):
            nxt = f_tilde(cur, res, e)
            if nxt is None:
                raise ValueError(
                    f"no cogood node of residue {res} while inducing {bp} "
                    f"with a={a}, b={b}, e={e}, negate={negate}")
            cur = nxt
    return cur

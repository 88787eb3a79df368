"""Level-2 Fock space over Z[q, q^-1] at bicharge (0, 0), and the
Gaussian-elimination pass producing the canonical basis, i.e. the
characteristic-0 graded decomposition matrix.

Induction action.  For an addable i-node A of lam,

    f_i |lam>  =  sum_A  q^(stat(lam+A, A)) |lam+A>,

where stat counts addable minus removable i-nodes of the *grown* diagram
strictly below A (convention ``"below"``) or strictly above it
(convention ``"above"``).  Divided powers are f_i^m with exact division
by the quantum factorial [m]!; inexact division means a convention bug
and is a hard failure.

The solver runs on the ``"above"`` convention.  Validation picked it:
with ``"above"`` the first approximations are unitriangular against
dominance with diagonal coefficient exactly 1 and the eliminated columns
land in q.Z[q], both of which are asserted at runtime; ``"below"``
produces the bar-flipped matrix and fails those assertions already at
one box.  The convention in force is recorded on the matrix and in the
cache key.

First approximation.  A regular mu is peeled to empty by the ladder
rule: repeatedly remove the maximal *leading* run of minus signs of some
i-signature (smallest such residue first), i.e. the top removable
i-nodes sitting above all other i-activity.  The run list replayed in
reverse as divided powers on |empty> gives a vector A(mu) with
coefficient exactly 1 at |mu| and all other terms strictly later in the
refined dominance order.  Divided powers commute with the bar involution
and fix |empty>, so every A(mu) is bar-invariant; corrections by
bar-closures of offending coefficients therefore keep the eliminated
columns bar-invariant without any combinatorial bar formula.
"""

import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache

from .crystal import good_peel, is_regular, signature
from .laurent import LaurentPoly, ONE, ZERO, quantum_factorial
from .partitions import (
    Bipartition, EMPTY_BP, add_node, addable_nodes, bipartitions, check_e,
    dominance_key, format_bipartition, parse_bipartition, remove_node,
)
from .tableaux import graded_dimension, node_degree

BELOW = "below"
ABOVE = "above"

FockVector = dict[Bipartition, LaurentPoly]


@lru_cache(maxsize=None)
def _f_targets(bp: Bipartition, i: int, e: int, above: bool):
    out = []
    for node in addable_nodes(bp, i, e):
        grown = add_node(bp, node)
        out.append((grown, node_degree(grown, node, e, above)))
    return tuple(out)


def apply_f(vec: FockVector, i: int, e: int, convention: str = BELOW) -> FockVector:
    """One induction step, extended linearly."""
    check_e(e)
    above = convention == ABOVE
    acc: dict[Bipartition, dict[int, int]] = {}
    for bp, coeff in vec.items():
        for grown, d in _f_targets(bp, i % e, e, above):
            slot = acc.setdefault(grown, {})
            for exp, c in coeff.iter_terms():
                k = exp + d
                nv = slot.get(k, 0) + c
                if nv:
                    slot[k] = nv
                else:
                    del slot[k]
    return {bp: LaurentPoly._raw(d) for bp, d in acc.items() if d}


def apply_f_divided(vec: FockVector, i: int, m: int, e: int,
                    convention: str = BELOW) -> FockVector:
    """The divided power: f_i^m followed by exact division by [m]!."""
    if m < 1:
        raise ValueError(f"divided power needs m >= 1, got {m}")
    out = vec
    for _ in range(m):
        out = apply_f(out, i, e, convention)
    if m == 1:
        return out
    qfact = quantum_factorial(m)
    divided: FockVector = {}
    for bp, coeff in out.items():
        try:
            divided[bp] = coeff.exact_div(qfact)
        except ValueError as exc:
            raise RuntimeError(
                f"divided power not exact at {bp} (i={i}, m={m}, e={e}, "
                f"convention={convention}): {coeff} / {qfact}") from exc
    return divided


def peel_runs(mu: Bipartition, e: int) -> tuple[tuple[int, int], ...]:
    """Equal-residue runs peeling mu to empty: at each stage remove the
    maximal *leading* run of minus signs of some i-signature (smallest
    such residue first), i.e. the top removable i-nodes sitting above all
    other i-activity.

    This is the ladder reading adapted to the two-component node order:
    replayed upwards, each batch adds the top addable i-nodes of the
    partial shape with no removable i-node above them, which pins the
    leading coefficient of the first approximation to exactly 1.  Peeling
    good-node strings instead loses that property (first seen at e = 2 on
    eight boxes), so it is not used here.
    """
    check_e(e)
    if good_peel(mu, e) is None:
        raise ValueError(f"{mu} is not regular for e={e}")
    runs = []
    cur = mu
    while cur != EMPTY_BP:
        progressed = False
        for i in range(e):
            run = []
            for sign, node in signature(cur, i, e):
                if sign != "-":
                    break
                run.append(node)
            if run:
                for node in run:
                    cur = remove_node(cur, node)
                runs.append((i, len(run)))
                progressed = True
                break
        if not progressed:
            raise RuntimeError(
                f"ladder peel of regular {mu} stuck at {cur} (e={e})")
    return tuple(runs)


def first_approximation(mu: Bipartition, e: int,
                        convention: str = ABOVE) -> FockVector:
    """A(mu): the reversed peel runs applied as divided powers to |empty>.

    The coefficient of |mu> is exactly 1 and all other support labels
    come strictly later in the lexicographic refinement of dominance by
    partial-sum vectors (the labels need not all be dominated by mu; the
    eliminated columns are, which the solver asserts)."""
    vec: FockVector = {EMPTY_BP: ONE}
    for i, m in reversed(peel_runs(mu, e)):
        vec = apply_f_divided(vec, i, m, e, convention)
    if vec.get(mu) != ONE:
        raise RuntimeError(
            f"first approximation of {mu} has leading coefficient "
            f"{vec.get(mu)}, convention={convention}")
    kmu = dominance_key(mu)
    for lam in vec:
        if lam != mu and not dominance_key(lam) < kmu:
            raise RuntimeError(
                f"first approximation of {mu} has support at {lam} "
                f"not below it in the refined order")
    return vec


@dataclass
class DecompositionMatrix:
    """Columns are canonical-basis vectors indexed by regular bipartitions;
    rows run over all bipartitions of n.  Unitriangular against dominance
    with off-diagonal entries in q.Z[q]."""
    n: int
    e: int
    convention: str
    columns: dict[Bipartition, dict[Bipartition, LaurentPoly]]

    def regulars(self) -> list[Bipartition]:
        return sorted(self.columns, key=lambda bp: dominance_key(bp, self.n),
                      reverse=True)

    def rows(self) -> list[Bipartition]:
        return sorted(bipartitions(self.n),
                      key=lambda bp: dominance_key(bp, self.n), reverse=True)

    def entry(self, lam: Bipartition, mu: Bipartition) -> LaurentPoly:
        return self.columns[mu].get(lam, ZERO)

    def row(self, lam: Bipartition) -> dict[Bipartition, LaurentPoly]:
        out = {}
        for mu, col in self.columns.items():
            val = col.get(lam)
            if val:
                out[mu] = val
        return out

    def to_obj(self):
        return {
            "n": self.n,
            "e": self.e,
            "convention": self.convention,
            "columns": {
                format_bipartition(mu): {
                    format_bipartition(lam): val.to_pairs()
                    for lam, val in sorted(
                        col.items(),
                        key=lambda kv: dominance_key(kv[0], self.n),
                        reverse=True)
                }
                for mu, col in sorted(
                    self.columns.items(),
                    key=lambda kv: dominance_key(kv[0], self.n), reverse=True)
            },
        }

    @classmethod
    def from_obj(cls, obj) -> "DecompositionMatrix":
        columns = {
            parse_bipartition(mu): {
                parse_bipartition(lam): LaurentPoly.from_pairs(pairs)
                for lam, pairs in col.items()
            }
            for mu, col in obj["columns"].items()
        }
        return cls(n=int(obj["n"]), e=int(obj["e"]),
                   convention=obj["convention"], columns=columns)


def default_cache_dir() -> str:
    env = os.environ.get("BIHOOKS_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "bihooks")


_MEMORY: dict[tuple[int, int, str], DecompositionMatrix] = {}


def canonical_basis(n: int, e: int, cache_dir: str | None = None,
                    convention: str = ABOVE,
                    use_cache: bool = True) -> DecompositionMatrix:
    """Compute (or load) the canonical-basis matrix at n boxes.

    For each regular mu in increasing dominance order, the first
    approximation A(mu) is corrected by bar-invariant multiples of the
    already-computed columns until every other regular coefficient lies
    in q.Z[q]; unitriangularity of the result over *all* rows is
    asserted, not assumed.
    """
    check_e(e)
    if convention not in (ABOVE, BELOW):
        raise ValueError(f"unknown convention {convention!r}")
    key = (n, e, convention)
    path = None
    if use_cache:
        path = os.path.join(cache_dir or default_cache_dir(),
                            f"llt_e{e}_n{n}_{convention}.json")
    matrix = _MEMORY.get(key) if use_cache else None
    if matrix is None and path is not None and os.path.exists(path):
        with open(path) as fh:
            loaded = DecompositionMatrix.from_obj(json.load(fh))
        if (loaded.n, loaded.e, loaded.convention) == key:
            matrix = loaded
    if matrix is None:
        matrix = _compute_canonical_basis(n, e, convention)
    if use_cache:
        _MEMORY[key] = matrix
        if path is not None and not os.path.exists(path):
            os.makedirs(os.path.dirname(path), exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(matrix.to_obj(), fh)
            os.replace(tmp, path)
    return matrix


def _compute_canonical_basis(n: int, e: int, convention: str) -> DecompositionMatrix:
    regs = [bp for bp in bipartitions(n) if is_regular(bp, e)]
    key_of = {bp: dominance_key(bp, n) for bp in bipartitions(n)}
    regs.sort(key=lambda bp: key_of[bp], reverse=True)

    approx: dict[Bipartition, FockVector] = {}
    for mu in regs:
        approx[mu] = first_approximation(mu, e, convention)

    columns: dict[Bipartition, dict[Bipartition, LaurentPoly]] = {}
    for idx in range(len(regs) - 1, -1, -1):
        mu = regs[idx]
        vec = dict(approx.pop(mu))
        # clear every already-computed column, most dominant first; the
        # first-approximation support bound guarantees nothing is needed
        # beyond those
        for lam in regs[idx + 1:]:
            c = vec.get(lam)
            if not c:
                continue
            correction = c.bar_closure()
            if not correction:
                continue
            for bp, gval in columns[lam].items():
                nv = vec.get(bp, ZERO) - correction * gval
                if nv:
                    vec[bp] = nv
                else:
                    vec.pop(bp, None)
        if vec.get(mu) != ONE:
            raise RuntimeError(
                f"column {mu}: diagonal is {vec.get(mu)}, expected 1 "
                f"(convention {convention})")
        kmu = key_of[mu]
        for bp, val in vec.items():
            if bp == mu:
                continue
            if not all(a >= b for a, b in zip(kmu, key_of[bp])):
                raise RuntimeError(
                    f"column {mu} has support at {bp} not dominated by it")
            if not val.in_q_window():
                raise RuntimeError(
                    f"column {mu}, row {bp}: entry {val} outside q.Z[q]")
        columns[mu] = vec
    return DecompositionMatrix(n=n, e=e, convention=convention, columns=columns)


def simple_graded_dims_from(matrix: DecompositionMatrix) -> dict[Bipartition, LaurentPoly]:
    """Solve the unitriangular system qdim(S_lam) = sum_mu d(lam,mu) qdim(D_mu)
    over the regular rows.  Solutions must be bar-invariant with
    nonnegative coefficients; anything else is a convention fault."""
    e = matrix.e
    out: dict[Bipartition, LaurentPoly] = {}
    for mu in matrix.regulars():
        val = graded_dimension(mu, e)
        for nu, coeff in matrix.row(mu).items():
            if nu == mu:
                continue
            val = val - coeff * out[nu]
        if not val.is_bar_invariant() or not val.has_nonneg_coeffs():
            raise RuntimeError(
                f"graded dimension of simple {mu} came out as {val}; "
                "q-convention fault")
        out[mu] = val
    return out


def simple_graded_dims(n: int, e: int, cache_dir: str | None = None,
                       use_cache: bool = True) -> dict[Bipartition, LaurentPoly]:
    return simple_graded_dims_from(
        canonical_basis(n, e, cache_dir=cache_dir, use_cache=use_cache))

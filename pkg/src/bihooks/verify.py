"""Cross-check suites: each suite sweeps one family of identities over a
bounded grid and reports the failures with reproducing inputs.

Bounds are keyword arguments with defaults sized to finish in minutes on
one core; the command line exposes them as flags.
"""

import time
from collections import Counter
from dataclasses import dataclass, field

from . import crystal, fock, schur, structure, tableaux
from .laurent import LaurentPoly, ZERO, c_factor
from .partitions import (
    EMPTY_BP, add_node, addable_nodes, all_nodes, as_bipartition, bipartitions,
    conjugate, dominance_key, format_bipartition, hook_length, partitions,
    removable_nodes, residue, size,
)


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, repro: str):
        self.cases += 1
        if not condition:
            self.failures.append(repro)

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return (f"suite {self.suite}: {self.cases} cases, {status} "
                f"({self.seconds:.1f}s)")


def _compositions(n: int) -> list[tuple[int, ...]]:
    out = []
    for cuts in range(2 ** max(n - 1, 0)):
        parts, cur = [], 1
        for bit in range(n - 1):
            if cuts >> bit & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        out.append(tuple(parts))
    return out


def combinatorics_suite(max_n: int = 12, **_) -> SuiteReport:
    rep = SuiteReport("combinatorics")
    t0 = time.time()
    for n in range(max_n + 1):
        for bp in bipartitions(n):
            rep.check(conjugate(conjugate(bp)) == bp,
                      f"conjugate involution at {format_bipartition(bp)}")
    # dominance is a partial order (bitset transitivity)
    dn = min(max_n, 8)
    for n in range(dn + 1):
        bps = bipartitions(n)
        keys = [dominance_key(bp, n) for bp in bps]
        below = []
        for ka in keys:
            mask = 0
            for idx, kb in enumerate(keys):
                if all(x >= y for x, y in zip(ka, kb)):
                    mask |= 1 << idx
            below.append(mask)
        for idx, bp in enumerate(bps):
            rep.check(below[idx] >> idx & 1, f"dominance reflexive at {bp}")
        for ia in range(len(bps)):
            for ib in range(len(bps)):
                if ia != ib and below[ia] >> ib & 1:
                    rep.check(not below[ib] >> ia & 1,
                              f"dominance antisymmetry at {bps[ia]}, {bps[ib]}")
                    rep.check(below[ia] | below[ib] == below[ia],
                              f"dominance transitivity at {bps[ia]}, {bps[ib]}")
    for n in range(1, min(max_n, 10) + 1):
        for lam in partitions(n):
            hooks = [hook_length(lam, r + 1, c + 1)
                     for r, length in enumerate(lam) for c in range(length)]
            rep.check(len(hooks) == n and all(h >= 1 for h in hooks),
                      f"hook lengths of {lam}")
    for e in (2, 3, 4, 5):
        for r in range(1, 6):
            for c in range(1, 6):
                for m in (1, 2):
                    rep.check(residue((r, c, m), e) == (c - r) % e,
                              f"residue({r},{c},{m}) mod {e}")
    for n in range(min(max_n, 8) + 1):
        for bp in bipartitions(n):
            nodes = set(all_nodes(bp))
            adds, rems = addable_nodes(bp), removable_nodes(bp)
            rep.check(not (set(adds) & nodes), f"addables meet {bp}")
            rep.check(set(rems) <= nodes, f"removables outside {bp}")
            for node in adds:
                grown = add_node(bp, node)
                rep.check(as_bipartition(grown) == grown and size(grown) == n + 1,
                          f"add {node} to {bp}")
    rep.seconds = time.time() - t0
    return rep


def crystal_suite(max_n: int = 10, es=(2, 3, 4), **_) -> SuiteReport:
    rep = SuiteReport("crystal")
    t0 = time.time()
    for e in es:
        reachable = {EMPTY_BP}
        frontier = [EMPTY_BP]
        for _ in range(max_n):
            nxt = []
            for bp in frontier:
                for i in range(e):
                    up = crystal.f_tilde(bp, i, e)
                    if up is not None and up not in reachable:
                        reachable.add(up)
                        nxt.append(up)
            frontier = nxt
        for n in range(max_n + 1):
            for bp in bipartitions(n):
                for i in range(e):
                    red = crystal.reduced_signature(bp, i, e)
                    signs = "".join(s for s, _ in red)
                    rep.check("+-" not in signs,
                              f"reduced signature shape {bp} i={i} e={e}")
                    stack = []
                    for s, node in red:
                        if s == "-" and stack and stack[-1][0] == "+":
                            stack.pop()
                        else:
                            stack.append((s, node))
                    rep.check(stack == red, f"reduction idempotence {bp} i={i} e={e}")
                    up = crystal.f_tilde(bp, i, e)
                    if up is not None:
                        rep.check(size(up) == n + 1 and as_bipartition(up) == up,
                                  f"f-tilde growth {bp} i={i} e={e}")
                        rep.check(crystal.e_tilde(up, i, e) == bp,
                                  f"e-tilde after f-tilde {bp} i={i} e={e}")
                # backtracking regularity test against reachability oracle
                rep.check(crystal.is_regular(bp, e) == (bp in reachable),
                          f"regularity oracle {format_bipartition(bp)} e={e}")
            for bp in bipartitions(n):
                if not crystal.is_regular(bp, e):
                    continue
                img = crystal.mullineux(bp, e)
                rep.check(size(img) == n and crystal.is_regular(img, e),
                          f"mullineux image {format_bipartition(bp)} e={e}")
                rep.check(crystal.mullineux(img, e) == bp,
                          f"mullineux involution {format_bipartition(bp)} e={e}")
    for e in es:
        for n in range(1, 9):
            for m in range(n // 2 + 1):
                lab = crystal.scrt(schur.two_column(m, n), e)
                rep.check(size(lab) == n * e and crystal.is_regular(lab, e),
                          f"scrt size/regularity m={m} n={n} e={e}")
    for e in [x for x in es if x <= 4]:
        pairs = [(a, b) for a in range(e + 1) for b in range(e)
                 if (a == 0 and b == 0) or (a > 0 and a + b != e)]
        for a, b in pairs:
            for k in range(1, 5):
                for j in range(1, k + 1):
                    got = crystal.induce(((k * e,), (j * e,)), a, b, e)
                    want = as_bipartition(((k * e + a,) + (1,) * b,
                                           (j * e + a,) + (1,) * b))
                    rep.check(got == want,
                              f"induction closed form k={k} j={j} a={a} b={b} e={e}")
                    got = crystal.induce(((1,) * (j * e), (1,) * (k * e)),
                                         a, b, e, negate=True)
                    want = as_bipartition(((b + 1,) + (1,) * (j * e + a - 1),
                                           (b + 1,) + (1,) * (k * e + a - 1)))
                    rep.check(got == want,
                              f"negated induction closed form k={k} j={j} "
                              f"a={a} b={b} e={e}")
    rep.seconds = time.time() - t0
    return rep


def schur_suite(max_n: int = 30, primes=(2, 3, 5, 7, 11), **_) -> SuiteReport:
    rep = SuiteReport("schur")
    t0 = time.time()
    for p in primes:
        for n in range(2, max_n + 1):
            for j in range(1, min(4, n // 2) + 1):
                lhs = schur.simultaneous_irreducibility(n, j, p)
                rhs = all(schur.weyl_is_irreducible(schur.two_column(r, n), p)
                          for r in range(j + 1))
                rep.check(lhs == rhs, f"simultaneous irreducibility n={n} j={j} p={p}")
    for p in primes:
        for n in range(1, min(max_n, 20) + 1):
            for m in range(n // 2 + 1):
                rep.check(schur.decomp_number(m, m, n, p) == 1,
                          f"decomp diagonal m={m} n={n} p={p}")
                for jj in range(n // 2 + 1):
                    if jj > m:
                        rep.check(schur.decomp_number(m, jj, n, p) == 0,
                                  f"decomp unitriangular m={m} jj={jj} n={n} p={p}")
    for j in range(1, 9):
        ell = j.bit_length()
        for k in range(j, 41):
            many = schur.num_summands(k, j, 2) > 1
            rep.check(many == bool((k - j) % (1 << ell)),
                      f"p=2 summand criterion k={k} j={j}")
    for p in primes:
        for n in range(4, max_n + 1):
            for j in range(2, n // 2 + 1):
                k = n - j
                i = structure.almost_ss_residue(k, j, p)
                if i is None:
                    continue
                if j == p and i == j - 1 and (k + 1) % (p * p) != 0:
                    expected = 1 + (j - (i + 2) // 2 + 1)
                else:
                    expected = max(i - j + 1, 0) + (j - (i + 2) // 2 + 1)
                rep.check(schur.num_summands(k, j, p) == expected,
                          f"summand closed form k={k} j={j} p={p}")
    for total in range(2, 7):
        for j in range(1, total // 2 + 1):
            k = total - j
            for mu in _compositions(total):
                lhs = sum(schur.kostka_two_column(schur.two_column(r, total), mu)
                          for r in range(j + 1))
                rep.check(lhs == schur.exterior_weight_dim(j, k, mu),
                          f"kostka column sums k={k} j={j} mu={mu}")
            for r in range(j + 1):
                shape = schur.two_column(r, total)
                rep.check(schur.kostka_two_column(shape, shape) == 1,
                          f"kostka diagonal {shape}")
    rep.seconds = time.time() - t0
    return rep


def structure_suite(max_kj: int = 14, primes=(0, 2, 3, 5, 7), es=(2, 3), **_) -> SuiteReport:
    rep = SuiteReport("structure")
    t0 = time.time()
    for e in es:
        for p in primes:
            for total in range(2, max_kj + 1):
                for j in range(1, total // 2 + 1):
                    k = total - j
                    v = structure.predict(k, j, e, p)
                    tag = f"e={e} p={p} k={k} j={j}"
                    if v.structure is None:
                        many = schur.num_summands(k, j, p) > 1
                        rep.check(v.status ==
                                  (structure.DECOMPOSABLE if many
                                   else structure.INDECOMPOSABLE),
                                  f"verdict vs summand count {tag}")
                        continue
                    rep.check(v.structure.num_summands() == schur.num_summands(k, j, p),
                              f"summand count {tag}")
                    rep.check(Counter(v.structure.labels())
                              == Counter(structure.composition_labels(k, j, e, p)),
                              f"composition multiset {tag}")
                    rep.check(all(lab.shift == j for lab in v.structure.labels()),
                              f"uniform shift {tag}")
                    rep.check(all(crystal.is_regular(lab.bipartition, e)
                                  for lab in v.structure.labels()),
                              f"regular labels {tag}")
                    for s in v.structure.summands:
                        if isinstance(s, structure.Uniserial):
                            rep.check(list(s.layers) == list(reversed(s.layers)),
                                      f"palindromic layers {tag}")
    for e in es:
        for p in (2, 3, 5, 7):
            for k in range(2, 21):
                if structure.almost_ss_residue(k, 2, p) is None:
                    continue
                a = structure.translate_two_column(
                    structure.almost_ss_structure(k, 2, p), e, 2)
                b = structure.structure_j2(k, e, p)
                rep.check(sorted(map(repr, a.summands)) == sorted(map(repr, b.summands)),
                          f"j=2 overlap e={e} p={p} k={k}")
    rep.seconds = time.time() - t0
    return rep


def _llt_matrix_checks(rep: SuiteReport, matrix, e: int, n: int):
    key_of = {bp: dominance_key(bp, n) for bp in matrix.rows()}
    for mu, col in matrix.columns.items():
        rep.check(col.get(mu) == LaurentPoly.q_power(0),
                  f"diagonal e={e} n={n} {format_bipartition(mu)}")
        for lam, val in col.items():
            if lam == mu:
                continue
            rep.check(val.in_q_window() and
                      all(x >= y for x, y in zip(key_of[mu], key_of[lam])),
                      f"window/triangularity e={e} n={n} "
                      f"{format_bipartition(lam)},{format_bipartition(mu)}")
    qdim = fock.simple_graded_dims_from(matrix)
    for lam in matrix.rows():
        lhs = tableaux.graded_dimension(lam, e)
        rhs = sum((val * qdim[mu] for mu, val in matrix.row(lam).items()), ZERO)
        rep.check(lhs == rhs,
                  f"dimension balance e={e} n={n} {format_bipartition(lam)}")


def llt_suite(es=(2, 3), max_kj: int = 5, max_n: int = 12,
              cache_dir=None, use_cache=True, **_) -> SuiteReport:
    rep = SuiteReport("llt")
    t0 = time.time()
    for e in es:
        # window, triangularity and balance across whole levels (every
        # box count, capped lower for e > 3)
        sweep = min(max_n, 10) if e >= 4 else max_n
        for n in range(sweep + 1):
            matrix = fock.canonical_basis(n, e, cache_dir=cache_dir,
                                          use_cache=use_cache)
            _llt_matrix_checks(rep, matrix, e, n)
        for total in range(2, max_kj + 1):
            n = total * e
            matrix = fock.canonical_basis(n, e, cache_dir=cache_dir,
                                          use_cache=use_cache)
            if n > sweep:
                _llt_matrix_checks(rep, matrix, e, n)
            for j in range(1, total // 2 + 1):
                k = total - j
                lam = ((k * e,), (j * e,))
                row = matrix.row(lam)
                want = {lab.bipartition
                        for lab in structure.semisimple_decomposition(k, j, e).labels()}
                ok = (set(row) == want and
                      all(v == LaurentPoly.q_power(j) for v in row.values()))
                rep.check(ok, f"single-degree concentration e={e} k={k} j={j}")
            # conjugate family: entries q^(2k+j) at the Mullineux labels,
            # independently fixing the grading shift of the transposed
            # structures
            for j in range(1, total // 2 + 1):
                k = total - j
                lam = ((1,) * (j * e), (1,) * (k * e))
                row = matrix.row(lam)
                want = {crystal.mullineux(lab.bipartition, e) for lab in
                        structure.semisimple_decomposition(k, j, e).labels()}
                ok = (set(row) == want and
                      all(v == LaurentPoly.q_power(2 * k + j)
                          for v in row.values()))
                rep.check(ok, f"conjugate concentration e={e} k={k} j={j}")
    # induced families against the label maps: rows of the induced bihook
    # concentrate at q^j on the induced labels, and the induction recipe
    # carries the bihook basis vector to exactly the induced one
    for e in es:
        pairs = [(a, b) for a in range(1, e + 1) for b in range(e)
                 if a + b != e and 2 * (a + b) + 2 * e <= max_n + 4]
        for a, b in pairs:
            for total in (2, 3):
                for j in range(1, total // 2 + 1):
                    k = total - j
                    n = total * e + 2 * (a + b)
                    if n > max_n + 4:
                        continue
                    matrix = fock.canonical_basis(n, e, cache_dir=cache_dir,
                                                  use_cache=use_cache)
                    base = ((k * e,), (j * e,))
                    vec = {base: LaurentPoly.q_power(0)}
                    for i, mult in crystal.induction_recipe(a, b, e):
                        vec = fock.apply_f_divided(vec, i, mult, e, fock.ABOVE)
                    induced = crystal.induce(base, a, b, e)
                    rep.check(vec == {induced: LaurentPoly.q_power(0)},
                              f"recipe transports the bihook vector "
                              f"e={e} k={k} j={j} a={a} b={b}")
                    row = matrix.row(induced)
                    want = {crystal.induce(lab.bipartition, a, b, e) for lab in
                            structure.semisimple_decomposition(k, j, e).labels()}
                    ok = (set(row) == want and
                          all(v == LaurentPoly.q_power(j) for v in row.values()))
                    rep.check(ok, f"induced concentration e={e} k={k} j={j} "
                                  f"a={a} b={b}")
                    conj = as_bipartition(
                        ((b + 1,) + (1,) * (j * e + a - 1),
                         (b + 1,) + (1,) * (k * e + a - 1)))
                    row = matrix.row(conj)
                    want = {crystal.mullineux(bp, e) for bp in want}
                    ok = (set(row) == want and
                          all(v == LaurentPoly.q_power(2 * k + j)
                              for v in row.values()))
                    rep.check(ok, f"conjugate induced concentration e={e} "
                                  f"k={k} j={j} a={a} b={b}")
    rep.seconds = time.time() - t0
    return rep


def words_suite(es=(2, 3), max_kj: int = 4, max_n: int = 10, **_) -> SuiteReport:
    rep = SuiteReport("words")
    t0 = time.time()
    for e in es:
        for total in range(2, max_kj + 1):
            for j in range(1, total // 2 + 1):
                k = total - j
                lam = ((k * e,), (j * e,))
                for mu in _compositions(total):
                    lhs = tableaux.word_graded_dimension(lam, tableaux.gg_word(mu, e), e)
                    rhs = (LaurentPoly.q_power(j) * c_factor(mu, e)
                           * schur.exterior_weight_dim(j, k, mu))
                    rep.check(lhs == rhs, f"word identity e={e} k={k} j={j} mu={mu}")
    # bucket tableaux by residue sequence (enumeration route) and compare
    # every bucket against the peel recursion; the buckets also sum to the
    # full graded dimension
    for e in es:
        for n in range(0, max_n + 1):
            for lam in bipartitions(n):
                buckets: dict[tuple, LaurentPoly] = {}
                for t in tableaux.standard_tableaux(lam):
                    w = tableaux.residue_sequence(t, e)
                    buckets[w] = buckets.get(w, ZERO) + \
                        LaurentPoly.q_power(tableaux.codegree(t, e))
                for w, val in buckets.items():
                    rep.check(val == tableaux.word_graded_dimension(lam, w, e),
                              f"word space e={e} {format_bipartition(lam)} {w}")
                rep.check(sum(buckets.values(), ZERO)
                          == tableaux.graded_dimension(lam, e),
                          f"word sums e={e} {format_bipartition(lam)}")
    rep.seconds = time.time() - t0
    return rep


def degrees_suite(es=(2, 3, 4, 5), max_kj: int = 6, **_) -> SuiteReport:
    rep = SuiteReport("degrees")
    t0 = time.time()
    for e in es:
        for total in range(2, max_kj + 1):
            for j in range(1, total // 2 + 1):
                k = total - j
                lam = ((k * e,), (j * e,))
                word = tableaux.residue_sequence(
                    tableaux.column_initial_tableau(lam), e)
                matching = tableaux.standard_tableaux(lam, word=word, e=e,
                                                      bound=total * e)
                rep.check(bool(matching), f"no matching tableaux e={e} k={k} j={j}")
                for t in matching:
                    rep.check(tableaux.codegree(t, e) == j,
                              f"codegree j on residue-matched tableau e={e} "
                              f"k={k} j={j} {t}")
                source = as_bipartition(((k * e, j * e - e + 1), (e - 1,)))
                cod1 = tableaux.codegree(tableaux.column_initial_tableau(source), e)
                entries = list(range(1, e)) + list(range(e + 1, 2 * j * e - e + 2, 2))
                cod2 = tableaux.codegree(tableaux.v_tableau(lam, entries), e)
                want = (2 * j, 3 * j) if e == 2 else (1, j + 1)
                rep.check((cod1, cod2) == want,
                          f"codegree pair e={e} k={k} j={j}: got {(cod1, cod2)}, "
                          f"expected {want}")
    rep.seconds = time.time() - t0
    return rep


SUITES = {
    "combinatorics": combinatorics_suite,
    "crystal": crystal_suite,
    "schur": schur_suite,
    "structure": structure_suite,
    "llt": llt_suite,
    "words": words_suite,
    "degrees": degrees_suite,
}


def run_suite(name: str, **bounds) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    clean = {k: v for k, v in bounds.items() if v is not None}
    return SUITES[name](**clean)

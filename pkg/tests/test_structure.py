from collections import Counter

import pytest

from bihooks.crystal import is_regular
from bihooks.partitions import format_bipartition
from bihooks.schur import num_summands, two_column
from bihooks.structure import (
    Diagram, Semisimple, Uniserial, almost_ss_residue,
    almost_ss_structure, braces_transpose_label, composition_labels,
    decomposability, predict, semisimple_decomposition,
    semisimplicity_criterion, structure_j1, structure_j2,
    translate_two_column,
)


def labelset(struct):
    return {(format_bipartition(lab.bipartition), lab.shift)
            for lab in struct.labels()}


def test_semisimplicity_criterion():
    assert semisimplicity_criterion(7, 5, 0)
    assert semisimplicity_criterion(2, 1, 2)
    assert not semisimplicity_criterion(7, 2, 3)
    assert semisimplicity_criterion(5, 2, 2)
    assert not semisimplicity_criterion(3, 2, 2)
    with pytest.raises(ValueError):
        semisimplicity_criterion(1, 2, 3)


def test_semisimple_decomposition_example():
    struct = semisimple_decomposition(7, 5, 3)
    assert labelset(struct) == {
        ("33,1|2", 5), ("30,4|2", 5), ("27,7|2", 5),
        ("24,10|2", 5), ("21,13|2", 5), ("36|-", 5)}
    assert struct.num_summands() == 6
    small = semisimple_decomposition(1, 1, 4)
    assert labelset(small) == {("4,1|3", 1), ("8|-", 1)}


def test_structure_j1():
    ss = structure_j1(2, 3, 0)
    assert ss.num_summands() == 2
    uni = structure_j1(3, 2, 2)
    assert uni.num_summands() == 1
    layers = uni.summands[0].layers
    assert [format_bipartition(l.bipartition) for l in layers] == \
        ["8|-", "6,1|1", "8|-"]
    assert all(l.shift == 1 for l in layers)
    uni3 = structure_j1(2, 2, 3)
    assert isinstance(uni3.summands[0], Uniserial)
    assert len(uni3.summands[0].layers) == 3


def test_structure_j2_cases():
    # (ii) p | k+2, at e = 3
    s = structure_j2(4, 3, 3)
    kinds = sorted(type(x).__name__ for x in s.summands)
    assert kinds == ["Semisimple", "Uniserial"]
    uni = [x for x in s.summands if isinstance(x, Uniserial)][0]
    assert [format_bipartition(l.bipartition) for l in uni.layers] == \
        ["18|-", "15,1|2", "18|-"]
    # (v) p=2, k=0 mod 4
    s = structure_j2(4, 2, 2)
    uni = [x for x in s.summands if isinstance(x, Uniserial)][0]
    assert [format_bipartition(l.bipartition) for l in uni.layers] == \
        ["10,1|1", "12|-", "8,3|1", "12|-", "10,1|1"]
    simple = [x for x in s.summands if isinstance(x, Semisimple)][0]
    assert format_bipartition(simple.factors[0].bipartition) == "12|-"
    # (vi) p=2, k=2 mod 4: one five-vertex diagram
    s = structure_j2(2, 2, 2)
    assert s.num_summands() == 1
    d = s.summands[0]
    assert isinstance(d, Diagram)
    assert [format_bipartition(v.bipartition) for v in d.vertices] == \
        ["8|-", "6,1|1", "4,3|1", "6,1|1", "8|-"]
    assert d.edges == ((0, 1), (2, 1), (3, 2), (3, 4))


def test_almost_ss_hypothesis():
    assert almost_ss_residue(7, 3, 3) is None  # 3 divides 9 and 6
    assert almost_ss_residue(4, 2, 3) == 0
    assert almost_ss_residue(3, 3, 5) == 1
    assert almost_ss_residue(5, 2, 7) == 0 or almost_ss_residue(5, 2, 7) is None


def test_almost_ss_exceptional_branch():
    # j = p = 3, k = 5: k+1 = 6 is divisible by 3 but not 9, so the largest
    # filtration shape is simple and there are three summands
    struct = almost_ss_structure(5, 3, 3)
    assert struct.num_summands() == 3 == num_summands(5, 3, 3)
    labels = Counter(struct.labels())
    assert labels == Counter({two_column(0, 8): 1, two_column(1, 8): 2,
                              two_column(2, 8): 1, two_column(3, 8): 1})
    # j = p = 3, k = 8: 9 divides k+1, generic shape applies
    struct = almost_ss_structure(8, 3, 3)
    assert struct.num_summands() == 2 == num_summands(8, 3, 3)


def test_almost_ss_matches_j2():
    for e in (2, 3):
        for p in (2, 3, 5, 7):
            for k in range(2, 21):
                if almost_ss_residue(k, 2, p) is None:
                    continue
                a = translate_two_column(almost_ss_structure(k, 2, p), e, 2)
                b = structure_j2(k, e, p)
                assert sorted(map(repr, a.summands)) == \
                    sorted(map(repr, b.summands)), (e, p, k)


def test_predict_worked_examples():
    v = predict(7, 5, 3, 0)
    assert v.status == "decomposable"
    assert labelset(v.structure) == {
        ("33,1|2", 5), ("30,4|2", 5), ("27,7|2", 5),
        ("24,10|2", 5), ("21,13|2", 5), ("36|-", 5)}
    v = predict(1, 1, 4, 0, a=2, b=1)
    assert labelset(v.structure) == {("6,3|4,1", 1), ("10,1|2,1", 1)}
    v = predict(1, 1, 4, 0, a=2, b=3)
    assert labelset(v.structure) == {("6,3,1,1|4,1,1,1", 1),
                                     ("10,1,1,1|2,1,1,1", 1)}


def test_predict_five_factor_example():
    v = predict(7, 3, 2, 3)
    assert v.status == "decomposable"
    assert v.structure.num_summands() == 2
    diagram = [s for s in v.structure.summands if isinstance(s, Diagram)][0]
    assert len(diagram.vertices) == 5
    assert diagram.edges == ((0, 1), (2, 1), (3, 2), (3, 4))
    simple = [s for s in v.structure.summands if isinstance(s, Semisimple)][0]
    assert simple.factors[0].bipartition == ((18, 1), (1,))  # scrt(2,1^8) at e=2


def test_predict_fallback_unknown_structure():
    v = predict(6, 3, 2, 3)  # 3 divides both 9 and 6; no covered statement
    assert v.structure is None
    assert v.status == "decomposable"
    assert v.composition is not None
    assert len(v.composition) == sum(
        1 for _ in composition_labels(6, 3, 2, 3))
    # p=2, k=j=4: indecomposable by the 2-power congruence, no structure
    v = predict(4, 4, 2, 2)
    assert v.structure is None and v.status == "indecomposable"


def test_predict_swapped_components():
    base = predict(2, 1, 3, 0)
    swapped = predict(1, 2, 3, 0)
    assert swapped.structure is not None
    assert {lab.bipartition for lab in swapped.structure.labels()} == \
        {lab.bipartition for lab in base.structure.labels()}
    assert all(lab.shift == 2 for lab in swapped.structure.labels())
    assert any("dual" in note for note in swapped.notes)
    # uniserial case dualises to the same palindrome
    swapped = predict(2, 3, 2, 5)  # base (3,2) with p=5 | k+2
    assert swapped.structure is not None
    for s in swapped.structure.summands:
        if isinstance(s, Uniserial):
            assert list(s.layers) == list(reversed(s.layers))
            assert all(lab.shift == 3 for lab in s.layers)


def test_predict_transpose():
    v = predict(2, 1, 3, 0, transpose=True)
    assert v.structure is not None
    assert labelset(v.structure) == {("5,4|-", 5), ("3,3,1|1,1", 5)}
    # shift is 2k + j and labels are the Mullineux images
    v2 = predict(3, 1, 2, 2, transpose=True)
    uni = v2.structure.summands[0]
    assert isinstance(uni, Uniserial)
    assert all(lab.shift == 7 for lab in uni.layers)


def test_transpose_labels_agree_with_braces_route():
    for e in (2, 3, 4):
        pairs = [(a, b) for a in range(e + 1) for b in range(e)
                 if (a == 0 and b == 0) or (a > 0 and a + b != e)]
        for a, b in pairs[:6]:
            base = predict(2, 1, e, 0)
            via_mull = predict(2, 1, e, 0, a=a, b=b, transpose=True)
            for lab in base.structure.labels():
                expected = braces_transpose_label(lab, a, b, e)
                assert any(got.bipartition == expected.bipartition
                           for got in via_mull.structure.labels())


def test_predict_validation():
    with pytest.raises(ValueError):
        predict(2, 1, 1, 0)
    with pytest.raises(ValueError):
        predict(2, 1, 3, 4)  # p not prime
    with pytest.raises(ValueError):
        predict(2, 1, 3, 0, a=1, b=2)  # a + b = e
    with pytest.raises(ValueError):
        predict(0, 1, 3, 0)


def test_decomposability():
    assert decomposability(4, 1, 2) == "decomposable"
    assert decomposability(3, 1, 2) == "indecomposable"
    assert decomposability(3, 1, 0) == "decomposable"
    assert decomposability(1, 2, 3) == "indecomposable"
    assert decomposability(6, 3, 5) == "decomposable"
    assert decomposability(7, 3, 2) == "indecomposable"  # 4 = 0 mod 4
    assert decomposability(3, 7, 2) == "indecomposable"  # same pair swapped
    assert decomposability(6, 2, 2) == "indecomposable"
    assert decomposability(5, 2, 2) == "decomposable"


def test_structure_engine_invariants_small_grid():
    for e in (2, 3):
        for p in (0, 2, 3, 5, 7):
            for total in range(2, 11):
                for j in range(1, total // 2 + 1):
                    k = total - j
                    v = predict(k, j, e, p)
                    if v.structure is None:
                        continue
                    assert v.structure.num_summands() == num_summands(k, j, p)
                    assert Counter(v.structure.labels()) == \
                        Counter(composition_labels(k, j, e, p))
                    assert all(lab.shift == j for lab in v.structure.labels())
                    assert all(is_regular(lab.bipartition, e)
                               for lab in v.structure.labels())
                    if v.structure.num_summands() >= 2:
                        assert v.status == "decomposable"

import re
from itertools import combinations, permutations

import pytest

from flowtope.polynomial import SparsePolynomial
from flowtope.schubert import (
    PermutationError, conjecture_scan, g_i, grothendieck, inversions, is_one_dominant,
    lehmer_code, parse_permutation, permutation_from_code, pipe_dreams, reduced_pipe_dreams,
    schubert, staircase, trace, transition, transition_terms, verify_theorem_C,
)

# as printed for 14523, including its three transition summands
PRINTED_14523 = r"x_1^2  x_2^2 + x_1^2  x_2 x_3 + x_1 x_2^2  x_3 + x_1^2  x_3^2  + x_1 x_2 x_3^2  + x_2^2  x_3^2"
PRINTED_TERMS = [
    r"x_2^2x_3^2",
    r"x_1^2 x_3^2  + x_1 x_2 x_3^2",
    r"x_1^2  x_2^2 + x_1^2  x_2 x_3 + x_1 x_2^2  x_3",
]


def parse_printed(text: str, nvars: int) -> SparsePolynomial:
    terms = {}
    for mono in text.split("+"):
        exp = [0] * nvars
        for i, p in re.findall(r"x_(\d)(?:\^(\d))?", mono):
            exp[int(i) - 1] += int(p or 1)
        terms[tuple(exp)] = terms.get(tuple(exp), 0) + 1
    return SparsePolynomial(nvars, terms)


def test_parse_permutation():
    assert parse_permutation("14523") == (1, 4, 5, 2, 3)
    assert parse_permutation("1,3,2") == (1, 3, 2)
    for bad in ("1224", "023", "abc"):
        with pytest.raises(PermutationError):
            parse_permutation(bad)


def test_trace_examples():
    assert trace(set(), 3) == ((1, 2, 3), True)
    assert trace({(1, 1)}, 2) == ((2, 1), True)
    assert trace({(1, 1), (1, 3)}, 4) == ((2, 1, 4, 3), True)


def test_trace_second_crossing_acts_as_elbow():
    # strands 2 and 3 cross at (1,2) and meet again at (2,1)
    assert trace({(1, 2), (2, 1)}, 3) == ((1, 3, 2), False)
    assert grothendieck((1, 3, 2)).format() == "x1*x2 + x1 + x2"


def test_identity_has_one_dream():
    dreams = list(pipe_dreams("1234"))
    assert len(dreams) == 1 and not dreams[0].crosses


def _brute_dreams(perm):
    size = len(perm)
    cells = staircase(size)
    out = []
    for r in range(len(cells) + 1):
        for crosses in combinations(cells, r):
            got, reduced = trace(set(crosses), size)
            if got == perm:
                out.append((frozenset(crosses), reduced))
    return out


@pytest.mark.parametrize("perm", ["2143", "1432", "3142", "2413"])
def test_enumeration_matches_brute_force(perm):
    p = parse_permutation(perm)
    brute = _brute_dreams(p)
    assert {(d.crosses, d.reduced) for d in pipe_dreams(p)} == set(brute)
    assert {d.crosses for d in reduced_pipe_dreams(p)} == {c for c, r in brute if r}


def test_rpd_2143():
    rpd = [d.crosses for d in reduced_pipe_dreams("2143")]
    assert len(rpd) == 3 and frozenset({(1, 1), (1, 3)}) in rpd


def test_reduced_cross_count_is_length():
    for p in permutations(range(1, 6)):
        inv = inversions(p)
        assert all(len(d.crosses) == inv for d in reduced_pipe_dreams(p))
        assert all(len(d.crosses) >= inv for d in pipe_dreams(p))


def test_s3_schubert():
    want = {
        "123": "1", "213": "x1", "132": "x1 + x2", "231": "x1*x2", "312": "x1^2", "321": "x1^2*x2",
    }
    assert {p: schubert(parse_permutation(p)).format() for p in want} == want


def test_schubert_14523():
    assert schubert(parse_permutation("14523")) == parse_printed(PRINTED_14523, 4)


def test_lowest_component_is_schubert():
    for size in range(1, 6):
        for p in permutations(range(1, size + 1)):
            assert grothendieck(p).lowest_component() == schubert(p)


def test_grothendieck_at_ones_counts_dreams():
    for p in permutations(range(1, 5)):
        assert grothendieck(p).evaluate([1] * 3) == sum(1 for _ in pipe_dreams(p))


def test_lehmer_round_trip():
    for p in permutations(range(1, 6)):
        assert permutation_from_code(lehmer_code(p), 5) == p


def test_is_one_dominant():
    assert is_one_dominant(parse_permutation("14523")) == (2, 2)
    assert is_one_dominant(parse_permutation("12345")) == ()
    assert is_one_dominant(parse_permutation("21")) is None
    assert is_one_dominant(parse_permutation("1324")) == (1,)
    assert is_one_dominant(parse_permutation("1243")) is None
    assert is_one_dominant(parse_permutation("1342")) == (2,)
    # code of 2143 is (1,0,1,0)
    assert is_one_dominant(parse_permutation("13254")) is None
    # code of 4231 is (3,1,1,0); the partition is its conjugate
    assert is_one_dominant(parse_permutation("15342")) == (3, 1, 1)


def test_transition_14523_terms():
    terms = transition_terms(parse_permutation("14523"))
    assert terms == [parse_printed(t, 4) for t in PRINTED_TERMS]
    assert transition("14523") == parse_printed(PRINTED_14523, 4)


def test_transition_empty_partition():
    assert transition("1234") == SparsePolynomial.one(3)


def test_transition_agrees_with_pipe_dreams():
    for size in range(1, 7):
        for p in permutations(range(1, size + 1)):
            if is_one_dominant(p) is not None:
                assert transition(p) == schubert(p), p


def test_transition_rejects():
    with pytest.raises(PermutationError):
        transition("2134")


def test_theorem_C_instances():
    for p in ("14523", "1", "1432"):
        rep = verify_theorem_C(p)
        assert rep.ok and rep.schubert_01 and rep.schubert_saturated, rep.to_json()


def test_size_guard():
    with pytest.raises(PermutationError):
        list(pipe_dreams("123456789"))


def test_g_i_stub():
    with pytest.raises(NotImplementedError, match="requires external construction"):
        g_i((1, 4, 5, 2, 3))


def test_conjecture_scan_small_deterministic():
    a = conjecture_scan(4, jobs=1)
    b = conjecture_scan(4, jobs=2)
    assert a.to_json() == b.to_json()
    assert a.summary() == "0 counterexamples / 24 permutations"

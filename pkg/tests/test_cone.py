import random

import pytest

from hivealg.cone import (ConePresentation, NoDecompositionError,
                          all_decompositions, cone_inequalities, decompose,
                          generators_input_text, hilbert_basis,
                          hives_up_to_degree, inequalities_input_text,
                          presentation, undecomposable_hives,
                          verify_relations)
from hivealg.hive import Hive, hive_violations

RANK4_INEQUALITY_ROWS = [
    "-1 1 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 -1 0 1 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 -1 0 0 1 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 0 -1 0 0 0 1 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 -1 1 0 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 -1 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 -1 1 0",
    "0 0 0 0 0 0 0 0 0 0 0 0 0 -1 1",
    "-1 0 1 0 0 0 0 0 0 0 0 0 0 0 0",
    "0 0 -1 0 0 1 0 0 0 0 0 0 0 0 0",
    "0 0 0 0 0 -1 0 0 0 1 0 0 0 0 0",
    "0 0 0 0 0 0 0 0 0 -1 0 0 0 0 1",
    "-1 1 1 0 -1 0 0 0 0 0 0 0 0 0 0",
    "0 -1 0 1 1 0 0 -1 0 0 0 0 0 0 0",
    "0 0 -1 0 1 1 0 0 -1 0 0 0 0 0 0",
    "0 0 0 -1 0 0 1 1 0 0 0 -1 0 0 0",
    "0 0 0 0 -1 0 0 1 1 0 0 0 -1 0 0",
    "0 0 0 0 0 -1 0 0 1 1 0 0 0 -1 0",
    "0 -1 1 0 1 -1 0 0 0 0 0 0 0 0 0",
    "0 0 0 -1 1 0 0 1 -1 0 0 0 0 0 0",
    "0 0 0 0 -1 1 0 0 1 -1 0 0 0 0 0",
    "0 0 0 0 0 0 -1 1 0 0 0 1 -1 0 0",
    "0 0 0 0 0 0 0 -1 1 0 0 0 1 -1 0",
    "0 0 0 0 0 0 0 0 -1 1 0 0 0 1 -1",
    "0 1 -1 -1 1 0 0 0 0 0 0 0 0 0 0",
    "0 0 0 1 -1 0 -1 1 0 0 0 0 0 0 0",
    "0 0 0 0 1 -1 0 -1 1 0 0 0 0 0 0",
    "0 0 0 0 0 0 1 -1 0 0 -1 1 0 0 0",
    "0 0 0 0 0 0 0 1 -1 0 0 -1 1 0 0",
    "0 0 0 0 0 0 0 0 1 -1 0 0 -1 1 0",
]
RANK4_EQUATION_ROW = "1 0 0 0 0 0 0 0 0 0 0 0 0 0 0"


def test_rank4_inequality_rows_are_pinned_exactly():
    system = cone_inequalities(4)
    got = [" ".join(str(c) for c in row) for row in system.rows]
    assert got == RANK4_INEQUALITY_ROWS
    assert [" ".join(str(c) for c in r) for r in system.equations] == [RANK4_EQUATION_ROW]


def test_rank2_system_shape_and_zero_membership():
    system = cone_inequalities(2)
    assert len(system.rows) == 6 + 3
    assert system.is_member((0,) * 6)


@pytest.mark.parametrize("n", [2, 3])
def test_membership_agrees_with_validation_on_random_arrays(n):
    system = cone_inequalities(n)
    rng = random.Random(411)
    dim = (n + 1) * (n + 2) // 2
    pool = hives_up_to_degree(n, 4)
    members = 0
    for trial in range(1000):
        if trial % 2:
            # perturb a genuine hive so both sides of the fence get sampled
            flat = list(rng.choice(pool).to_flat())
            for _ in range(rng.randint(0, 2)):
                flat[rng.randrange(dim)] += rng.choice((-1, 1))
        else:
            flat = [rng.randint(-2, 4) for _ in range(dim)]
        rows = []
        k = 0
        for i in range(1, n + 2):
            rows.append(flat[k:k + i])
            k += i
        valid = flat[0] == 0 and not hive_violations(rows)
        assert system.is_member(flat) == valid
        members += valid
    assert 0 < members < 1000  # sample straddles the boundary


def test_hive_counts_up_to_degree():
    assert len(hives_up_to_degree(2, 3)) == 1 + 2 + 6 + 10
    assert len(hives_up_to_degree(3, 4)) == 1 + 2 + 6 + 14 + 29
    assert hives_up_to_degree(3, 0) == (Hive.zero(3),)


def test_hives_up_to_degree_sorted_and_unique():
    hives = hives_up_to_degree(3, 3)
    keys = [(h.degree, h.to_flat()) for h in hives]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


@pytest.mark.parametrize("n,degree_bound,expected_size", [(2, 8, 5), (3, 8, 10)])
def test_hilbert_basis_small_ranks(n, degree_bound, expected_size):
    basis = hilbert_basis(n, degree_bound)
    assert len(basis) == expected_size
    assert ({h.to_flat() for h in basis}
            == {h.to_flat() for h in presentation(n).basis})


def test_hilbert_basis_rank2_flat_coordinates():
    assert sorted(h.to_flat() for h in hilbert_basis(2, 8)) == [
        (0, 0, 1, 0, 1, 1),
        (0, 0, 1, 0, 1, 2),
        (0, 1, 1, 1, 1, 1),
        (0, 1, 1, 1, 2, 2),
        (0, 1, 1, 2, 2, 2),
    ]


def test_hilbert_basis_stable_under_degree_bound():
    twelve = {h.to_flat() for h in hilbert_basis(4, 12)}
    thirteen = {h.to_flat() for h in hilbert_basis(4, 13)}
    assert twelve == thirteen
    assert len(twelve) == 20


def test_presentation_degrees():
    assert presentation(2).degrees == (2, 2, 1, 2, 1)
    assert presentation(3).degrees == (1, 3, 2, 1, 2, 3, 2, 3, 3, 4)
    assert presentation(4).degrees == (1, 2, 3, 4, 1, 2, 3, 4, 2, 3,
                                       4, 3, 4, 4, 4, 5, 6, 5, 6, 6)
    with pytest.raises(ValueError):
        presentation(5)


def test_verify_relations_counts():
    assert verify_relations(presentation(2)) == []
    assert [r.ok for r in verify_relations(presentation(3))] == [True]
    results = verify_relations(presentation(4))
    assert len(results) == 15 and all(r.ok for r in results)


def test_decompose_worked_example():
    pres = presentation(3)
    h = Hive.from_rows([[0], [2, 3], [3, 4, 5], [3, 5, 6, 6]])
    h_prime = Hive.from_rows([[0], [2, 3], [3, 5, 5], [3, 5, 6, 6]])
    assert decompose(h, pres) == (3, 4, 8)
    assert decompose(Hive.zero(3), pres) == ()
    found = decompose(h_prime, pres)
    assert sum((pres.basis[k - 1] for k in found), Hive.zero(3)) == h_prime
    assert (1, 6, 7) in all_decompositions(h_prime, pres)


def test_all_decompositions_sees_both_relation_sides():
    pres = presentation(3)
    h = pres.basis[0] + pres.basis[5] + pres.basis[6]
    assert all_decompositions(h, pres) == {(1, 6, 7), (5, 10)}


def test_all_decompositions_of_basis_elements_are_trivial():
    pres = presentation(3)
    for k, h in enumerate(pres.basis, start=1):
        assert all_decompositions(h, pres) == {(k,)}


def test_rank4_relation_side_decomposes_both_ways():
    pres = presentation(4)
    h = pres.basis[0] + pres.basis[6] + pres.basis[8]  # h_1 + h_7 + h_9
    assert (6, 15) in all_decompositions(h, pres)


def test_decompositions_multiply_out():
    pres = presentation(4)
    for h in hives_up_to_degree(4, 4):
        indices = decompose(h, pres)
        assert sum((pres.basis[k - 1] for k in indices), Hive.zero(4)) == h


@pytest.mark.parametrize("n", [2, 3, 4])
def test_basis_is_minimal(n):
    pres = presentation(n)
    for drop in range(len(pres.basis)):
        rest = ConePresentation(
            n,
            pres.basis[:drop] + pres.basis[drop + 1:],
            pres.degrees[:drop] + pres.degrees[drop + 1:],
            (),
        )
        with pytest.raises(NoDecompositionError):
            decompose(pres.basis[drop], rest)


@pytest.mark.parametrize("n", [2, 3])
def test_everything_decomposes_at_small_rank(n):
    assert undecomposable_hives(n, 12, presentation(n)) == []


def test_inequalities_export_text_layout():
    text = inequalities_input_text(4)
    lines = text.splitlines()
    assert lines[0] == "30"
    assert lines[1] == "15"
    assert lines[2:32] == RANK4_INEQUALITY_ROWS
    assert lines[32] == "inequalities"
    assert lines[33] == ""
    assert lines[34:38] == ["1", "15", RANK4_EQUATION_ROW, "equations"]


def test_generators_export_lists_basis_in_coordinate_order():
    text = generators_input_text(4)
    lines = text.splitlines()
    assert lines[0] == "amb_space 15"
    assert lines[1] == "cone 20"
    vectors = [tuple(int(v) for v in line.split()) for line in lines[2:22]]
    assert vectors == sorted(vectors)
    assert {tuple(v) for v in vectors} == {h.to_flat() for h in presentation(4).basis}
    assert all(line.startswith(" ") for line in lines[2:22])
    assert lines[22] == ""
    assert lines[23] == "grading"
    assert lines[24] == " " + " ".join(["0"] * 14 + ["1"])


def test_presentation_json_round_trip_fields():
    obj = presentation(3).to_json_dict()
    assert obj["n"] == 3
    assert len(obj["basis"]) == 10
    assert obj["relations"] == [{"name": "r1", "left": [1, 6, 7], "right": [5, 10]}]

import pytest

from nilchain import (
    RootSystemSpec,
    build_root_system,
    cartan_matrix,
    classical_positive_root_count,
)

from conftest import system
from oracles import positive_roots_by_realization

RANK_LE_4 = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 2),
    ("B", 3),
    ("B", 4),
    ("C", 3),
    ("C", 4),
    ("D", 4),
    ("F", 4),
    ("G", 2),
]


def coeff_set(rs):
    return {r.coeffs for r in rs.positive_roots}


def test_a2_positive_roots():
    assert coeff_set(system("A", 2)) == {(1, 0), (0, 1), (1, 1)}


def test_b2_positive_roots():
    # Frozen from the Euclidean-realization oracle: short simple root last.
    assert coeff_set(system("B", 2)) == {(1, 0), (0, 1), (1, 1), (1, 2)}


def test_g2_positive_roots():
    # Frozen from the oracle: alpha_1 short, highest root (3, 2).
    rs = system("G", 2)
    assert coeff_set(rs) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert rs.positive_roots[-1].coeffs == (3, 2)


@pytest.mark.parametrize("family,rank", RANK_LE_4)
def test_oracle_equivalence(family, rank):
    assert coeff_set(system(family, rank)) == positive_roots_by_realization(family, rank)


@pytest.mark.parametrize(
    "family,rank",
    [("A", 5), ("B", 5), ("C", 5), ("D", 5), ("E", 6), ("F", 4), ("G", 2)],
)
def test_classical_counts(family, rank):
    rs = system(family, rank)
    assert rs.num_positive_roots == classical_positive_root_count(family, rank)


def test_canonical_order_is_by_height_then_lex():
    rs = system("B", 3)
    keys = [(r.height, r.coeffs) for r in rs.positive_roots]
    assert keys == sorted(keys)


def test_rebuild_is_identical():
    a = build_root_system(RootSystemSpec("D", 4))
    b = build_root_system(RootSystemSpec("D", 4))
    assert [r.coeffs for r in a.positive_roots] == [r.coeffs for r in b.positive_roots]
    assert a.addition_table == b.addition_table


def test_addition_examples_a2():
    rs = system("A", 2)
    a1, a2 = rs.index_of((1, 0)), rs.index_of((0, 1))
    theta = rs.index_of((1, 1))
    assert rs.add_roots(a1, a2) == theta
    assert rs.add_roots(theta, a1) is None


def test_addition_example_g2():
    rs = system("G", 2)
    assert rs.add_roots(rs.index_of((1, 0)), rs.index_of((1, 1))) == rs.index_of((2, 1))


def test_addition_table_symmetric():
    for family, rank in [("A", 3), ("B", 3), ("G", 2)]:
        rs = system(family, rank)
        for (a, b), s in rs.addition_table.items():
            assert rs.addition_table[(b, a)] == s


def test_subtract_simple_examples():
    a2 = system("A", 2)
    assert a2.subtract_simple(a2.index_of((1, 1)), 1) == a2.index_of((0, 1))
    assert a2.subtract_simple(a2.index_of((0, 1)), 1) is None
    b2 = system("B", 2)
    assert b2.subtract_simple(b2.index_of((1, 2)), 2) == b2.index_of((1, 1))


def test_simple_steps_raise_height_by_one():
    for family, rank in [("A", 4), ("C", 3), ("F", 4)]:
        rs = system(family, rank)
        for (b, _i), s in rs.simple_step_table.items():
            assert rs.positive_roots[s].height == rs.positive_roots[b].height + 1


def test_root_poset_graded_connectivity():
    # Every non-simple positive root steps down to another positive root.
    for family, rank in RANK_LE_4:
        rs = system(family, rank)
        for b, root in enumerate(rs.positive_roots):
            if root.height == 1:
                continue
            assert any(
                rs.subtract_simple(b, i) is not None for i in range(1, rank + 1)
            ), f"{family}{rank}: root {root} has no simple step down"


@pytest.mark.parametrize(
    "family,rank",
    [("Z", 9), ("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 4)],
)
def test_invalid_specs_rejected(family, rank):
    with pytest.raises(ValueError):
        RootSystemSpec(family, rank)


def test_error_messages_name_the_offender():
    with pytest.raises(ValueError, match="Z"):
        RootSystemSpec("Z", 2)
    with pytest.raises(ValueError, match="rank"):
        RootSystemSpec("D", 2)


def test_size_gate():
    with pytest.raises(ValueError, match="allow_large"):
        build_root_system(RootSystemSpec("E", 7))
    with pytest.raises(ValueError, match="allow_large"):
        build_root_system(RootSystemSpec("A", 11))
    rs = build_root_system(RootSystemSpec("E", 7), allow_large=True)
    assert rs.num_positive_roots == 63


def test_e8_builds_when_allowed():
    rs = build_root_system(RootSystemSpec("E", 8), allow_large=True)
    assert rs.num_positive_roots == 120
    assert rs.positive_roots[-1].height == 29


def test_index_errors():
    rs = system("A", 2)
    with pytest.raises(IndexError):
        rs.add_roots(0, 99)
    with pytest.raises(IndexError):
        rs.subtract_simple(0, 3)
    with pytest.raises(IndexError):
        rs.simple_root_index(0)


def test_cartan_conventions():
    b3 = cartan_matrix(RootSystemSpec("B", 3))
    assert b3[2][1] == -2 and b3[1][2] == -1
    c3 = cartan_matrix(RootSystemSpec("C", 3))
    assert c3[1][2] == -2 and c3[2][1] == -1
    g2 = cartan_matrix(RootSystemSpec("G", 2))
    assert g2[0][1] == -3 and g2[1][0] == -1

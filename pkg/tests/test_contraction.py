import random

import pytest

from linequiv import (BinaryRelation, StabilizationShapeError, classify_stable,
                      converse, gamma_table, iterated_contraction, left_partition,
                      quotient, right_partition, stabilize)
from linequiv.contraction import (Partition, StableShape, class_label,
                                  compose_partitions, contraction_sequence)
from linequiv.relation import GraphError

from conftest import class_sets, relation, seeded_relation, sets

# frozen intermediate data for g4; every partition below is also forced by
# the gamma table and the final record, both of which the oracle confirms
G4_LEFT = sets([0], [1, 11], [2], [3, 5, 8, 12, 15], [4], [6, 14], [7],
               [9], [10], [13], [16], [17])
G4_RIGHT = sets([0], [1], [2, 4, 7, 11, 14], [3], [5, 13], [6], [8],
                [9, 17], [10], [12], [15], [16])
G4_ALL = frozenset(str(i) for i in range(18))


def minus(*gone):
    return G4_ALL - {str(x) for x in gone}


def test_left_partition_small(g3):
    assert class_sets(left_partition(relation(g3))) == sets([1], [2, 3], [4])


def test_left_partition_braided(g4):
    assert class_sets(left_partition(relation(g4))) == G4_LEFT


def test_left_partition_edgeless():
    r = BinaryRelation(("a", "b", "c"), frozenset())
    assert class_sets(left_partition(r)) == sets(["a"], ["b"], ["c"])


def test_right_partition_small(g3):
    assert class_sets(right_partition(relation(g3))) == sets([1, 4], [2], [3])


def test_right_partition_braided(g4):
    assert class_sets(right_partition(relation(g4))) == G4_RIGHT


def test_right_is_left_of_converse():
    for i in range(50):
        r = seeded_relation(f"right-converse:{i}")
        assert (class_sets(right_partition(r))
                == class_sets(left_partition(converse(r))))


def test_quotient_small(g3):
    r = relation(g3)
    q = quotient(r, left_partition(r))
    assert q.vertex_count == 3
    assert q.pairs == frozenset({("1", "{2,3}"), ("{2,3}", "4"), ("4", "{2,3}")})


def test_quotient_by_singletons_is_identity(g4):
    r = relation(g4)
    assert quotient(r, Partition.singletons(r.vertices)) == r


def test_quotient_braided(g4):
    # the 12-class left quotient, with its 17 induced edges
    r = relation(g4)
    part = left_partition(r)
    q = quotient(r, part)
    assert q.vertex_count == 12
    big = "{3,5,8,12,15}"
    pair = "{1,11}"
    expected = {
        ("0", pair), (pair, "2"), (pair, big), ("2", big),
        (big, "4"), (big, "{6,14}"), (big, "9"), (big, "13"), (big, "16"),
        ("4", big), ("{6,14}", "7"), ("{6,14}", big), ("7", big),
        ("9", "10"), ("13", "{6,14}"), ("16", "17"), ("17", "10"),
    }
    assert q.pairs == frozenset(expected)


def test_quotient_wrong_vertex_set(g3, g4):
    with pytest.raises(GraphError):
        quotient(relation(g4), left_partition(relation(g3)))


def test_quotient_functoriality():
    # contracting a quotient equals contracting once by the composed partition
    for i in range(30):
        r = seeded_relation(f"functorial:{i}")
        p = left_partition(r)
        q1 = quotient(r, p)
        p2 = right_partition(q1)
        twice = quotient(q1, p2)
        composed_part = compose_partitions(r, p, p2)
        once = quotient(r, composed_part)
        # resolve both vertex namings down to sets of original vertices
        by_label = {class_label(cls): frozenset(cls) for cls in p.classes}
        twice_sets = {class_label(cls): frozenset().union(*(by_label[l] for l in cls))
                      for cls in p2.classes}
        once_sets = {class_label(cls): frozenset(cls) for cls in composed_part.classes}
        assert set(twice_sets.values()) == set(once_sets.values())
        assert ({(twice_sets[s], twice_sets[t]) for s, t in twice.pairs}
                == {(once_sets[s], once_sets[t]) for s, t in once.pairs})


def test_iterated_contraction_identity(g3):
    r = relation(g3)
    rel, part = iterated_contraction(r, 0, 0)
    assert rel == r
    assert part == Partition.singletons(r.vertices)


def test_iterated_contraction_braided_1_1(g4):
    _, part = iterated_contraction(relation(g4), 1, 1)
    assert class_sets(part) == sets(
        [0], [1, 2, 4, 6, 7, 11, 14], [3, 5, 8, 12, 13, 15], [9, 17], [10], [16])


def test_iterated_contraction_braided_3_1(g4):
    _, part = iterated_contraction(relation(g4), 3, 1)
    assert class_sets(part) == {minus(0), frozenset({"0"})}


def test_strengthened_commutation():
    # every interleaving of m lefts and n rights yields literally the same
    # partition of the original vertex set
    rng = random.Random("interleavings")
    for i in range(100):
        r = seeded_relation(f"commute:{i}")
        m, n = rng.randint(0, 3), rng.randint(0, 3)
        word = list("l" * m + "r" * n)
        rng.shuffle(word)
        _, base = iterated_contraction(r, m, n)
        _, other = contraction_sequence(r, "".join(word))
        assert base == other, (sorted(r.pairs), m, n, word)


def test_monotone_coarsening():
    for i in range(100):
        r = seeded_relation(f"coarsen:{i}")
        for m, n in ((0, 0), (1, 0), (0, 1), (1, 1), (2, 1)):
            _, here = iterated_contraction(r, m, n)
            _, more_left = iterated_contraction(r, m + 1, n)
            _, more_right = iterated_contraction(r, m, n + 1)
            assert here.refines(more_left)
            assert here.refines(more_right)


def test_converse_duality_of_partitions():
    for i in range(50):
        r = seeded_relation(f"conv-dual:{i}")
        for m, n in ((1, 0), (1, 1), (2, 1), (0, 2)):
            _, a = iterated_contraction(converse(r), m, n)
            _, b = iterated_contraction(r, n, m)
            assert class_sets(a) == class_sets(b)


def test_gamma_table_small(g3):
    d = gamma_table(relation(g3))
    assert d.value(0, 0) == 4
    assert [d.value(*p) for p in ((1, 0), (0, 1), (2, 0), (0, 2))] == [3, 3, 3, 3]
    for point in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 5), (9, 9)):
        assert d.value(*point) == 2
    assert d.stable_value == 2
    assert d.horizon == 1


def test_gamma_table_braided(g4):
    d = gamma_table(relation(g4))
    expected = {
        (0, 0): 18, (1, 0): 12, (0, 1): 12,
        (2, 0): 6, (1, 1): 6, (0, 2): 6,
        (2, 1): 3, (1, 2): 3, (1, 3): 3,
        (3, 1): 2, (2, 2): 2, (2, 3): 2, (2, 4): 2,
    }
    assert d.nonstable_points() == expected
    assert d.stable_value == 1
    assert d.horizon == 3
    for point in ((3, 2), (3, 3), (4, 2), (4, 6), (12, 10)):
        assert d.value(*point) == 1


def test_gamma_table_edgeless():
    d = gamma_table(BinaryRelation(tuple("abcd"), frozenset()))
    assert d.stable_value == 4
    assert d.horizon == 0
    assert d.value(0, 0) == d.value(5, 3) == 4


def test_gamma_monotonicity_and_corner():
    for i in range(100):
        r = seeded_relation(f"gamma-mono:{i}")
        d = gamma_table(r)
        assert d.value(0, 0) == r.vertex_count
        for (m, n) in list(d.gamma):
            if d.is_suitable(m + 1, n):
                assert d.value(m, n) >= d.value(m + 1, n)
            if d.is_suitable(m, n + 1):
                assert d.value(m, n) >= d.value(m, n + 1)


def test_gamma_rejects_unsuitable(g3):
    with pytest.raises(ValueError):
        gamma_table(relation(g3)).value(0, 3)


def test_gamma_converse_transposes():
    for i in range(50):
        r = seeded_relation(f"gamma-conv:{i}")
        d = gamma_table(r)
        dc = gamma_table(converse(r))
        for (m, n) in list(d.gamma):
            assert dc.value(n, m) == d.value(m, n)


def test_stabilize_braided_reaches_one_loop(g4):
    shape, stable, depth = stabilize(relation(g4))
    assert shape == StableShape((1,), ())
    assert stable.edge_count == 1 and stable.vertex_count == 1
    assert depth <= 18


def test_stabilize_small_reaches_two_cycle(g3):
    shape, stable, _ = stabilize(relation(g3))
    assert shape == StableShape((2,), ())
    assert class_sets(Partition(stable.vertices, tuple((v,) for v in stable.vertices))) \
        == sets(["{1,4}"], ["{2,3}"])
    assert stable.pairs == frozenset({("{1,4}", "{2,3}"), ("{2,3}", "{1,4}")})


def test_stabilize_path_is_already_stable():
    shape, stable, depth = stabilize(BinaryRelation(("a", "b"), frozenset({("a", "b")})))
    assert shape == StableShape((), (2,))
    assert depth == 0


def test_stabilize_depth_bound():
    for i in range(100):
        r = seeded_relation(f"depth:{i}")
        _, _, depth = stabilize(r)
        assert depth <= r.vertex_count


def test_stabilize_shape_never_fails_on_graphs():
    for i in range(150):
        shape, _, _ = stabilize(seeded_relation(f"shape:{i}"))
        assert shape.total_vertices >= 0


def test_classify_isolated_vertex_is_a_one_path():
    shape = classify_stable(BinaryRelation(("a",), frozenset()))
    assert shape == StableShape((), (1,))


def test_classify_rejects_branching():
    r = BinaryRelation(("a", "b", "c"), frozenset({("a", "b"), ("a", "c")}))
    with pytest.raises(StabilizationShapeError):
        classify_stable(r)
    with pytest.raises(StabilizationShapeError):
        classify_stable(BinaryRelation(("a", "b"), frozenset({("a", "b"), ("b", "a"), ("a", "a")})))


def test_stable_value_matches_shape():
    for i in range(60):
        r = seeded_relation(f"stable-count:{i}")
        shape, stable, _ = stabilize(r)
        d = gamma_table(r)
        assert shape.total_vertices == stable.vertex_count == d.stable_value

"""Cell triples, inflation maps, dimension combinatorics, branching diagram,
semisimplicity certificates."""

import random
from fractions import Fraction
from math import comb, factorial

import pytest

from braidrook.cellular import (
    BratteliDiagram,
    CellLabel,
    CellTriple,
    bratteli,
    cell_dim,
    cell_labels,
    diagram_of,
    dim_recursion,
    dims_table,
    hook_lengths,
    k_subsets,
    partition_minus_boxes,
    partition_plus_boxes,
    partitions_of,
    phi,
    psi,
    rook_dimension,
    semisimplicity_certificate,
    standard_tableaux_count,
    star,
    star_diagram,
    theta,
    triple_of,
    uk_action,
)
from braidrook.diagrams import (
    DiagramElement,
    PartialPermutation,
    compose_perms,
    identity_perm,
    invert_perm,
    projection,
    rook_elements,
    transposition,
)

# -- partitions -----------------------------------------------------------------


def test_partitions_descending_lex():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(6)) == 11


def test_partition_box_moves():
    assert partition_minus_boxes((2, 1)) == [(1, 1), (2,)]
    assert partition_plus_boxes((2, 1)) == [(3, 1), (2, 2), (2, 1, 1)]
    assert partition_plus_boxes(()) == [(1,)]
    assert partition_minus_boxes((1,)) == [()]


def test_hooks_and_tableaux_counts():
    assert hook_lengths((2, 1)) == [[3, 1], [1]]
    assert standard_tableaux_count((2, 1)) == 2
    assert standard_tableaux_count((2, 2)) == 2
    assert standard_tableaux_count(()) == 1
    for k in range(7):
        assert standard_tableaux_count((k,) if k else ()) == 1
    # sum of squares over partitions of k is k!
    for k in range(1, 8):
        assert sum(standard_tableaux_count(p) ** 2 for p in partitions_of(k)) == factorial(k)
    with pytest.raises(ValueError):
        standard_tableaux_count((1, 2))


def test_cell_labels_and_length_filter():
    labels = cell_labels(3)
    assert [l.parts for l in labels] == [
        (),
        (1,),
        (2,),
        (1, 1),
        (3,),
        (2, 1),
        (1, 1, 1),
    ]
    assert CellLabel(2, (1, 1)).fits_length(3)
    assert not CellLabel(2, (1, 1)).fits_length(2)
    with pytest.raises(ValueError):
        CellLabel(3, (2, 2))


# -- triples --------------------------------------------------------------------


def test_triple_worked_example():
    d = PartialPermutation(8, [(1, 2), (2, 3), (4, 5), (5, 4), (8, 7), (7, 6)])
    t = triple_of(d)
    assert t.dom == (1, 2, 4, 5, 7, 8)
    assert t.pi == (1, 2, 4, 3, 5, 6)
    assert t.im == (2, 3, 4, 5, 6, 7)
    assert diagram_of(t, 8) == d


def test_triple_identity():
    d = PartialPermutation.identity(4)
    t = triple_of(d)
    assert t == CellTriple((1, 2, 3, 4), (1, 2, 3, 4), (1, 2, 3, 4))


def test_triple_roundtrip_all_r3():
    for d in rook_elements(3):
        assert diagram_of(triple_of(d), 3) == d


def test_triple_validation():
    with pytest.raises(ValueError):
        CellTriple((2, 1), (1, 2), (1, 2))  # dom unsorted
    with pytest.raises(ValueError):
        CellTriple((1, 2), (1, 1), (1, 2))  # pi not a permutation
    with pytest.raises(ValueError):
        CellTriple((1, 2), (1, 2), (1,))  # size mismatch


def test_star_is_triple_flip_with_inverted_pi():
    for d in rook_elements(3):
        t, ts = triple_of(d), triple_of(star(d))
        assert ts.dom == t.im and ts.im == t.dom
        assert ts.pi == invert_perm(t.pi)
        assert star(star(d)) == d


def test_star_diagram_antihomomorphism():
    rng = random.Random(2)
    elems = rook_elements(3)
    for _ in range(60):
        a, b = rng.choice(elems), rng.choice(elems)
        prod, n1 = a.compose(b)
        flipped, n2 = star(b).compose(star(a))
        assert flipped == star(prod) and n1 == n2
        assert star_diagram(a.to_diagram()) == star(a).to_diagram()


# -- inflation maps ---------------------------------------------------------------


def test_phi_examples():
    r, z = 2, Fraction(5)
    ident = PartialPermutation.identity(r)
    assert phi(ident, {2}, z, r) == (Fraction(1), frozenset({2}))
    p1 = projection(1, r)
    assert phi(p1, {2}, z, r) == (z, frozenset({2}))
    assert phi(p1, {1}, z, r) is None


def test_theta_examples():
    r = 4
    ident = PartialPermutation.identity(r)
    assert theta(ident, {1, 3}) == (1, 2)
    w = PartialPermutation.from_permutation((2, 3, 1, 4))
    # preimage of u={1,3}: 3->1, 2->3; sorted dom (2,3), sorted im (1,3):
    # 2 -> 3 = y_2, 3 -> 1 = y_1
    assert theta(w, {1, 3}) == (2, 1)
    assert theta(projection(1, r), {1, 2}) is None


def test_psi_rules():
    assert psi({1}, {1}, Fraction(7), 3) == 49
    assert psi({1, 2}, {1, 2}, Fraction(7), 3) == 7
    assert psi({1, 2}, {1, 3}, Fraction(7), 3) == 0
    assert psi({1}, {1}, Fraction(9), 1) == 1
    with pytest.raises(ValueError):
        psi({1}, {1, 2}, 7, 3)


def test_uk_action_generator_rules():
    r, z = 2, Fraction(3)
    assert uk_action(projection(1, r), {2}, z) == (z, frozenset({2}))
    assert uk_action(projection(2, r), {2}, z) is None
    w = transposition(1, 2, r)
    assert uk_action(w, {2}, z) == (Fraction(1), frozenset({1}))
    assert uk_action(PartialPermutation.identity(r), {1}, z) == (
        Fraction(1),
        frozenset({1}),
    )


def test_uk_action_multiplicative():
    # acting by g then by f agrees with acting by the algebra product f*g
    rng = random.Random(17)
    r, z = 4, Fraction(5, 2)
    elems = rook_elements(r)
    subsets = k_subsets(r, 2)
    for _ in range(200):
        f, g = rng.choice(elems), rng.choice(elems)
        u = frozenset(rng.choice(subsets))
        inner = uk_action(g, u, z)
        if inner is None:
            stepwise = None
        else:
            c, u2 = inner
            outer = uk_action(f, u2, z)
            stepwise = None if outer is None else (c * outer[0], outer[1])
        prod, dropped = f.compose(g)
        combined = uk_action(prod, u, z)
        if combined is not None:
            combined = (combined[0] * z**dropped, combined[1])
        assert stepwise == combined


def test_inflation_multiplication_rule_exhaustive_top_cell():
    # at k = r the triple diagrams are the full permutations; multiply any
    # basis element against them and compare with the phi/theta prediction
    r, z = 3, Fraction(7, 3)
    perms = [d for d in rook_elements(r) if d.rank == r]
    u = frozenset(range(1, r + 1))
    for a in rook_elements(r):
        for b in perms:
            prod, dropped = a.compose(b)
            lhs = DiagramElement.from_diagram(prod, z).scale(z**dropped)
            pred = phi(a, u, z, r)
            if pred is None:
                assert prod.rank < r
                continue
            coeff, u_new = pred
            tb = triple_of(b)
            expected = diagram_of(
                CellTriple(
                    tuple(sorted(u_new)), compose_perms(theta(a, u), tb.pi), tb.im
                ),
                r,
            )
            assert lhs == DiagramElement.from_diagram(expected, z).scale(coeff)


def test_inflation_multiplication_rule_sampled_lower_cells():
    # rank-k component of a * (u, b, v) is coeff * (phi-subset, theta∘b, v);
    # every other component has strictly smaller rank
    rng = random.Random(23)
    r, z = 4, Fraction(3)
    elems = rook_elements(r)
    for _ in range(300):
        a = rng.choice(elems)
        k = rng.randint(0, r)
        u = tuple(sorted(rng.sample(range(1, r + 1), k)))
        v = tuple(sorted(rng.sample(range(1, r + 1), k)))
        b = tuple(rng.sample(range(1, k + 1), k))
        d = diagram_of(CellTriple(u, b, v), r)
        prod, dropped = a.compose(d)
        pred = phi(a, set(u), z, r)
        if pred is None:
            assert prod.rank < k
            continue
        coeff, u_new = pred
        expected = diagram_of(
            CellTriple(tuple(sorted(u_new)), compose_perms(theta(a, set(u)), b), v), r
        )
        assert prod == expected
        assert z**dropped == coeff


# -- dimensions -------------------------------------------------------------------


def test_dim_recursion_small_tables():
    assert {l.parts: c for l, c in dim_recursion(0).items()} == {(): 1}
    row3 = dim_recursion(3)
    assert [c for c in row3.values()] == [1, 3, 3, 3, 1, 2, 1]
    assert sum(c * c for c in row3.values()) == 34
    row4 = {l.parts: c for l, c in dim_recursion(4).items()}
    assert row4[(2, 1)] == 8
    assert row4[(2, 2)] == 2


def test_cell_dim_closed_form():
    assert cell_dim(4, (2, 1)) == comb(4, 3) * 2 == 8
    assert cell_dim(4, (2, 2)) == 2
    with pytest.raises(ValueError):
        cell_dim(2, (2, 1))


def test_three_way_dimension_agreement():
    # recursion = binomial * hook-length = branching path count, r <= 6
    for r in range(7):
        rec = dim_recursion(r)
        leaves = bratteli(r).leaf_counts()
        assert len(rec) == len(leaves)
        for label, c in rec.items():
            assert c == cell_dim(r, label.parts)
            assert c == leaves[label.parts]
        assert sum(c * c for c in rec.values()) == rook_dimension(r)


def test_rook_dimension_sequence():
    assert [rook_dimension(r) for r in range(7)] == [1, 2, 7, 34, 209, 1546, 13327]


def test_dims_table_shape():
    rows = dims_table(2)
    assert rows == [
        {"k": 0, "lambda": [], "c": 1, "binomial_times_hooks": 1, "square": 1},
        {"k": 1, "lambda": [1], "c": 2, "binomial_times_hooks": 2, "square": 4},
        {"k": 2, "lambda": [2], "c": 1, "binomial_times_hooks": 1, "square": 1},
        {"k": 2, "lambda": [1, 1], "c": 1, "binomial_times_hooks": 1, "square": 1},
    ]


# -- branching diagram ---------------------------------------------------------------


def test_bratteli_rows_follow_copy_then_append():
    b = bratteli(3)
    assert b.rows[0] == [()]
    assert b.rows[1] == [(), (1,)]
    assert b.rows[2] == [(), (1,), (2,), (1, 1)]
    assert b.rows[3] == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


def test_bratteli_edge_rule():
    b = bratteli(2)
    # row1 -> row2: () keeps or adds to (1); (1) keeps or adds to (2),(1,1)
    assert set(b.edges[1]) == {(0, 0), (0, 1), (1, 1), (1, 2), (1, 3)}


def test_bratteli_path_counts():
    assert bratteli(0).leaf_counts() == {(): 1}
    assert bratteli(2).leaf_counts() == {(): 1, (1,): 2, (2,): 1, (1, 1): 1}
    leaves4 = bratteli(4).leaf_counts()
    assert len(leaves4) == 12
    assert leaves4[(2, 1)] == 8


def test_bratteli_dot_output():
    dot = bratteli(1).to_dot()
    assert dot.startswith("digraph bratteli {")
    assert '"L0_0" -> "L1_1"' in dot
    assert 'label="1"' in dot and 'label="()"' in dot
    assert dot.endswith("}")


# -- k-subsets ------------------------------------------------------------------------


def test_k_subsets_lexicographic():
    assert k_subsets(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert k_subsets(3, 0) == [()]
    assert len(k_subsets(5, 2)) == 10


# -- semisimplicity ---------------------------------------------------------------------


def test_semisimplicity_r2():
    report = semisimplicity_certificate(2, Fraction(7))
    assert report["gram_size"] == 7
    assert report["semisimple"]
    assert report["agree"]


def test_semisimplicity_r3_z1():
    report = semisimplicity_certificate(3, 1)
    assert report["gram_size"] == 34
    assert report["gram_nondegenerate"]
    assert report["cells_nondegenerate"]
    assert report["semisimple"]


def test_semisimplicity_rejects_zero():
    with pytest.raises(ValueError):
        semisimplicity_certificate(2, 0)

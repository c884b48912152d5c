"""Root system and Weyl group tests, checked against independent brute-force oracles."""

import itertools

import pytest

from mbsheaf.coxeter import (
    SUPPORTED, UnsupportedTypeError, build_coxeter, bruhat_leq,
    enumerate_group, min_coset_reps, poincare_poly,
)
from mbsheaf.intpoly import IntPolynomial


# -- oracles ----------------------------------------------------------------

def closure_count_oracle(cartan):
    """Count positive roots by naive reflection closure on raw tuples."""
    rank = len(cartan)

    def refl(i, v):
        out = list(v)
        out[i] = -v[i] - sum(cartan[i][j] * v[j] for j in range(rank) if j != i)
        return tuple(out)

    pos = {tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)}
    changed = True
    while changed:
        changed = False
        for v in list(pos):
            for i in range(rank):
                w = refl(i, v)
                if all(x >= 0 for x in w) and w not in pos:
                    pos.add(w)
                    changed = True
    return len(pos)


def group_order_oracle(datum):
    """Generator-closure of matrices, independent of enumerate_group internals."""
    gens = [g.mat for g in datum.elements if g.length == 1]
    ident = tuple(tuple(1 if i == j else 0 for j in range(datum.rank))
                  for i in range(datum.rank))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = tuple(tuple(sum(m[i][k] * g[k][j] for k in range(datum.rank))
                                   for j in range(datum.rank)) for i in range(datum.rank))
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
        frontier = new
    return len(seen)


def subword_ideal(datum, w_idx):
    """All v <= w by the subword property: evaluate every subword of a reduced word."""
    word = datum.word_of(w_idx)
    ident = next(i for i, g in enumerate(datum.elements) if g.length == 0)
    ideal = set()
    for r in range(len(word) + 1):
        for positions in itertools.combinations(range(len(word)), r):
            v = ident
            for p in positions:
                v = datum.tables["right"][v][word[p]]
            ideal.add(v)
    return ideal


# -- construction -----------------------------------------------------------

EXPECTED_POSITIVE = {("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10,
                     ("B", 2): 4, ("B", 3): 9, ("C", 3): 9, ("G", 2): 6}
EXPECTED_ORDER = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120,
                  ("B", 2): 8, ("B", 3): 48, ("C", 3): 48, ("G", 2): 12}


@pytest.mark.parametrize("type_label,rank", SUPPORTED)
def test_positive_root_counts(type_label, rank):
    datum = build_coxeter(type_label, rank)
    assert len(datum.positive_roots) == EXPECTED_POSITIVE[(type_label, rank)]
    assert len(datum.positive_roots) == closure_count_oracle(datum.cartan)
    for v in datum.positive_roots:
        assert all(x >= 0 for x in v)


def test_unsupported_type():
    with pytest.raises(UnsupportedTypeError):
        build_coxeter("H", 3)
    with pytest.raises(UnsupportedTypeError):
        build_coxeter("A", 9)


@pytest.mark.parametrize("type_label,rank", SUPPORTED)
def test_group_enumeration(type_label, rank):
    datum = build_coxeter(type_label, rank)
    elems = enumerate_group(datum)
    assert len(elems) == EXPECTED_ORDER[(type_label, rank)]
    assert len({g.mat for g in elems}) == len(elems)
    assert elems[0].length == 0
    assert sum(1 for g in elems if g.length == 1) == rank
    assert group_order_oracle(datum) == len(elems)
    lengths = [g.length for g in elems]
    assert lengths == sorted(lengths)


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("B", 2), ("A", 3), ("G", 2)])
def test_length_equals_word_length(type_label, rank):
    datum = build_coxeter(type_label, rank)
    # BFS over generator words gives the minimal word length
    right = datum.tables["right"]
    ident = 0
    dist = {ident: 0}
    frontier = [ident]
    while frontier:
        new = []
        for i in frontier:
            for s in range(rank):
                j = right[i][s]
                if j not in dist:
                    dist[j] = dist[i] + 1
                    new.append(j)
        frontier = new
    for i, g in enumerate(datum.elements):
        assert g.length == dist[i]
        assert len(datum.word_of(i)) == g.length


def test_tables_consistency():
    datum = build_coxeter("B", 2)
    n = datum.order
    for i in range(n):
        j = datum.inv_idx(i)
        assert datum.mul_idx(i, j) == 0
        assert datum.mul_idx(j, i) == 0
    for i in range(n):
        for j in range(n):
            k = datum.mul_idx(i, j)
            prod_len = datum.elements[k].length
            assert abs(datum.elements[i].length - datum.elements[j].length) <= prod_len


# -- Bruhat order -------------------------------------------------------------

@pytest.mark.parametrize("type_label,rank", [("A", 2), ("B", 2), ("A", 3), ("G", 2), ("B", 3)])
def test_bruhat_vs_subword_oracle(type_label, rank):
    datum = build_coxeter(type_label, rank)
    n = datum.order
    for j in range(n):
        ideal = subword_ideal(datum, j)
        for i in range(n):
            assert bruhat_leq(datum, i, j) == (i in ideal)


def test_bruhat_extremes():
    datum = build_coxeter("A", 2)
    e = datum.elements[0]
    w0 = max(datum.elements, key=lambda g: g.length)
    for w in datum.elements:
        assert bruhat_leq(datum, e, w)
        assert bruhat_leq(datum, w0, w) == (w == w0)
    s1, s2 = (g for g in datum.elements if g.length == 1)
    s1s2 = datum.elements[datum.mul_idx(datum.index_of(s1), datum.index_of(s2))]
    s2s1s2 = datum.elements[datum.mul_idx(datum.index_of(s2), datum.index_of(s1s2))]
    assert bruhat_leq(datum, s1, s1s2)
    assert not bruhat_leq(datum, s2s1s2, s1s2)


# -- cosets and Poincare polynomials ------------------------------------------

@pytest.mark.parametrize("type_label,rank", [("A", 2), ("B", 2), ("A", 3), ("G", 2)])
def test_min_coset_reps_partition(type_label, rank):
    datum = build_coxeter(type_label, rank)
    full = set(range(rank))
    for r in range(rank + 1):
        for members in itertools.combinations(range(rank), r):
            reps = min_coset_reps(datum, members)
            sub = [i for i, g in enumerate(datum.elements)
                   if all(not datum.has_left_descent(i, s) or True for s in [])]
            # W_I as closure of its generators
            wi = {0}
            frontier = [0]
            while frontier:
                new = []
                for i in frontier:
                    for s in members:
                        j = datum.tables["right"][i][s]
                        if j not in wi:
                            wi.add(j)
                            new.append(j)
                frontier = new
            covered = set()
            for g in reps:
                gi = datum.index_of(g)
                coset = {datum.mul_idx(gi, h) for h in wi}
                assert not (coset & covered)
                covered |= coset
            assert covered == set(range(datum.order))
            assert len(reps) * len(wi) == datum.order
    assert [g.length for g in min_coset_reps(datum, full)] == [0]
    assert len(min_coset_reps(datum, ())) == datum.order


def test_poincare_examples():
    a1 = build_coxeter("A", 1)
    assert poincare_poly(a1, ()) == IntPolynomial((1, 1))
    assert poincare_poly(a1, (0,)) == IntPolynomial.one()
    a2 = build_coxeter("A", 2)
    assert poincare_poly(a2, ()) == IntPolynomial((1, 2, 2, 1))
    assert poincare_poly(a2, (0, 1)) == IntPolynomial.one()
    a2_reps = min_coset_reps(a2, (0,))
    assert sorted(g.length for g in a2_reps) == [0, 1, 2]


@pytest.mark.parametrize("type_label,rank", SUPPORTED)
def test_poincare_at_one(type_label, rank):
    datum = build_coxeter(type_label, rank)
    assert poincare_poly(datum, ())(1) == datum.order
    for s in range(rank):
        p = poincare_poly(datum, (s,))
        assert p(1) == datum.order // 2
        assert p.coeffs[0] == 1


def test_fundamental_coweights_duality():
    from fractions import Fraction
    for type_label, rank in SUPPORTED:
        datum = build_coxeter(type_label, rank)
        # <alpha_i, omega_j> = sum_k cartan[k][i] * omega_j[k] must be delta_ij
        for j, om in enumerate(datum.fundamental_coweights):
            for i in range(rank):
                pairing = sum(Fraction(datum.cartan[k][i]) * om[k] for k in range(rank))
                assert pairing == (1 if i == j else 0)

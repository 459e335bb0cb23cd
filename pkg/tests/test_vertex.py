import pytest
from hypothesis import given
from hypothesis import strategies as st

from nestloc.characters import LaurentPoly
from nestloc.combinatorics import (
    MultiPartition,
    NestedChain,
    Partition,
    box_character,
    mp_contains,
    multipartitions,
    nested_chains,
    partitions_of,
)
from nestloc.toric import bundle_by_label, line_bundle, p1xp1, p2
from nestloc.vertex import (
    GlobalCharacter,
    co_class,
    tangent_char,
    taut_char,
    vertex_V,
    virtual_tangent_char,
)


def lp(terms):
    return LaurentPoly(terms)


def arm_leg_oracle(lam: Partition) -> LaurentPoly:
    """Independent hook formula for the Hilbert-scheme tangent character.

    Convention selected by brute-force match against the diagonal vertex on
    |lambda| <= 2: box (i, j) contributes u1^(-leg-1) u2^arm and
    u1^leg u2^(-arm-1).
    """
    conj = lam.conjugate().parts
    terms = []
    for i, row in enumerate(lam.parts):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            terms.append(((-leg - 1, arm), 1))
            terms.append(((leg, -arm - 1), 1))
    return LaurentPoly(terms)


def all_partitions_up_to(n):
    for k in range(n + 1):
        yield from partitions_of(k)


def test_vertex_examples():
    zero, one = LaurentPoly.zero(), LaurentPoly.one()
    assert vertex_V(zero, zero) == zero
    assert vertex_V(zero, one) == one
    assert vertex_V(one, zero) == lp({(-1, -1): 1})
    assert vertex_V(one, one) == lp({(-1, 0): 1, (0, -1): 1})


def test_serre_duality_exhaustive_small():
    u1u2 = LaurentPoly.monomial(1, 1)
    for lam in all_partitions_up_to(4):
        for mu in all_partitions_up_to(4):
            q1, q2 = box_character(lam), box_character(mu)
            assert vertex_V(q1, q2).bar() == u1u2 * vertex_V(q2, q1)


def test_rank_law_exhaustive_small():
    for lam in all_partitions_up_to(4):
        for mu in all_partitions_up_to(4):
            v = vertex_V(box_character(lam), box_character(mu))
            assert v.rank_eval() == lam.size + mu.size


def test_arm_leg_convention_selected_by_brute_force():
    """The other plausible hook convention fails already on |lambda| = 2."""

    def transposed_oracle(lam):
        conj = lam.conjugate().parts
        terms = []
        for i, row in enumerate(lam.parts):
            for j in range(row):
                arm = row - j - 1
                leg = conj[j] - i - 1
                terms.append(((-arm - 1, leg), 1))
                terms.append(((arm, -leg - 1), 1))
        return LaurentPoly(terms)

    mismatch = 0
    for lam in all_partitions_up_to(2):
        q = box_character(lam)
        assert vertex_V(q, q) == arm_leg_oracle(lam)
        if vertex_V(q, q) != transposed_oracle(lam):
            mismatch += 1
    assert mismatch > 0


def test_diagonal_vertex_matches_arm_leg_oracle():
    for lam in all_partitions_up_to(5):
        q = box_character(lam)
        assert vertex_V(q, q) == arm_leg_oracle(lam)


def test_tangent_char_single_box():
    surface = p2()
    mp = MultiPartition((Partition((1,)), Partition(()), Partition(())))
    got = tangent_char(surface, mp)
    # pinned convention: u_k -> t^{-w_k}, so the single box at p0 gives the
    # honest tangent weights t^{w1} + t^{w2}
    assert got.value == lp({(1, 0): 1, (0, 1): 1})
    assert got.rank == 2


def test_tangent_char_empty():
    surface = p2()
    mp = MultiPartition((Partition(()),) * 3)
    assert tangent_char(surface, mp).value == LaurentPoly.zero()


@pytest.mark.parametrize("surface", [p2(), p1xp1()])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_tangent_rank_and_no_zero_weights(surface, n):
    for mp in multipartitions(surface, n):
        t = tangent_char(surface, mp)
        assert t.rank == 2 * n
        assert t.value.coefficient((0, 0)) == 0


def test_co_class_empty_pair_is_zero():
    surface = p2()
    empty = MultiPartition((Partition(()),) * 3)
    trivial = bundle_by_label(surface, "O")
    assert co_class(surface, empty, empty, trivial).value == LaurentPoly.zero()


def test_co_class_single_box_example():
    surface = p2()
    mp1 = MultiPartition((Partition((1,)), Partition(()), Partition(())))
    empty = MultiPartition((Partition(()),) * 3)
    trivial = bundle_by_label(surface, "O")
    # vertex_V(1, 0) = (u1 u2)^{-1}, substituted at chart p0
    w1, w2 = surface.charts[0]
    expected = lp({(w1[0] + w2[0], w1[1] + w2[1]): 1})
    assert co_class(surface, mp1, empty, trivial).value == expected


@pytest.mark.parametrize("d", [0, 1, 2])
def test_co_class_rank_independent_of_twist(d):
    surface = p2()
    bundle = line_bundle(surface, d)
    for mp1 in multipartitions(surface, 2):
        for mp2 in multipartitions(surface, 1):
            c = co_class(surface, mp1, mp2, bundle)
            assert c.rank == 3
            assert c.value.rank_eval() == 3


def test_diagonal_co_class_is_tangent():
    surface = p2()
    trivial = bundle_by_label(surface, "O")
    for n in (1, 2, 3):
        for mp in multipartitions(surface, n):
            assert co_class(surface, mp, mp, trivial).value == tangent_char(surface, mp).value


@pytest.mark.parametrize("surface", [p2(), p1xp1()])
def test_nested_effectivity_and_zero_weight_detection(surface):
    trivial = bundle_by_label(surface, "O")
    top = 4 if surface.name == "p2" else 3
    for n1 in range(1, top + 1):
        for n2 in range(n1 + 1):
            for mp1 in multipartitions(surface, n1):
                for mp2 in multipartitions(surface, n2):
                    value = co_class(surface, mp1, mp2, trivial).value
                    zero = value.coefficient((0, 0))
                    if mp_contains(mp1, mp2):
                        assert zero == 0
                        assert all(c >= 0 for _, c in value.terms())
                    else:
                        assert zero >= 1


def test_taut_char_examples():
    surface = p2()
    mp = MultiPartition((Partition((1,)), Partition(()), Partition(())))
    trivial = bundle_by_label(surface, "O")
    assert taut_char(surface, trivial, mp).value == LaurentPoly.one()
    o1 = line_bundle(surface, 1)
    assert taut_char(surface, o1, mp).value == lp({o1.weights[0]: 1})


@pytest.mark.parametrize("surface", [p2(), p1xp1()])
def test_taut_char_effective_with_rank_n(surface):
    bundle = line_bundle(surface, *((1,) if surface.name == "p2" else (1, 0)))
    for n in (1, 2, 3):
        for mp in multipartitions(surface, n):
            t = taut_char(surface, bundle, mp)
            assert t.rank == n
            assert all(c > 0 for _, c in t.value.terms())


def test_virtual_tangent_diagonal_chain_is_tangent():
    surface = p2()
    for mp in multipartitions(surface, 2):
        chain = NestedChain((mp, mp))
        v = virtual_tangent_char(surface, chain)
        assert v.value == tangent_char(surface, mp).value
        assert v.rank == 4


def test_virtual_tangent_rank_is_n1_plus_nk():
    surface = p2()
    for sizes in ((2, 1), (3, 2), (2, 1, 1)):
        for chain in nested_chains(surface, sizes):
            v = virtual_tangent_char(surface, chain)
            assert v.rank == sizes[0] + sizes[-1]
            assert v.value.rank_eval() == sizes[0] + sizes[-1]


def test_virtual_tangent_box_over_empty():
    surface = p2()
    box = MultiPartition((Partition((1,)), Partition(()), Partition(())))
    empty = MultiPartition((Partition(()),) * 3)
    chain = NestedChain((box, empty))
    v = virtual_tangent_char(surface, chain)
    assert v.rank == 1
    # tangent(box) - co_class(box, empty): t^{w1} + t^{w2} - t^{w1+w2}
    assert v.value == lp({(1, 0): 1, (0, 1): 1, (1, 1): -1})


def test_global_character_validates_rank():
    with pytest.raises(ValueError):
        GlobalCharacter(LaurentPoly.one(), 2, "taut")


@given(st.integers(0, 3), st.integers(0, 3))
def test_vertex_rank_property(n1, n2):
    for lam in partitions_of(n1):
        for mu in partitions_of(n2):
            assert vertex_V(box_character(lam), box_character(mu)).rank_eval() == n1 + n2

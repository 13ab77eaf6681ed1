import random

import pytest

from cycres.errors import FiniteOrderError
from cycres.gaussian import GaussianRational as G
from cycres.groupring import (
    BinomialProduct,
    FgAbelianGroup,
    GroupRingElement,
    general_binomial_equal,
    infinite_order,
    laurent_embed,
    match_factorizations,
    phi_degree,
    separating_hom,
)

Z = FgAbelianGroup(1)
Z2_MOD2 = FgAbelianGroup(0, (2,))
MIXED = FgAbelianGroup(1, (2,))
RANDOM_GROUP = FgAbelianGroup(2, (3,))


def binom(group, u, v):
    return (group.from_vector(u), group.from_vector(v))


def product(group, coeff, unit, factors):
    return BinomialProduct(
        group=group,
        unit_coeff=G.of(coeff),
        unit_elt=group.from_vector(unit),
        factors=tuple(binom(group, u, v) for u, v in factors),
    )


def one_minus(group, coeff, vec):
    """1 - coeff * s^vec as a group ring element."""
    return GroupRingElement.scalar(group, 1) - GroupRingElement.monomial(
        group, coeff, group.from_vector(vec)
    )


class TestGroupBasics:
    def test_parse_spec(self):
        g = FgAbelianGroup.parse_spec("rank=2;torsion=3,4")
        assert g.rank == 2 and g.torsion == (3, 4)
        assert FgAbelianGroup.parse_spec("rank=1;torsion=") == FgAbelianGroup(1)

    def test_torsion_reduction(self):
        e = MIXED.element([5], [7])
        assert e.tors == (1,)

    def test_infinite_order(self):
        assert infinite_order(MIXED, MIXED.element([1], [1]))
        assert not infinite_order(MIXED, MIXED.element([0], [1]))
        assert not infinite_order(MIXED, MIXED.identity())


class TestExpand:
    def test_plain_binomial(self):
        p = product(Z, 1, [0], [([1], [0])])
        expansion = p.expand()
        assert expansion.terms[Z.from_vector([1])] == G(1)
        assert expansion.terms[Z.from_vector([0])] == G(-1)

    def test_torsion_square(self):
        # (s - 1)^2 over Z/2 collapses: s^2 = 1
        p = product(Z2_MOD2, 1, [0], [([1], [0]), ([1], [0])])
        expansion = p.expand()
        two_minus_two_s = GroupRingElement(
            Z2_MOD2,
            {
                Z2_MOD2.from_vector([0]): G(2),
                Z2_MOD2.from_vector([1]): G(-2),
            },
        )
        assert expansion == two_minus_two_s

    def test_empty_factors(self):
        p = product(Z, 3, [0], [])
        assert p.expand() == GroupRingElement.scalar(Z, 3)


class TestSeparatingHom:
    def test_needs_second_vandermonde_point(self):
        g = FgAbelianGroup(2)
        elements = [g.element([1, 0]), g.element([0, 1]), g.element([1, -1])]
        phi = separating_hom(g, elements)
        assert phi == (1, 2)
        assert all(phi_degree(phi, e) != 0 for e in elements)

    def test_rank_one(self):
        phi = separating_hom(Z, [Z.element([3])])
        assert phi == (1,)

    def test_finite_order_rejected(self):
        g = FgAbelianGroup(1, (5,))
        with pytest.raises(FiniteOrderError):
            separating_hom(g, [g.element([0], [3])])

    def test_random_always_separates(self):
        rng = random.Random(31)
        g = FgAbelianGroup(3)
        for _ in range(50):
            elements = []
            while len(elements) < 5:
                vec = [rng.randint(-4, 4) for _ in range(3)]
                if any(vec):
                    elements.append(g.element(vec))
            phi = separating_hom(g, elements)
            assert all(phi_degree(phi, e) != 0 for e in elements)


class TestLaurentEmbed:
    def test_grading(self):
        g = FgAbelianGroup(2)
        x = GroupRingElement(
            g,
            {g.element([1, 0]): G(1), g.element([0, 1]): G(1)},
        )
        graded = laurent_embed(x, (1, 2))
        assert set(graded) == {1, 2}
        total = graded[1] + graded[2]
        assert total == x

    def test_zero(self):
        assert laurent_embed(GroupRingElement(Z), (1,)) == {}

    def test_ring_embedding_on_products(self):
        rng = random.Random(32)
        g = FgAbelianGroup(2)
        phi = (3, 5)
        for _ in range(40):
            def rand_elt():
                terms = {}
                for _ in range(rng.randint(1, 4)):
                    e = g.element([rng.randint(-3, 3), rng.randint(-3, 3)])
                    terms[e] = G(rng.randint(-5, 5))
                return GroupRingElement(g, terms)

            x, y = rand_elt(), rand_elt()
            gx, gy = laurent_embed(x, phi), laurent_embed(y, phi)
            gxy = laurent_embed(x * y, phi)
            # graded convolution of the embeddings
            conv = {}
            for dx, px in gx.items():
                for dy, py in gy.items():
                    piece = px * py
                    if (dx + dy) in conv:
                        conv[dx + dy] = conv[dx + dy] + piece
                    else:
                        conv[dx + dy] = piece
            conv = {d: p for d, p in conv.items() if not p.is_zero()}
            assert conv == gxy


class TestMatch:
    def test_negated_factor(self):
        p1 = product(Z, 1, [0], [([0], [1])])
        p2 = product(Z, -1, [1], [([0], [-1])])
        match = match_factorizations(p1, p2)
        assert match is not None
        assert match.p == 0
        assert match.eta_coeff == -1
        assert match.eta_elt == Z.from_vector([1])

    def test_identical_products(self):
        p = product(RANDOM_GROUP, 1, [2, -1, 1], [([1, 0, 0], [0, 1, 2]), ([0, 2, 0], [1, 1, 0])])
        match = match_factorizations(p, p)
        assert match is not None and match.p == 2
        assert match.eta_coeff == 1
        assert match.eta_elt == RANDOM_GROUP.identity()

    def test_finite_order_precondition(self):
        # (1-s)(1-s) versus 2(1-s) over Z/2
        p1 = product(Z2_MOD2, 1, [0], [([0], [1]), ([0], [1])])
        p2 = product(Z2_MOD2, 2, [0], [([0], [1])])
        with pytest.raises(FiniteOrderError):
            match_factorizations(p1, p2)
        # the expansions nevertheless agree: the hypothesis is necessary
        assert general_binomial_equal(p1.expand(), p2.expand())

    def test_plain_mismatch(self):
        p1 = product(Z, 1, [0], [([0], [1]), ([0], [2])])
        p2 = product(Z, 1, [0], [([0], [1]), ([0], [3])])
        assert match_factorizations(p1, p2) is None
        assert p1.expand() != p2.expand()

    def test_length_mismatch(self):
        p1 = product(Z, 1, [0], [([0], [1])])
        p2 = product(Z, 1, [0], [([0], [1]), ([0], [1])])
        assert match_factorizations(p1, p2) is None

    def test_shift_identities_hold(self):
        # (1-s)(1-s^-2) = -s^-2 (1-s)(1-s^2)
        p1 = product(Z, 1, [0], [([0], [1]), ([0], [-2])])
        p2 = product(Z, -1, [-2], [([0], [1]), ([0], [2])])
        assert p1.expand() == p2.expand()
        match = match_factorizations(p1, p2)
        assert match is not None and match.p == 1


def random_element(rng, group):
    while True:
        vec = [rng.randint(-3, 3) for _ in range(group.rank)] + [
            rng.randint(0, m - 1) for m in group.torsion
        ]
        e = group.from_vector(vec)
        if any(e.free):
            return e


def random_equal_pair(rng, group, max_factors=4):
    """Build two equal products by permuting, flipping and shifting factors."""
    e = rng.randint(1, max_factors)
    factors = []
    for _ in range(e):
        u = group.from_vector(
            [rng.randint(-3, 3) for _ in range(group.rank)]
            + [rng.randint(0, m - 1) for m in group.torsion]
        )
        g = random_element(rng, group)
        factors.append((u, group.add(u, g)))
    unit_elt = group.from_vector(
        [rng.randint(-3, 3) for _ in range(group.rank)]
        + [rng.randint(0, m - 1) for m in group.torsion]
    )
    coeff = G(rng.choice([1, -1, 2, -3]))
    p1 = BinomialProduct(group, coeff, unit_elt, tuple(factors))

    order = list(range(e))
    rng.shuffle(order)
    new_factors = []
    swaps = 0
    total_shift = group.identity()
    for i in order:
        u, v = factors[i]
        shift = group.from_vector(
            [rng.randint(-2, 2) for _ in range(group.rank)]
            + [rng.randint(0, m - 1) for m in group.torsion]
        )
        total_shift = group.add(total_shift, shift)
        if rng.random() < 0.5:
            new_factors.append((group.add(u, shift), group.add(v, shift)))
        else:
            swaps += 1
            new_factors.append((group.add(v, shift), group.add(u, shift)))
    unit2 = group.sub(unit_elt, total_shift)
    coeff2 = coeff * (-1 if swaps % 2 else 1)
    p2 = BinomialProduct(group, coeff2, unit2, tuple(new_factors))
    return p1, p2


class TestMatchRandomized:
    def test_equal_pairs_always_match(self):
        rng = random.Random(33)
        for _ in range(200):
            p1, p2 = random_equal_pair(rng, RANDOM_GROUP)
            assert p1.expand() == p2.expand()
            match = match_factorizations(p1, p2)
            assert match is not None
            # normal-form unit: coefficient (-1)^flips, element = flipped diffs
            flips = sum(1 for o in match.orientations if o == -1)
            assert match.eta_coeff == (-1 if flips % 2 else 1)
            acc = RANDOM_GROUP.identity()
            diffs = p1.differences()
            for i, o in enumerate(match.orientations):
                if o == -1:
                    acc = RANDOM_GROUP.add(acc, diffs[i])
            assert acc == match.eta_elt

    def test_match_agrees_with_expansion_oracle(self):
        rng = random.Random(34)
        agreements = 0
        for _ in range(200):
            p1, _ = random_equal_pair(rng, RANDOM_GROUP)
            p2, _ = random_equal_pair(rng, RANDOM_GROUP)
            match = match_factorizations(p1, p2)
            equal = p1.expand() == p2.expand()
            assert (match is not None) == equal
            agreements += 1
        assert agreements == 200

    def test_shifts_reconstruct_factors(self):
        rng = random.Random(35)
        for _ in range(100):
            p1, p2 = random_equal_pair(rng, RANDOM_GROUP)
            match = match_factorizations(p1, p2)
            assert match is not None
            for i, (c_i, d_i) in enumerate(match.shifts):
                j = match.permutation[i]
                u, v = p1.factors[i]
                x, y = p2.factors[j]
                lhs = (
                    GroupRingElement.monomial(RANDOM_GROUP, 1, RANDOM_GROUP.add(c_i, u))
                    - GroupRingElement.monomial(RANDOM_GROUP, 1, RANDOM_GROUP.add(c_i, v))
                )
                sign = match.orientations[i]
                rhs = (
                    GroupRingElement.monomial(RANDOM_GROUP, sign, RANDOM_GROUP.add(d_i, x))
                    - GroupRingElement.monomial(RANDOM_GROUP, sign, RANDOM_GROUP.add(d_i, y))
                )
                assert lhs == rhs


class TestZeroDivisorProperty:
    def test_one_minus_unit_scalar_times_nonzero(self):
        rng = random.Random(36)
        group = MIXED
        for _ in range(100):
            g = random_element(rng, group)
            alpha = G(rng.choice([1, -1, 2]), rng.choice([0, 1]))
            tau_terms = {}
            for _ in range(rng.randint(1, 4)):
                e = group.from_vector(
                    [rng.randint(-3, 3), rng.randint(0, 1)]
                )
                tau_terms[e] = G(rng.randint(-4, 4))
            tau = GroupRingElement(group, tau_terms)
            if tau.is_zero():
                continue
            factor = one_minus(group, alpha, list(g.free) + list(g.tors))
            assert not (factor * tau).is_zero()


class TestGeneralEquality:
    def test_three_factorizations_of_one_element(self):
        # C[s,t]/(s^2-1) modeled on Z + Z/2: t is the free generator, s the torsion one
        group = MIXED
        i = G(0, 1)
        st = [1, 1]
        a = (
            one_minus(group, 1, st)
            * one_minus(group, -1, st)
            * one_minus(group, i, st)
            * one_minus(group, -i, st)
        )
        st2 = [2, 1]
        b = one_minus(group, 1, st2) * one_minus(group, -1, st2)
        c = one_minus(group, 1, [4, 0])
        assert general_binomial_equal(a, b)
        assert general_binomial_equal(b, c)
        assert len(c.terms) == 2

    def test_zero_equals_zero(self):
        assert general_binomial_equal(GroupRingElement(Z), GroupRingElement(Z))

    def test_sign_difference_detected(self):
        plus = one_minus(Z, -1, [1])   # 1 + s
        minus = one_minus(Z, 1, [1])   # 1 - s
        assert not general_binomial_equal(plus, minus)

    def test_json_roundtrip(self):
        p = product(RANDOM_GROUP, -1, [1, 2, 1], [([1, 0, 0], [0, 0, 1])])
        data = p.to_json()
        back = BinomialProduct.from_json(RANDOM_GROUP, data)
        assert back == p

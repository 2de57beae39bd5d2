from hypothesis import given, settings
from hypothesis import strategies as st

from f5gb.arith import GF, GREVLEX, LEX, QQ, Ring, normal_form
from f5gb.corpus import corpus, random_system
from f5gb.oracle import (
    buchberger,
    ideal_member,
    is_groebner,
    leading_ideal,
    reduced_gb,
    s_polynomial,
)


def test_not_a_basis():
    R = Ring(("x", "y", "z"), QQ, GREVLEX)
    x, y, z = R.gens()
    ok, witness = is_groebner([x**2 + 2 * y, x * y - z])
    assert not ok
    f, g = witness
    assert {f, g} == {x**2 + 2 * y, x * y - z}


def test_reduced_lex():
    R = Ring(("x", "y"), QQ, LEX)
    x, y = R.gens()
    # not a Groebner basis, but autoreduction already completes it
    assert reduced_gb([x, x + y]) == [y, x]
    assert is_groebner(reduced_gb([x, x + y]))[0]
    assert reduced_gb([x, x + y]) == reduced_gb(buchberger([x, x + y]))


def test_s_polynomial(toy_ring):
    x, y, z = toy_ring.gens()
    f1, f2 = y**2 + y * z - x, y**2 - z**2 + z
    assert s_polynomial(f1, f2) == y * z + z**2 - x - z


def test_toy_basis(toy_system, toy_ring):
    x, y, z = toy_ring.gens()
    G = buchberger(toy_system)
    assert is_groebner(G)[0]
    R = reduced_gb(G)
    assert all(g.lc() == 1 for g in R)
    assert leading_ideal(R) == sorted(g.lpp() for g in R)
    assert leading_ideal(G + R) == leading_ideal(R)
    assert ideal_member(toy_system[0] * x - toy_system[1] * z, G)
    assert not ideal_member(x, G)


def test_reduced_gb_is_canonical():
    for s in corpus(20):
        G = buchberger(s.polys)
        R = reduced_gb(G)
        assert reduced_gb(R) == R
        assert reduced_gb(list(reversed(G))) == R
        # inter-reduced: no term of g is divisible by another lead
        leads = [g.lpp() for g in R]
        for g in R:
            others = [h for h in R if h is not g]
            assert normal_form(g, others) == g
        assert len(set(leads)) == len(leads)


def test_reduced_gb_other_order(toy_system):
    R = reduced_gb(buchberger(toy_system), order=LEX)
    assert is_groebner(R)[0]
    assert all(g.ring.order == LEX for g in R)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_is_groebner_agrees_with_full_pair_check(seed):
    s = random_system(seed, field=GF(7), nvars=(2, 3), ngens=(2, 3), max_degree=2)
    G = list(s.polys)
    full = all(normal_form(s_polynomial(f, g), G).is_zero() for i, f in enumerate(G) for g in G[i + 1:])
    assert is_groebner(G)[0] == full
    assert is_groebner(buchberger(G))[0]

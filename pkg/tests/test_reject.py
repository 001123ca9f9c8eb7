import pytest
from hypothesis import given, settings, strategies as st

import oracles
from jtl.elements import ElementSet
from jtl.harness.catalog import builtin_ring
from jtl.module import (
    direct_sum,
    direct_sum_encode,
    left_annihilator_of,
    module_quotient,
    radical,
    regular_module,
    simple_modules,
    zero_module,
)
from jtl.reject import (
    cogenerates,
    cogenerating_embedding,
    embedding_into_product,
    jrej,
    jrej_ring,
    nilrej,
    product_map,
    radical_quotient,
    radical_quotient_class,
    rej,
    smallest_cogen_submodule,
    torsion_profile,
)


def members(S):
    return list(S.members)


@pytest.fixture(scope="module")
def Z4_squared(Z4):
    return direct_sum([regular_module(Z4)] * 2)


def test_golden_example(Z4, Z4_squared):
    RR = regular_module(Z4)
    two_zero = direct_sum_encode([4, 4], (2, 0))
    j = jrej(Z4_squared, (RR,)).members
    r = rej(Z4_squared, (RR,)).members
    assert two_zero in j and two_zero not in r
    assert members(j) == sorted(direct_sum_encode([4, 4], (a, b)) for a in (0, 2) for b in (0, 2))
    assert members(r) == [0]


def test_rej_examples(Z4, Z2_over_Z4):
    RR = regular_module(Z4)
    assert members(rej(Z2_over_Z4, (RR,)).members) == [0]
    # a class with only zero maps leaves everything
    assert rej(RR, (zero_module(Z4),)).members.is_full()
    assert jrej(RR, (zero_module(Z4),)).members.is_full()


def test_jrej_examples(Z4, Z6, Z2_over_Z4):
    RR = regular_module(Z4)
    assert jrej(Z2_over_Z4, (RR,)).members.is_full()
    assert members(jrej_ring(RR).members) == [0, 2]
    assert members(jrej_ring(Z2_over_Z4).members) == [0, 1]
    assert members(radical(Z2_over_Z4)) == [0]
    R6 = regular_module(Z6)
    assert jrej_ring(R6).members == rej(R6, (R6,)).members


def test_nilrej_examples(Z4, Z6):
    n = nilrej(regular_module(Z4))
    assert members(n.members) == [0, 2] and n.is_submodule
    assert members(nilrej(regular_module(Z6)).members) == [0]
    assert members(nilrej(zero_module(Z4)).members) == [0]


def test_torsion_profiles(Z4, Z6, Z2_over_Z4):
    tp = torsion_profile(regular_module(Z4))
    assert tp["torsionless"] and not tp["j_torsionless"] and tp["witness"] == 2
    tp = torsion_profile(Z2_over_Z4)
    assert tp["torsionless"] and not tp["j_torsionless"]
    tp = torsion_profile(regular_module(Z6))
    assert tp["torsionless"] and tp["j_torsionless"]


def test_radical_quotient_class_and_cogeneration(Z4, Z6, Z3_over_Z6):
    (Q,) = radical_quotient_class((regular_module(Z4),))
    assert Q.size == 2
    assert cogenerates((regular_module(Z6),), Z3_over_Z6)
    assert cogenerates((regular_module(Z4),), zero_module(Z4))
    maps = cogenerating_embedding((regular_module(Z6),), Z3_over_Z6)
    assert maps and all(oracles.is_hom(f.source, f.target, f.image) for f in maps)


def test_smallest_cogen_on_verified_instances(Z4, Z6, Z4_squared):
    cmp = smallest_cogen_submodule(Z4_squared, (regular_module(Z4),))
    assert cmp.holds and cmp.minimum == cmp.jrej
    R6 = regular_module(Z6)
    cmp = smallest_cogen_submodule(R6, (R6,))
    assert cmp.holds and cmp.minimum.is_zero()


def test_smallest_cogen_counterexample_z2_over_z4(Z4, Z2_over_Z4):
    """M = Z2 over Z4, U = {Z4}: JRej is all of M, yet M/0 = M already embeds
    in U/Rad U = Z2.  Checked here with the brute-force oracle."""
    U = (regular_module(Z4),)
    cmp = smallest_cogen_submodule(Z2_over_Z4, U)
    assert not cmp.holds
    assert cmp.jrej.is_full()
    assert cmp.minimum.is_zero()
    (top,) = radical_quotient_class(U)
    assert oracles.monomorphism_into_product(Z2_over_Z4, [top]) is not None
    assert oracles.jrej(Z2_over_Z4, U) == {0, 1}
    assert cogenerates((top,), Z2_over_Z4)


def test_embedding_into_product(Z4, Z3_over_Z6):
    phi = embedding_into_product(Z3_over_Z6)
    assert phi is not None and len(phi.components) == 3
    assert embedding_into_product(regular_module(Z4)) is None
    pm = product_map(regular_module(Z4))
    assert pm.table[2] == pm.table[0]
    assert embedding_into_product(zero_module(Z4)) is not None


def _oracle_modules():
    out = []
    for name in ("Z2", "Z4", "Z6", "Z8", "Z2xZ2", "T2(F2)"):
        R = builtin_ring(name)
        RR = regular_module(R)
        out.append(RR)
        from jtl.ring import left_ideals
        out.extend(module_quotient(RR, I) for I in left_ideals(R) if not I.is_zero())
    Z4 = builtin_ring("Z4")
    out.append(direct_sum([regular_module(Z4), module_quotient(regular_module(Z4),
                                                                ElementSet.of(4, [0, 2]))]))
    return out


ORACLE_MODULES = _oracle_modules()


@pytest.mark.parametrize("idx", range(len(ORACLE_MODULES)))
def test_rej_and_jrej_match_oracle(idx):
    M = ORACLE_MODULES[idx]
    R = M.ring
    classes = [(regular_module(R),), tuple(simple_modules(R))]
    classes.append((M,))
    for U in classes:
        assert set(rej(M, U).members) == oracles.rej(M, U)
        assert set(jrej(M, U).members) == oracles.jrej(M, U)


@pytest.mark.parametrize("idx", range(len(ORACLE_MODULES)))
def test_ring_side_identities(idx):
    M = ORACLE_MODULES[idx]
    R = M.ring
    RR = regular_module(R)
    assert jrej(M, (RR,)).members == jrej_ring(M).members
    assert radical(M) == rej(M, simple_modules(R)).members
    assert radical(M).issubset(jrej_ring(M).members)
    assert jrej(RR, (M,)).members == left_annihilator_of(radical_quotient(M))


@settings(max_examples=60, deadline=None)
@given(a=st.integers(0, len(ORACLE_MODULES) - 1), b=st.integers(0, len(ORACLE_MODULES) - 1),
       c=st.integers(0, len(ORACLE_MODULES) - 1))
def test_rej_inside_jrej_and_monotone_in_class(a, b, c):
    M, V, W = ORACLE_MODULES[a], ORACLE_MODULES[b], ORACLE_MODULES[c]
    if not (M.ring is V.ring is W.ring):
        return
    r1, j1 = rej(M, (V,)).members, jrej(M, (V,)).members
    r2, j2 = rej(M, (V, W)).members, jrej(M, (V, W)).members
    assert r1.issubset(j1) and r2.issubset(j2)
    # enlarging the class can only shrink the rejects
    assert r2.issubset(r1) and j2.issubset(j1)
    assert r2 == r1 & rej(M, (W,)).members
    assert j2 == j1 & jrej(M, (W,)).members

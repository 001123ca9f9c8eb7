import pytest
from hypothesis import given, settings, strategies as st

import oracles
from jtl.constructors import (
    is_irreducible,
    ring_gf,
    ring_matrix,
    ring_product,
    ring_quotient,
    ring_upper_triangular,
    ring_zmod,
)
from jtl.elements import ElementSet
from jtl.errors import AxiomViolation, BudgetExceeded, NotTwoSidedIdeal, ReduciblePolynomial, ShapeError
from jtl.harness.catalog import BUILTIN_RINGS, builtin_ring
from jtl.limits import override_limits
from jtl.ring import (
    RING_FLAGS,
    classify_ring,
    division_ring_decomposition,
    element_classes,
    is_left_ideal,
    is_two_sided_ideal,
    jacobson_radical,
    left_annihilator,
    left_ideals,
    left_quotient_set,
    maximal_left_ideals,
    minimal_left_ideals,
    principal_left_ideal,
    right_annihilator,
    ring_to_doc,
    validate_ring,
)

# J(R) and the number of left ideals, from the subset-enumeration oracle
# (M2(F2) is too big for it: simple ring, left ideals <-> subspaces of F2^2)
FROZEN = {
    "Z2": ([0], 2), "Z3": ([0], 2), "Z4": ([0, 2], 3), "Z5": ([0], 2),
    "Z6": ([0], 4), "Z7": ([0], 2), "Z8": ([0, 2, 4, 6], 4), "Z9": ([0, 3, 6], 3),
    "Z10": ([0], 4), "Z11": ([0], 2), "Z12": ([0, 6], 6), "F4": ([0], 2),
    "Z2xZ2": ([0], 4), "Z2xZ4": ([0, 4], 6), "M2(F2)": ([0], 5), "T2(F2)": ([0, 2], 7),
}

ALL_RINGS = list(BUILTIN_RINGS)
SMALL_RINGS = [n for n in ALL_RINGS if builtin_ring(n).size <= 12]


def es(R, xs):
    return ElementSet.of(R.size, xs)


@pytest.mark.parametrize("name", ALL_RINGS)
def test_builtin_rings_pass_axiom_oracle(name):
    R = builtin_ring(name)
    assert oracles.ring_axioms_hold(R.size, R.add, R.mul, R.one)
    assert validate_ring(ring_to_doc(R)).same_tables(R)


@pytest.mark.parametrize("name", ALL_RINGS)
def test_radical_and_ideal_count_frozen(name):
    R = builtin_ring(name)
    J, count = FROZEN[name]
    assert list(jacobson_radical(R).members) == J
    assert len(left_ideals(R)) == count


@pytest.mark.parametrize("name", SMALL_RINGS)
def test_radical_matches_maximal_ideal_intersection_oracle(name):
    R = builtin_ring(name)
    assert set(jacobson_radical(R).members) == oracles.jacobson_by_maximal_ideals(R)
    assert {frozenset(I.members) for I in left_ideals(R)} == set(oracles.left_ideals(R))


@pytest.mark.parametrize("name", ALL_RINGS)
def test_radical_is_intersection_of_maximal_left_ideals(name):
    R = builtin_ring(name)
    J = jacobson_radical(R)
    meet = R.full()
    for mu in maximal_left_ideals(R):
        meet = meet & mu
        assert J.issubset(mu)
    assert J == meet
    assert is_two_sided_ideal(R, J)


@pytest.mark.parametrize("name", ALL_RINGS)
def test_every_left_ideal_lies_in_its_quotient_set(name):
    R = builtin_ring(name)
    J = jacobson_radical(R)
    for I in left_ideals(R):
        assert I.issubset(left_quotient_set(R, J, right_annihilator(R, I)))


def test_left_ideals_sorted_and_closed():
    for name in ALL_RINGS:
        R = builtin_ring(name)
        ideals = left_ideals(R)
        assert ideals == sorted(ideals, key=lambda I: I.sort_key())
        assert all(is_left_ideal(R, I) for I in ideals)
        assert ideals[0].is_zero() and ideals[-1].is_full()


def test_zmod_examples(Z4, Z6):
    assert Z4.size == 4 and Z4.one == 1
    assert [list(I.members) for I in left_ideals(Z4)] == [[0], [0, 2], [0, 1, 2, 3]]
    assert [list(I.members) for I in maximal_left_ideals(Z4)] == [[0, 2]]
    assert len(left_ideals(Z6)) == 4
    assert [list(I.members) for I in maximal_left_ideals(Z6)] == [[0, 3], [0, 2, 4]]
    assert [list(I.members) for I in minimal_left_ideals(Z6)] == [[0, 3], [0, 2, 4]]


def test_field_ideals():
    for R in (builtin_ring("Z5"), builtin_ring("F4")):
        assert [list(I.members) for I in left_ideals(R)] == [[0], list(range(R.size))]
        assert [list(I.members) for I in maximal_left_ideals(R)] == [[0]]
        ec = element_classes(R)
        assert list(ec.units.members) == list(range(1, R.size))
        assert list(ec.idempotents.members) == [0, 1]
        assert list(ec.nilpotents.members) == [0]


def test_element_classes(Z4, Z6):
    ec = element_classes(Z4)
    assert (list(ec.units.members), list(ec.idempotents.members), list(ec.nilpotents.members)) \
        == ([1, 3], [0, 1], [0, 2])
    ec = element_classes(Z6)
    assert (list(ec.units.members), list(ec.idempotents.members), list(ec.nilpotents.members)) \
        == ([1, 5], [0, 1, 3, 4], [0])


def test_upper_triangular_radical_is_strict_upper_part():
    T = builtin_ring("T2(F2)")
    J = jacobson_radical(T)
    assert len(J) == 2
    x = J.members[1]
    assert T.mul[x][x] == 0
    # brute force: 1 - rx is a unit for all r
    units = {u for u in range(T.size) if any(T.mul[u][v] == T.one for v in range(T.size))}
    minus = {a: next(b for b in range(T.size) if T.add[a][b] == 0) for a in range(T.size)}
    assert all(T.add[T.one][minus[T.mul[r][x]]] in units for r in range(T.size))


def test_annihilators_and_quotient_sets(Z6):
    assert right_annihilator(Z6, [3]) == es(Z6, [0, 2, 4])
    J = jacobson_radical(Z6)
    assert left_quotient_set(Z6, J, es(Z6, [0, 2, 4])) == es(Z6, [0, 3])
    A = es(Z6, [0, 3])
    assert left_quotient_set(Z6, A, es(Z6, [0])).is_full()
    assert left_annihilator(Z6, [2]) == es(Z6, [0, 3])


def test_product_of_z2_z3_is_z6():
    P = ring_product(ring_zmod(2), ring_zmod(3))
    assert P.size == 6
    assert oracles.rings_isomorphic(P, ring_zmod(6))
    assert not oracles.rings_isomorphic(ring_zmod(4), builtin_ring("Z2xZ2"))


def test_quotient_of_z4_is_z2(Z4):
    Q = ring_quotient(Z4, es(Z4, [0, 2]))
    assert Q.size == 2
    assert Q.add == ((0, 1), (1, 0)) and Q.mul == ((0, 0), (0, 1))
    assert oracles.rings_isomorphic(Q, ring_zmod(2))


def test_quotient_requires_two_sided_ideal():
    T = builtin_ring("T2(F2)")
    one_sided = next(I for I in left_ideals(T) if not is_two_sided_ideal(T, I))
    with pytest.raises(NotTwoSidedIdeal):
        ring_quotient(T, one_sided)


def test_matrix_ring_is_simple_but_not_reduced():
    M = ring_matrix(ring_gf(2, 1, [0]), 2)
    assert M.size == 16
    assert oracles.ring_axioms_hold(M.size, M.add, M.mul, M.one)
    prof = classify_ring(M)
    assert prof.semiprime and prof.semisimple and not prof.reduced


def test_gf_constructor():
    F4 = ring_gf(2, 2, [1, 1])
    assert F4.size == 4 and F4.name == "F4"
    assert all(F4.one in F4.mul[a] for a in range(1, 4))
    F9 = ring_gf(3, 2, [1, 0])   # x^2 + 1
    assert F9.size == 9 and classify_ring(F9).division
    with pytest.raises(ReduciblePolynomial):
        ring_gf(2, 2, [1, 0])   # x^2 + 1 = (x + 1)^2 over F2
    assert is_irreducible(2, [1, 1, 1]) and not is_irreducible(2, [0, 1, 1])


def test_ring_size_cap():
    with pytest.raises(BudgetExceeded):
        ring_upper_triangular(ring_zmod(2), 3)
    with override_limits(max_ring_size=64):
        T3 = ring_upper_triangular(ring_zmod(2), 3)
        assert T3.size == 64
        assert len(jacobson_radical(T3)) == 8


def test_validate_rejects_corrupted_multiplication(Z4):
    doc = ring_to_doc(Z4)
    doc["mul"][2][2] = 1
    with pytest.raises(AxiomViolation) as info:
        validate_ring(doc)
    assert "associativity" in info.value.axiom or "distributivity" in info.value.axiom
    assert len(info.value.witness) == 3


def test_validate_shape_errors(Z4):
    doc = ring_to_doc(Z4)
    doc["add"] = doc["add"][:3]
    with pytest.raises(ShapeError):
        validate_ring(doc)
    doc = ring_to_doc(Z4)
    doc["mul"][0][0] = 9
    with pytest.raises(ShapeError):
        validate_ring(doc)
    with pytest.raises(ShapeError):
        validate_ring({"size": 2})


def test_zero_ring_is_valid_and_flagged():
    Z = validate_ring({"kind": "ring", "name": "0", "size": 1, "one": 0,
                       "add": [[0]], "mul": [[0]]})
    prof = classify_ring(Z)
    assert prof.semiprimitive and not prof.domain and not prof.division


def test_profiles_of_spec_rings(Z4, Z6):
    p6 = classify_ring(Z6)
    for flag in ("semiprimitive", "semiprime", "reduced", "von_neumann_regular",
                 "fully_idempotent", "LA", "self_injective", "semisimple"):
        assert p6.flags[flag], flag
    assert not p6.domain and not p6.division

    p4 = classify_ring(Z4)
    assert p4.LA and p4.self_injective
    for flag in ("semiprimitive", "semiprime", "reduced", "von_neumann_regular",
                 "fully_idempotent", "semisimple"):
        assert not p4.flags[flag]
        assert p4.witnesses[flag] in ({"a": 2}, {"socle": [0, 2]})

    assert all(classify_ring(ring_zmod(2)).flags.values())
    assert not classify_ring(builtin_ring("T2(F2)")).self_injective


def test_every_false_flag_has_a_witness():
    for name in ALL_RINGS:
        prof = classify_ring(builtin_ring(name))
        assert set(prof.flags) == set(RING_FLAGS)
        for flag, value in prof.flags.items():
            assert value or flag in prof.witnesses


def _brute_flags(R):
    """Definitions evaluated literally, for comparison with classify_ring."""
    E = range(R.size)
    mul, add = R.mul, R.add
    nil = {a for a in E if any(_power(R, a, k) == 0 for k in range(1, R.size + 1))}
    ideals = oracles.left_ideals(R)

    def l_ann(S):
        return frozenset(x for x in E if all(mul[x][s] == 0 for s in S))

    def r_ann(S):
        return frozenset(x for x in E if all(mul[s][x] == 0 for s in S))

    def span(seeds):
        S = {0} | set(seeds)
        while True:
            bigger = S | {add[a][b] for a in S for b in S}
            if bigger == S:
                return frozenset(S)
            S = bigger

    flags = {
        "semiprimitive": oracles.jacobson_by_maximal_ideals(R) == {0},
        "semiprime": all(a == 0 or any(mul[mul[a][r]][a] for r in E) for a in E),
        "reduced": nil == {0},
        "domain": R.size > 1 and all(mul[a][b] for a in E for b in E if a and b),
        "von_neumann_regular": all(any(mul[mul[a][x]][a] == a for x in E) for a in E),
        "LA": all(I == l_ann(r_ann(I)) for I in ideals),
    }
    flags["fully_idempotent"] = all(
        span(mul[x][y] for x in Ra for y in Ra) == Ra
        for Ra in (frozenset(mul[r][a] for r in E) for a in E))
    return flags


def _power(R, a, k):
    x = a
    for _ in range(k - 1):
        x = R.mul[x][a]
    return x


@pytest.mark.parametrize("name", SMALL_RINGS)
def test_profile_matches_literal_definitions(name):
    R = builtin_ring(name)
    prof = classify_ring(R)
    for flag, value in _brute_flags(R).items():
        assert prof.flags[flag] == value, flag


def test_profile_implications():
    for name in ALL_RINGS:
        p = classify_ring(builtin_ring(name))
        assert not p.division or p.domain
        assert not p.semisimple or (p.semiprimitive and p.semiprime)
        assert not p.von_neumann_regular or p.fully_idempotent
        assert not p.fully_idempotent or p.semiprimitive


def test_division_ring_decomposition():
    assert division_ring_decomposition(builtin_ring("Z6")) == [3, 4]
    assert division_ring_decomposition(builtin_ring("Z4")) is None
    assert division_ring_decomposition(builtin_ring("M2(F2)")) is None
    assert division_ring_decomposition(builtin_ring("F4")) == [1]


# random single-entry corruptions: validate_ring agrees with the oracle
@settings(max_examples=150, deadline=None)
@given(name=st.sampled_from(["Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "F4"]),
       table=st.sampled_from(["add", "mul"]),
       i=st.integers(0, 5), j=st.integers(0, 5), v=st.integers(0, 5), one=st.integers(0, 5))
def test_validation_agrees_with_axiom_oracle(name, table, i, j, v, one):
    R = builtin_ring(name)
    n = R.size
    doc = ring_to_doc(R)
    doc[table][i % n][j % n] = v % n
    doc["one"] = one % n if one < 2 else R.one
    expected = oracles.ring_axioms_hold(n, doc["add"], doc["mul"], doc["one"])
    try:
        validate_ring(doc)
        accepted = True
    except AxiomViolation:
        accepted = False
    assert accepted == expected


@settings(max_examples=60, deadline=None)
@given(name=st.sampled_from(ALL_RINGS), data=st.data())
def test_principal_ideals_are_left_ideals(name, data):
    R = builtin_ring(name)
    a = data.draw(st.integers(0, R.size - 1))
    I = principal_left_ideal(R, a)
    assert is_left_ideal(R, I)
    assert I in left_ideals(R)
    # l(r(I)) always contains I
    assert I.issubset(left_annihilator(R, right_annihilator(R, I)))

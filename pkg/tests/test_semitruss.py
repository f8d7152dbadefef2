from itertools import product

import pytest

from ybtruss import catalog, maps, tables
from ybtruss.errors import InputError, PreconditionError
from ybtruss.semitruss import (
    SemiTruss,
    associated_derived,
    associated_solution,
    check_homomorphism,
    from_semibrace,
    from_skew_brace,
    idempotent_sets,
    opposite,
    retract_semitruss,
    verify_semitruss,
)
from ybtruss.solution import check_ybe, classify, compose_solutions, derived_solution, inverse_solution, retract_tower

import oracles


def _replace(T, **kw):
    d = dict(m=T.m, add=T.add, mul=T.mul, lam=T.lam, sig=T.sig, unit=T.unit)
    d.update(kw)
    return SemiTruss(**d)


def test_circnotgroup_axioms():
    rep = verify_semitruss(catalog.circnotgroup())
    assert rep.valid and rep.condc1 is None
    assert set(rep.results) >= {"lambda_hom", "sumcirc", "csum", "sigma_antihom", "clambda"}


def test_trivial_brace_axioms():
    assert verify_semitruss(catalog.trivial_brace(2)).valid


def test_corrupted_sigma_fails_csum():
    T = catalog.circnotgroup()
    bad = _replace(T, sig=((1, 1, 1, 1),) + T.sig[1:])
    rep = verify_semitruss(bad)
    assert not rep.valid
    assert rep.results["csum"] is not None
    a, b = rep.results["csum"]
    assert bad.add[a][b] != bad.add[b][bad.sig[b][a]]


def test_out_of_range_rejected():
    T = catalog.circnotgroup()
    with pytest.raises(InputError):
        _replace(T, add=((0, 1, 2, 4),) + T.add[1:])


def test_unit_inconsistent_rejected():
    T = catalog.two_element_monoid()
    with pytest.raises(InputError, match="sigma_0"):
        _replace(T, unit=1)


def test_associated_solution():
    S = associated_solution(catalog.circnotgroup())
    assert S.rho == ((0,) * 4, (1,) * 4, (0,) * 4, (1,) * 4)
    assert associated_solution(catalog.trivial_brace(2)) == catalog.flip(2)


def test_idempotent_semitruss_gives_idempotent_solution():
    # sig_b = const b on the right-zero semitruss and on the 4-point example
    for T in (catalog.right_zero(3), catalog.circnotgroup()):
        S = associated_solution(T)
        assert classify(S).idempotent
        assert compose_solutions(S, S) == S.table()


def test_associated_derived():
    assert associated_derived(catalog.trivial_brace(3)) == catalog.flip(3)
    s = associated_derived(catalog.circnotgroup())
    assert all(s(a, b) == (b, b) for a, b in product(range(4), repeat=2))
    T = catalog.s3_conjugation_brace()
    s = associated_derived(T)
    inv = tables.inverses(T.mul)
    for a, b in product(range(6), repeat=2):
        assert s(a, b) == (b, T.mul[T.mul[inv[b]][a]][b])
    # rack axioms of conjugation: each sigma_b bijective and self-distributive
    for b in range(6):
        assert maps.is_bijective(T.sig[b])
    for a, b, c in product(range(6), repeat=3):
        assert T.sig[c][T.sig[b][a]] == T.sig[T.sig[c][b]][T.sig[c][a]]


def test_derived_commutes_with_associated():
    for T in (catalog.circnotgroup(), catalog.s3_conjugation_brace(), catalog.right_zero(3)):
        assert derived_solution(associated_solution(T)) == associated_derived(T)


def test_opposite():
    C2 = catalog.trivial_brace(2)
    assert opposite(C2) == C2
    T = catalog.s3_conjugation_brace()
    O = opposite(T)
    assert verify_semitruss(O).valid
    inv = tables.inverses(T.mul)
    for a, b in product(range(6), repeat=2):
        assert O.sig[b][a] == T.mul[T.mul[b][a]][inv[b]]
    S, R = associated_solution(T), associated_solution(O)
    assert compose_solutions(S, R) == tuple(range(36))
    assert R == inverse_solution(S)
    assert opposite(O) == T
    with pytest.raises(PreconditionError, match="sigma_0"):
        opposite(catalog.circnotgroup())


def test_idempotent_sets():
    Ep, Ec, rep = idempotent_sets(catalog.circnotgroup())
    assert Ep == {0, 1, 2, 3} and Ec == {0, 1}
    Ep, Ec, rep = idempotent_sets(catalog.trivial_brace(3))
    assert Ep == Ec == {0}
    assert rep["commutative"]
    Ep, Ec, rep = idempotent_sets(catalog.two_element_monoid())
    assert Ep == {0, 1} and rep["unital"] is False


def test_skew_brace_constructor():
    C3 = tables.cyclic(3)
    T = from_skew_brace(C3, C3)
    assert all(f == maps.identity(3) for f in T.lam + T.sig)
    assert associated_solution(T) == catalog.flip(3)
    S = associated_solution(catalog.s3_conjugation_brace())
    f = classify(S)
    assert f.lnd and f.rnd and f.bijective


def _law_witness(add, mul):
    neg = tables.inverses(add)
    for a, b, d in product(range(len(add)), repeat=3):
        if mul[a][add[b][d]] != add[add[mul[a][b]][neg[a]]][mul[a][d]]:
            return (a, b, d)
    return None


def _labelled(base, p):
    q = maps.inverse(p)
    return tuple(tuple(p[base(q[a], q[b])] for b in range(4)) for a in range(4))


def test_c4_with_klein_multiplication_is_always_a_brace():
    from itertools import permutations

    add = tables.cyclic(4)
    for p in permutations(range(1, 4)):
        mul = _labelled(lambda a, b: a ^ b, (0,) + p)
        assert _law_witness(add, mul) is None
        assert verify_semitruss(from_skew_brace(add, mul)).valid


def test_skew_brace_rejects_bad_law():
    add = tables.cyclic(4)
    mul = _labelled(lambda a, b: (a + b) % 4, (0, 1, 3, 2))
    w = _law_witness(add, mul)
    assert w is not None
    with pytest.raises(PreconditionError, match="law fails"):
        from_skew_brace(add, mul)


def test_semibrace_constructor():
    C3 = tables.cyclic(3)
    assert from_semibrace(C3, C3) == from_skew_brace(C3, C3)
    S3 = catalog.s3_table()
    assert from_semibrace(S3, S3) == from_skew_brace(S3, S3)
    # right-zero addition with a group multiplication
    add = [[0, 1], [0, 1]]
    T = from_semibrace(add, tables.cyclic(2))
    assert verify_semitruss(T).valid


def test_semibrace_rejects_left_zero_addition():
    with pytest.raises(PreconditionError, match="left cancellative"):
        from_semibrace([[0, 0], [1, 1]], tables.cyclic(2))


def test_homomorphisms():
    T = catalog.circnotgroup()
    assert check_homomorphism(T, T, maps.identity(4))["valid"]
    B = catalog.s3_conjugation_brace()
    G, f, audit = retract_semitruss(B)
    rep = check_homomorphism(B, G, f)
    assert rep["valid"] and rep["surjective"] and rep["rho_compatible"]
    bad = check_homomorphism(T, T, (1, 0, 3, 3))
    assert not bad["valid"]
    assert any(w is not None for w in bad["conditions"].values())


def test_retract_semitruss():
    G, f, audit = retract_semitruss(catalog.trivial_brace(3))
    assert G.m == 1
    B = catalog.s3_conjugation_brace()
    G, f, audit = retract_semitruss(B)
    classes = oracles.triple_classes(B.m, B.lam, B.sig, B.rho())
    assert G.m == len(classes)
    assert sorted(tuple(a for a in range(B.m) if f[a] == c) for c in range(G.m)) == classes
    assert audit.skew_brace
    with pytest.raises(PreconditionError, match="degenerate"):
        retract_semitruss(catalog.circnotgroup())


def test_brace_retract_tower_terminates():
    for T in (catalog.trivial_brace(2), catalog.s3_conjugation_brace()):
        S = associated_solution(T)
        tower = retract_tower(S)
        assert len(tower) <= S.n + 1
        assert check_ybe(tower[-1]).valid


def test_sumgroup_checked():
    rep = verify_semitruss(catalog.s3_conjugation_brace())
    assert rep.sumgroup is True

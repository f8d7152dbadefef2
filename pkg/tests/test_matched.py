from itertools import product

import pytest

from ybtruss import catalog, maps
from ybtruss.errors import PreconditionError
from ybtruss.matched import (
    MatchedSystemSol,
    MatchedSystemST,
    compatibility_mismatches,
    induced_solution_system,
    matched_product_semitruss,
    matched_product_solutions,
    random_systems,
    validate_system_semitruss,
    validate_system_solutions,
)
from ybtruss.semitruss import associated_solution, verify_semitruss
from ybtruss.solution import are_isomorphic, check_ybe


def more_then_one(n=3, alpha=None):
    rot = [maps.power(tuple((i + 1) % n for i in range(n)), k) for k in range(n)]
    return MatchedSystemST(catalog.right_zero(n), catalog.trivial_brace(n), alpha or rot, [maps.identity(n)] * n)


def identity_system(A1, A2):
    return MatchedSystemST(A1, A2, [maps.identity(A1.m)] * A2.m, [maps.identity(A2.m)] * A1.m)


def test_validate_examples():
    assert validate_system_semitruss(more_then_one()).valid
    C2 = catalog.trivial_brace(2)
    assert validate_system_semitruss(identity_system(C2, C2)).valid
    # a non-homomorphic alpha
    bad = more_then_one(alpha=[(1, 0, 2), (1, 2, 0), (2, 0, 1)])
    rep = validate_system_semitruss(bad)
    assert not rep.valid and rep.conditions["alpha_hom"] is not None


def test_product_semitruss():
    C2 = catalog.trivial_brace(2)
    P = matched_product_semitruss(identity_system(C2, C2))
    assert P.m == 4 and associated_solution(P) == catalog.flip(4)
    P = matched_product_semitruss(more_then_one())
    assert P.m == 9 and verify_semitruss(P).valid


def test_product_with_circnotgroup():
    sysm = identity_system(catalog.circnotgroup(), catalog.trivial_brace(2))
    rep = validate_system_semitruss(sysm)
    if rep.valid:
        assert verify_semitruss(matched_product_semitruss(sysm)).valid
    else:
        with pytest.raises(PreconditionError):
            matched_product_semitruss(sysm)


def test_solution_systems():
    F2, F3 = catalog.flip(2), catalog.flip(3)
    trivial = MatchedSystemSol(F2, F2, [(0, 1)] * 2, [(0, 1)] * 2)
    assert validate_system_solutions(trivial).valid
    assert matched_product_solutions(trivial) == catalog.flip(4)
    assert validate_system_solutions(induced_solution_system(more_then_one())).valid
    bad = MatchedSystemSol(F3, F2, [(1, 0, 2), (0, 2, 1)], [(0, 1)] * 3)
    rep = validate_system_solutions(bad)
    assert rep.conditions["s1"] is not None
    with pytest.raises(PreconditionError, match="s1"):
        matched_product_solutions(bad)


def test_commuting_rotations_pass():
    F3 = catalog.flip(3)
    sysm = MatchedSystemSol(F3, F3, [maps.power((1, 2, 0), k) for k in range(3)], [maps.identity(3)] * 3)
    assert validate_system_solutions(sysm).valid


def test_compatibility():
    assert compatibility_mismatches(more_then_one()) == []
    C2 = catalog.trivial_brace(2)
    assert compatibility_mismatches(identity_system(C2, C2)) == []


def test_random_systems(census_lnd):
    pool = census_lnd[2] + census_lnd[3][::40]
    found = 0
    for i, S in enumerate(pool):
        for T in pool[i::5]:
            if S.n * T.n > 6:
                continue
            for sysm in random_systems(S, T, 20, seed=i):
                assert check_ybe(matched_product_solutions(sysm)).valid
                found += 1
    assert found > 0


def test_unital_product():
    C2, C3 = catalog.trivial_brace(2), catalog.trivial_brace(3)
    P = matched_product_semitruss(identity_system(C2, C3))
    assert P.unit == C2.unit * 3 + C3.unit


def test_one_point_factor():
    one = catalog.trivial_brace(1)
    for A in (catalog.circnotgroup(), catalog.s3_conjugation_brace()):
        P = matched_product_semitruss(identity_system(A, one))
        assert are_isomorphic(associated_solution(P), associated_solution(A)) is not None

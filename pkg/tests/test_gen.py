import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import mat, vec
from nearvec import oracle
from nearvec.dickson import NDTriple, dickson_build
from nearvec.errors import (
    DimMismatch,
    FullyDistributive,
    PivotZero,
    ReplayMismatch,
    TripleInvalid,
    TriplePreconditionViolated,
)
from nearvec.gen import (
    GenBasis,
    distributivity_trick,
    ege,
    gen_membership,
    generates_everything,
    spanning_vectors,
    two_vector_generators,
)
from nearvec.vectors import NfMatrix, NfVector

DN32 = dickson_build(3, 2)
EXAMPLE_ROWS = ["(1, 1, 2, x+1, 1)", "(0, 0, 0, 2x+2, 1)", "(1, 1, 1, x+2, 1)"]


def triple(ctx, a, b, lam):
    return NDTriple(ctx.parse(a), ctx.parse(b), ctx.parse(lam))


def test_trick_example(dn32):
    rec = distributivity_trick(vec(dn32, "(1, 1)"), vec(dn32, "(0, 1)"), 1, triple(dn32, "1", "x", "x"))
    assert rec.theta.render() == "(0, 2+x)"
    assert rec.phi.render() == "(0, 1)"
    assert dn32.render(rec.gamma) == "2+x"


def test_trick_errors(dn32):
    t = triple(dn32, "1", "x", "x")
    with pytest.raises(PivotZero):
        distributivity_trick(vec(dn32, "(1, 0)"), vec(dn32, "(0, 1)"), 1, t)
    with pytest.raises(TriplePreconditionViolated):
        distributivity_trick(vec(dn32, "(1, 1)"), vec(dn32, "(1, x)"), 1, t)
    with pytest.raises(TripleInvalid):
        distributivity_trick(vec(dn32, "(1, 1)"), vec(dn32, "(0, 1)"), 1, triple(dn32, "1", "1", "1"))
    with pytest.raises(DimMismatch):
        distributivity_trick(vec(dn32, "(1, 1)"), vec(dn32, "(0, 1, 1)"), 1, t)


def test_ege_worked_example(dn32):
    basis, cert = ege(mat(dn32, *EXAMPLE_ROWS))
    assert basis.rank == 4
    assert [u.render() for u in basis.rows] == [
        "(1, 1, 0, 0, 0)", "(0, 0, 1, 0, 0)", "(0, 0, 0, 1, 0)", "(0, 0, 0, 0, 1)"]
    assert cert.replay(mat(dn32, *EXAMPLE_ROWS).rows) == list(basis.rows)


def test_ege_small_examples(dn32):
    basis, _ = ege(mat(dn32, "(1, 1)", "(0, 1)"))
    assert [u.render() for u in basis.rows] == ["(1, 0)", "(0, 1)"]
    basis, cert = ege(mat(dn32, "(1, x)"))
    assert [u.render() for u in basis.rows] == ["(1, x)"]
    assert cert.appended() == []
    basis, _ = ege(mat(dn32, "(0, 0)", "(0, 0)"))
    assert basis.rank == 0
    assert len(oracle.enumerate_basis(basis)) == 1


def test_ege_rank_bounds(dn32):
    basis, _ = ege(mat(dn32, "(1, 1, 1, 1)"))
    assert basis.rank == 1
    basis, _ = ege(mat(dn32, "(1, 1, 1, 1)", "(0, 1, x, 2)"))
    assert 2 <= basis.rank <= 4


def test_membership(dn32):
    basis, _ = ege(mat(dn32, "(1, x)"))
    ok, coeffs = gen_membership(basis, vec(dn32, "(x, 2)"))
    assert ok and [dn32.render(c) for c in coeffs] == ["x"]
    assert gen_membership(basis, vec(dn32, "(1, 0)")) == (False, None)
    with pytest.raises(DimMismatch):
        gen_membership(basis, vec(dn32, "(1, 0, 0)"))


def test_spanning_vectors(dn32, dn31):
    assert [v.render() for v in spanning_vectors(dn32, 3)] == ["(1, 1, 0)", "(1, 0, 1)"]
    assert [v.render() for v in spanning_vectors(dn32, 2)] == ["(1, 1)"]
    for n in (3, 4, 5):
        assert generates_everything(spanning_vectors(dn32, n))
    # a single vector only reaches its multiples
    assert not generates_everything(spanning_vectors(dn32, 2))
    assert len(oracle.gen_bruteforce(dn32, [(1, 1)])) == 9
    with pytest.raises(FullyDistributive):
        spanning_vectors(dn31, 3)
    with pytest.raises(DimMismatch):
        spanning_vectors(dn32, 1)


def test_two_vector_generators_is_exploratory(dn32):
    found = list(two_vector_generators(dn32, 3, limit=2))
    for a, b in found:
        assert len(oracle.gen_bruteforce(dn32, [tuple(a), tuple(b)])) == 9**3


def test_field_mode(dn31):
    basis, _ = ege(mat(dn31, "(1, 1)", "(2, 2)"))
    assert basis.field_mode and [u.render() for u in basis.rows] == ["(1, 1)"]


def test_basis_json_round_trip(dn32):
    basis, cert = ege(mat(dn32, *EXAMPLE_ROWS))
    data = json.loads(json.dumps(basis.to_json()))
    assert GenBasis.from_json(dn32, data) == basis
    assert json.dumps(cert.to_json(dn32))
    with pytest.raises(DimMismatch):
        GenBasis.from_json(dickson_build(5, 2), data)


def test_tampered_certificate_is_rejected(dn32):
    _, cert = ege(mat(dn32, *EXAMPLE_ROWS))
    other = mat(dn32, *EXAMPLE_ROWS[:2], "(1, 1, 1, x+2, x)")
    with pytest.raises(ReplayMismatch):
        cert.replay(other.rows)


# -- properties ------------------------------------------------------------------

def matrices(ctx, max_n=3, max_k=3):
    return st.integers(1, max_n).flatmap(lambda n: st.lists(
        st.lists(st.integers(0, ctx.order - 1), min_size=n, max_size=n),
        min_size=1, max_size=max_k).map(lambda rows: NfMatrix.from_rows(ctx, rows, n)))


@given(matrices(DN32))
def test_ege_matches_bruteforce(M):
    basis, cert = ege(M)
    assert basis.column_condition()
    assert cert.replay(M.rows) == list(basis.rows)
    truth = oracle.gen_bruteforce(DN32, [tuple(v) for v in M.rows], M.n)
    assert oracle.enumerate_basis(basis) == truth
    for phi in cert.appended():
        assert tuple(phi) in truth


@given(matrices(DN32))
def test_ege_idempotent(M):
    basis, _ = ege(M)
    again, _ = ege(NfMatrix(DN32, M.n, basis.rows))
    assert again == basis


@given(matrices(DN32, max_k=2), st.lists(st.integers(0, 8), min_size=3, max_size=3))
def test_gen_monotone(M, extra):
    v = NfVector(DN32, extra[:M.n])
    small = oracle.enumerate_basis(ege(M)[0])
    big = oracle.enumerate_basis(ege(NfMatrix(DN32, M.n, M.rows + (v,)))[0])
    assert small.issubset(big)


@given(matrices(DN32), st.integers(1, 8), st.data())
def test_gen_invariant_under_row_ops(M, r, data):
    rows = list(M.rows)
    i = data.draw(st.integers(0, len(rows) - 1))
    j = data.draw(st.integers(0, len(rows) - 1))
    rows[i] = rows[i] * r
    if i != j:
        rows[i] = rows[i] - rows[j] * data.draw(st.integers(0, 8))
    rows.reverse()
    assert ege(M)[0] == ege(NfMatrix(DN32, M.n, rows))[0]


@given(st.lists(st.integers(0, 8), min_size=1, max_size=4).filter(any))
def test_single_vector_gen_is_multiples(entries):
    v = NfVector(DN32, entries)
    multiples = {tuple(v * r) for r in DN32.elements}
    got = oracle.gen_bruteforce(DN32, [tuple(v)])
    assert {tuple(u) for u in got.vectors()} == multiples

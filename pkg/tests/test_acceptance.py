"""Acceptance criteria 1-10, exact.  One PASS/FAIL line per criterion is
printed in the terminal summary."""

import itertools
import random

import pytest

from helpers import PRINTED_DN32_TABLE, mat
from nearvec import oracle
from nearvec.dickson import cayley_table, dickson_build, distributive_elements
from nearvec.gen import ege
from nearvec.span import CoordMask, aege, span_mask_shortcut, span_of, subspace_count
from nearvec.vectors import NfMatrix, NfVector

DN32 = dickson_build(3, 2)
GEN_EXAMPLE = ["(1, 1, 2, x+1, 1)", "(0, 0, 0, 2x+2, 1)", "(1, 1, 1, x+2, 1)"]
SPAN_EXAMPLE = ["(0, 1, 1, 0, 0)", "(0, x+1, 2, 0, x+1)", "(1, x+1, 1, 0, x)"]


def sweep_matrices(ctx, count, ns, max_k, seed):
    """Deterministic random matrices; shared with the replay check."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(ns)
        k = rng.randint(1, max_k)
        out.append(NfMatrix.from_rows(ctx, [[rng.randrange(ctx.order) for _ in range(n)]
                                            for _ in range(k)], n))
    return out


SWEEP = sweep_matrices(DN32, 200, (2, 3), 3, seed=2024)


def keys(M):
    return [tuple(v) for v in M.rows]


def test_criterion_01_table_fidelity():
    printed = [[DN32.parse(s) for s in row.split()] for row in PRINTED_DN32_TABLE]
    tab = cayley_table(DN32)
    cells = [(a, b) for a in DN32.elements for b in DN32.elements]
    assert len(cells) == 81
    assert all(tab[a][b] == printed[b][a] for a, b in cells)
    add, mul = DN32.add, DN32.mul
    triples = list(itertools.product(DN32.elements, repeat=3))
    assert len(triples) == 729
    assert all(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)) for a, b, c in triples)
    assert any(mul(add(a, b), c) != add(mul(a, c), mul(b, c)) for a, b, c in triples)


def test_criterion_02_distributive_elements():
    assert distributive_elements(DN32) == {0, 1, 2}
    assert len(distributive_elements(dickson_build(5, 2))) == 5


def test_criterion_03_ege_fixture():
    M = mat(DN32, *GEN_EXAMPLE)
    basis, cert = ege(M)
    assert basis.rank == 4
    assert [u.render() for u in basis.rows] == [
        "(1, 1, 0, 0, 0)", "(0, 0, 1, 0, 0)", "(0, 0, 0, 1, 0)", "(0, 0, 0, 0, 1)"]
    enum = oracle.enumerate_basis(basis)
    assert len(enum) == 6561
    assert enum == oracle.gen_bruteforce(DN32, keys(M))


def test_criterion_04_aege_fixtures():
    one, two = mat(DN32, *SPAN_EXAMPLE), mat(DN32, *GEN_EXAMPLE)
    mask1, _ = aege(one)
    mask2, _ = aege(two)
    assert mask1 == CoordMask(5, {1, 2, 3, 5}) and mask1.dimension == 4
    assert mask2 == CoordMask(5, {1, 2, 3, 4, 5}) and mask2.dimension == 5
    assert mask1 == span_mask_shortcut(one)
    assert mask2 == span_mask_shortcut(two)


@pytest.mark.xfail(strict=True, reason="gen of the single vector (1,1) is (1,1)R with 9 "
                   "elements, so the n=2 case of the stated equality cannot hold")
def test_criterion_05_n_minus_one_generators():
    assert len(oracle.gen_bruteforce(DN32, [(1, 1, 0), (1, 0, 1)])) == 729
    assert len(oracle.gen_bruteforce(DN32, [(1, 1)])) == 81


def test_criterion_06_counterexample_conclusions():
    T = oracle.gen_bruteforce(DN32, [(1, DN32.parse("x"))])
    assert oracle.is_rsubgroup_set(T)
    assert not oracle.is_subspace_set(T)
    m, s, r = T.flags["witness"]
    assert tuple(s) in T and tuple((m + s) * r - m * r) not in T
    assert len(oracle.span_bruteforce(DN32, [(1, DN32.parse("x"))])) == 81


def test_criterion_07_oracle_sweep():
    assert len(SWEEP) >= 200
    mismatches = []
    for M in SWEEP:
        basis, _ = ege(M)
        mask, _ = aege(M)
        if oracle.enumerate_basis(basis) != oracle.gen_bruteforce(DN32, keys(M), M.n):
            mismatches.append(("gen", M.to_text()))
        if oracle.enumerate_basis(mask, DN32) != oracle.span_bruteforce(DN32, keys(M), M.n):
            mismatches.append(("span", M.to_text()))
    assert mismatches == []


def test_criterion_08_counting():
    assert subspace_count(5, 2) == 10
    for n in range(6):
        assert sum(subspace_count(n, k) for k in range(n + 1)) == subspace_count(n) == 2**n
    masks = [CoordMask(3, set(c)) for k in range(4) for c in itertools.combinations((1, 2, 3), k)]
    assert len(masks) == 8
    assert all(oracle.is_subspace_set(oracle.enumerate_basis(mk, DN32)) for mk in masks)
    checked = 0
    for t in itertools.product(DN32.elements, repeat=3):
        if sum(1 for c in t if c) < 2:
            continue
        assert not oracle.is_subspace_set(oracle.gen_bruteforce(DN32, [t])), t
        checked += 1
    # 9^3 - 1 nonzero vectors, minus 3 * 8 with singleton support
    assert checked == 9**3 - 1 - 24


@pytest.mark.parametrize("q", [3, 5])
def test_criterion_09_field_degeneration(q):
    ctx = dickson_build(q, 1)
    mats = sweep_matrices(ctx, 100, (1, 2, 3), 3, seed=q)
    for M in mats:
        classical = oracle.classical_row_space(q, keys(M), M.n)
        basis, _ = ege(M)
        res = span_of(M)
        assert res.field_mode
        gen_set = {tuple(v) for v in oracle.enumerate_basis(basis).array().tolist()}
        span_set = {tuple(v) for v in oracle.enumerate_basis(res.basis).array().tolist()}
        brute_gen = {tuple(v) for v in oracle.gen_bruteforce(ctx, keys(M), M.n).array().tolist()}
        brute_span = {tuple(v) for v in oracle.span_bruteforce(ctx, keys(M), M.n).array().tolist()}
        assert gen_set == span_set == brute_gen == brute_span == classical


def test_criterion_10_properties_and_replay():
    rng = random.Random(10)
    # idempotence and monotonicity
    for M in SWEEP[:60]:
        basis, _ = ege(M)
        assert ege(NfMatrix(DN32, M.n, basis.rows))[0] == basis
        extra = NfVector(DN32, [rng.randrange(9) for _ in range(M.n)])
        bigger, _ = ege(NfMatrix(DN32, M.n, M.rows + (extra,)))
        assert oracle.enumerate_basis(basis).issubset(oracle.enumerate_basis(bigger))
    # gen(m) = mR
    for _ in range(50):
        n = rng.randint(1, 4)
        v = NfVector(DN32, [rng.randrange(9) for _ in range(n)])
        got = {tuple(u) for u in oracle.gen_bruteforce(DN32, [tuple(v)]).array().tolist()}
        assert got == {tuple(v * r) for r in DN32.elements}
    # certificate replay for every engine output of criteria 3-7
    inputs = [mat(DN32, *GEN_EXAMPLE), mat(DN32, *SPAN_EXAMPLE),
              mat(DN32, "(1, 1, 0)", "(1, 0, 1)"), mat(DN32, "(1, 1)"), mat(DN32, "(1, x)")]
    for M in inputs + SWEEP:
        basis, gcert = ege(M)
        assert gcert.replay(M.rows) == list(basis.rows)
        mask, scert = aege(M)
        assert scert.replay(M.rows) == mask

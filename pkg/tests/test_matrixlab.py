import itertools
import random

import numpy as np
import pytest

from mathieu_kit.algebra import matrix_algebra, poly_quotient_algebra
from mathieu_kit.errors import (
    ConsistencyError,
    NotMatrixAlgebra,
    NotProper,
    ScalarDual,
    TooSmall,
    WrongCodimension,
    ZeroDual,
)
from mathieu_kit.fields import GF, QQ, Poly
from mathieu_kit.matrixlab import (
    _batch_left_refute,
    canonical_rep,
    classify_codim1,
    classify_lines,
    mathieu_iff_idempotent_free,
    trace_dual,
    trace_of_product,
    trace_orthogonal,
    witness_idempotents,
)
from mathieu_kit.mathieu import decide_mathieu
from mathieu_kit.subspace import ALL_VARIANTS, Sidedness, Subspace, span

F2, F3, F5 = GF(2), GF(3), GF(5)


def mat(alg, rows):
    return alg.element([c for row in rows for c in row])


# -- trace pairing ------------------------------------------------------------------


def test_trace_orthogonal_of_identity_is_trace_zero_plane():
    a = matrix_algebra(2, F5)
    h = trace_orthogonal(a.one())
    assert h.dim == 3
    for x in h.elements():
        m = np.array(x.coords).reshape(2, 2)
        assert (m[0, 0] + m[1, 1]) % 5 == 0


def test_trace_orthogonal_of_e12():
    a = matrix_algebra(2, F5)
    v = trace_orthogonal(a.basis_element(1))
    # Tr(A E_12) = a_21
    assert v == span(a, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    with pytest.raises(ZeroDual):
        trace_orthogonal(a.zero())
    f4 = poly_quotient_algebra(Poly.from_ints(F2, [1, 1, 1]))
    with pytest.raises(NotMatrixAlgebra):
        trace_orthogonal(f4.one())


def test_trace_dual_spec_points():
    a3 = matrix_algebra(2, F3)
    h = trace_orthogonal(a3.one())
    assert trace_dual(h).canonical == canonical_rep(a3.one())
    a2 = matrix_algebra(2, F2)
    v = span(a2, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]])  # a_21 = 0
    assert trace_dual(v).canonical == a2.basis_element(1)  # X ~ E_12
    with pytest.raises(WrongCodimension):
        trace_dual(span(a2, [[1, 0, 0, 0]]))


def test_pairing_round_trip_exhaustive_m2_f3():
    a = matrix_algebra(2, F3)
    for coords in itertools.product(range(3), repeat=4):
        if all(c == 0 for c in coords):
            continue
        x = a.element(coords)
        back = trace_dual(trace_orthogonal(x))
        assert back.canonical == canonical_rep(x)
        # and the subspace really is the kernel of the pairing with x
        v = trace_orthogonal(x)
        for y in v.basis_elements():
            assert trace_of_product(y, x) == 0


# -- refuting idempotents ------------------------------------------------------------------


def assert_witness_properties(alg, n, x):
    a, b = witness_idempotents(x)
    ident = alg.one()
    assert a * a == a and b * b == b
    assert not a.is_zero and a != ident
    assert not b.is_zero and b != ident
    assert not (a * x).is_zero
    assert not (x * b).is_zero
    assert trace_of_product(a, x) == 0
    assert trace_of_product(x, b) == 0


def test_witness_case_matrices_follow_the_three_cases():
    a = matrix_algebra(2, F5)
    f = F5
    # case 1: top-right entry nonzero
    x = mat(a, [[2, 3], [1, 4]])
    w, _ = witness_idempotents(x)
    inv3 = f.inv(3)
    assert w == mat(a, [[1, 0], [(-2 * inv3) % 5, 0]])
    # case 2: b = 0, c != 0
    x = mat(a, [[2, 0], [3, 4]])
    w, _ = witness_idempotents(x)
    inv3 = f.inv(3)
    assert w == mat(a, [[0, (-inv3 * 4) % 5], [0, 1]])
    # case 3: diagonal, distinct entries
    x = mat(a, [[2, 0], [0, 4]])
    w, _ = witness_idempotents(x)
    s = f.inv((4 - 2) % 5)
    assert w == mat(a, [[(s * 4) % 5, (s * 4) % 5], [(-s * 2) % 5, (-s * 2) % 5]])


def test_witness_properties_exhaustive_n2():
    for q in (2, 3, 5):
        alg = matrix_algebra(2, GF(q))
        for coords in itertools.product(range(q), repeat=4):
            x = alg.element(coords)
            if x.is_zero:
                continue
            m = np.array(coords).reshape(2, 2)
            if m[0, 1] == 0 and m[1, 0] == 0 and m[0, 0] == m[1, 1]:
                with pytest.raises(ScalarDual):
                    witness_idempotents(x)
                continue
            assert_witness_properties(alg, 2, x)


def test_witness_properties_sampled_n3():
    rng = random.Random(17)
    for q in (2, 3, 5):
        alg = matrix_algebra(3, GF(q))
        done = 0
        while done < 60:
            coords = tuple(rng.randrange(q) for _ in range(9))
            x = alg.element(coords)
            m = np.array(coords).reshape(3, 3)
            scalar = np.all(m == m[0, 0] * np.eye(3, dtype=int) % q)
            if x.is_zero or scalar:
                continue
            assert_witness_properties(alg, 3, x)
            done += 1


def test_witness_guards():
    with pytest.raises(TooSmall):
        witness_idempotents(matrix_algebra(1, F3).one())
    a = matrix_algebra(2, F3)
    with pytest.raises(ZeroDual):
        witness_idempotents(a.zero())
    with pytest.raises(ScalarDual):
        witness_idempotents(a.one().scale(2))


def test_witness_works_over_rationals():
    a = matrix_algebra(3, QQ)
    x = mat(a, [[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert_witness_properties(a, 3, x)


def test_batch_refute_agrees_with_scalar_construction():
    # every canonical non-identity class of M_2(F_3), in one batch
    blocks = []
    for coords in itertools.product(range(3), repeat=4):
        x = np.array(coords).reshape(2, 2)
        nz = [c for c in coords if c != 0]
        if not nz or nz[0] != 1:
            continue  # not canonical
        if coords == (1, 0, 0, 1):
            continue  # identity class
        blocks.append(x)
    xs = np.array(blocks, dtype=np.int64)
    _batch_left_refute(xs, 3, 2)  # must not raise
    _batch_left_refute(np.ascontiguousarray(xs.transpose(0, 2, 1)), 3, 2)
    with pytest.raises(ConsistencyError):
        _batch_left_refute(np.array([np.eye(2, dtype=np.int64)]), 3, 2)


# -- classification --------------------------------------------------------------------------


def test_classify_codim1_small_cases():
    report = classify_codim1(2, 3)
    assert report.decision == "scan"
    assert report.total_classes == 40
    assert all(count == 1 for count in report.per_theta.values())
    assert report.representatives["two_sided"] == [["1", "0", "0", "1"]]

    report = classify_codim1(2, 2)
    assert report.total_classes == 15
    assert all(count == 0 for count in report.per_theta.values())


def test_classify_codim1_witness_mode_matches_scan():
    by_scan = classify_codim1(2, 3, decision="scan")
    by_witness = classify_codim1(2, 3, decision="witness")
    assert by_scan.per_theta == by_witness.per_theta
    assert by_scan.representatives == by_witness.representatives
    assert by_witness.scan_checked >= 1


def test_classify_codim1_n1():
    report = classify_codim1(1, 3)
    assert report.total_classes == 1
    assert all(count == 1 for count in report.per_theta.values())


def test_classify_lines_counts():
    report = classify_lines(2, 2)
    assert report.total_lines == 15
    for variant in ALL_VARIANTS:
        assert (
            report.per_theta[variant.value]
            == report.total_lines - report.quasi_idempotent_lines
        )
    report3 = classify_lines(2, 3)
    assert report3.total_lines == 40
    with pytest.raises(TooSmall):
        classify_lines(1, 2)


def test_nilpotent_line_counts_as_mathieu_for_every_variant():
    a = matrix_algebra(2, F2)
    line = span(a, [[0, 1, 0, 0]])  # span{E_12}
    for variant in ALL_VARIANTS:
        assert decide_mathieu(line, variant).is_mathieu


def test_idempotent_free_criterion():
    a3 = matrix_algebra(2, F3)
    assert mathieu_iff_idempotent_free(trace_orthogonal(a3.one()))
    a2 = matrix_algebra(2, F2)
    assert not mathieu_iff_idempotent_free(span(a2, [[1, 0, 0, 0]]))
    # E_12 + E_21 squares to the identity; the scan must agree with decide
    v = span(a2, [[0, 1, 0, 0], [0, 0, 1, 0]])
    assert mathieu_iff_idempotent_free(v) == decide_mathieu(v, Sidedness.TWO_SIDED).is_mathieu
    with pytest.raises(NotProper):
        mathieu_iff_idempotent_free(Subspace.full(a2))

import json

import pytest

from liecap import catalog
from liecap.algebra import (
    LieAlgebra,
    NotAnIdeal,
    NotNilpotent,
    center,
    derived_subalgebra,
    direct_sum,
    dumps,
    is_ideal,
    loads,
    lower_central_series,
    minimal_generator_count,
    nilpotency_class,
    quotient,
    subalgebra_on,
    transform,
    upper_central_series,
    validate,
)
from liecap.linalg import QQ, Matrix, Subspace


def build(text):
    return catalog.build(catalog.parse_key(text)).algebra


class TestValidate:
    def test_abelian_ok(self):
        assert validate(build("A4")).ok

    def test_catalog_entries_ok(self):
        for dim in range(1, 7):
            for key in catalog.expand_keys(dim):
                assert validate(catalog.build(key).algebra).ok, str(key)

    def test_jacobi_violation_located(self):
        # [x1,x2]=x3, [x1,x3]=x1: the Jacobi sum on (1,2,3) leaves +x3
        bad = LieAlgebra(QQ, 3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
        report = validate(bad)
        assert not report.ok
        i, j, k, residual = report.first_failure()
        assert (i, j, k) == (0, 1, 2)
        assert residual


class TestBracket:
    def test_alternating(self):
        L = build("L5_6")
        v = [1, 2, -3, 5, 7]
        assert all(c == 0 for c in L.bracket(v, v))

    def test_heisenberg_bracket(self):
        L = build("L3_2")
        assert L.bracket([1, 0, 0], [0, 1, 0]) == (0, 0, 1)

    def test_l43_bracket(self):
        L = build("L4_3")
        assert L.bracket([1, 0, 0, 0], [0, 0, 1, 0]) == (0, 0, 0, 1)

    def test_bilinear(self):
        L = build("L6_14")
        u, v, w = [1, 0, 2, 0, 0, 0], [0, 1, 0, 0, 3, 0], [0, 0, 1, 1, 0, 0]
        uv = L.bracket(u, v)
        uw = L.bracket(u, w)
        vw = [a + b for a, b in zip(v, w)]
        assert L.bracket(u, vw) == tuple(a + b for a, b in zip(uv, uw))


class TestDirectSum:
    def test_abelian_sum(self):
        s = direct_sum(build("A2"), build("A3"))
        assert s.dim == 5 and s.is_abelian()

    def test_h1_plus_a1_is_l42(self):
        s = direct_sum(build("H1"), build("A1"))
        assert s.table_key() == build("L4_2").table_key()

    def test_l58_plus_a1(self):
        # hand table concatenation: same brackets inside a dim-6 ambient
        s = direct_sum(build("L5_8"), build("A1"))
        assert s.dim == 6
        assert derived_subalgebra(s).dim == 2
        expected = LieAlgebra(QQ, 6, {(0, 1): {3: 1}, (0, 2): {4: 1}})
        assert s.table_key() == expected.table_key()


class TestSeries:
    def test_h2_derived_equals_center(self):
        L = build("L5_4")
        d = derived_subalgebra(L)
        z = center(L)
        assert d.dim == 1 and z.space == d.space

    def test_class_l618(self):
        # chain x3, x4, x5, x6 gives class 5
        assert nilpotency_class(build("L6_18")) == 5

    def test_center_of_abelian(self):
        L = build("A4")
        assert center(L).dim == 4

    def test_lcs_strict_descent(self):
        for dim in range(1, 7):
            for key in catalog.expand_keys(dim):
                series = lower_central_series(catalog.build(key).algebra)
                dims = [s.dim for s in series]
                assert dims[-1] == 0 or len(dims) == 1
                assert all(a > b for a, b in zip(dims, dims[1:]))

    def test_center_contains_last_term(self):
        for key in catalog.expand_keys(6):
            L = catalog.build(key).algebra
            series = lower_central_series(L)
            if len(series) >= 2:
                last = series[-2]  # gamma_c, the last nonzero term
                assert center(L).space.contains_subspace(last.space)

    def test_not_nilpotent_detected(self):
        # [x1,x2]=x2 is solvable, not nilpotent
        L = LieAlgebra(QQ, 2, {(0, 1): {1: 1}})
        assert validate(L).ok
        with pytest.raises(NotNilpotent):
            nilpotency_class(L)

    def test_upper_central_series(self):
        L = build("L4_3")
        ucs = upper_central_series(L)
        assert [s.dim for s in ucs] == [1, 2, 4]


class TestGenerators:
    def test_abelian(self):
        assert minimal_generator_count(build("A5")) == 5

    def test_l610(self):
        assert minimal_generator_count(build("L6_10")) == 4

    def test_heisenberg(self):
        for m in (1, 2, 3):
            assert minimal_generator_count(build(f"H{m}")) == 2 * m


class TestQuotient:
    def test_quotient_by_whole(self):
        L = build("L5_6")
        q, proj = quotient(L, Subspace.full(QQ, 5))
        assert q.dim == 0

    def test_l43_mod_center(self):
        L = build("L4_3")
        q, proj = quotient(L, center(L).space)
        assert q.dim == 3
        assert q.table_key() == build("L3_2").table_key()
        assert proj.is_bracket_preserving()
        assert proj.kernel_space() == center(L).space

    def test_not_an_ideal(self):
        L = build("L4_3")
        with pytest.raises(NotAnIdeal):
            quotient(L, Subspace.from_vectors(QQ, 4, [[1, 0, 0, 0]]))

    def test_l53_quotients_by_central_lines(self):
        # the two pivot lines of Z(L5_3) = <x4, x5> give H(1)+A(1) and L4_3
        L = build("L5_3")
        z = center(L)
        assert z.dim == 2
        q1, _ = quotient(L, Subspace.from_vectors(QQ, 5, [[0, 0, 0, 1, 0]]))
        q2, _ = quotient(L, Subspace.from_vectors(QQ, 5, [[0, 0, 0, 0, 1]]))
        assert q1.table_key() == build("L4_2").table_key()
        assert q2.table_key() == build("L4_3").table_key()

    def test_nested_quotients_compose(self):
        from liecap.recognize import fingerprint
        for text in ("L6_17", "L6_14", "L5_7", "L6_19(e=1)"):
            L = build(text)
            g = lower_central_series(L)
            n_small = g[-2].space   # gamma_c, the last nonzero term
            n_big = g[-3].space
            mid, proj = quotient(L, n_small)
            img = Subspace.from_vectors(QQ, mid.dim,
                                        [proj.apply(v) for v in n_big.basis_vectors()])
            q2, _ = quotient(mid, img)
            direct, _ = quotient(L, n_big)
            assert q2.dim == direct.dim, text
            assert fingerprint(q2).as_tuple() == fingerprint(direct).as_tuple(), text


class TestSubalgebra:
    def test_derived_as_algebra(self):
        L = build("L6_14")
        sub, embed = subalgebra_on(L, derived_subalgebra(L))
        assert sub.dim == 4
        assert embed.is_bracket_preserving()

    def test_ideal_check(self):
        L = build("L4_3")
        assert is_ideal(L, derived_subalgebra(L).space)
        assert not is_ideal(L, Subspace.from_vectors(QQ, 4, [[1, 0, 0, 0]]))


class TestTransform:
    def test_identity(self):
        L = build("L5_9")
        T = Matrix.identity(QQ, 5)
        assert transform(L, T).table_key() == L.table_key()

    def test_scaling_preserves_validity(self):
        L = build("L6_16")
        T = Matrix(QQ, [[2 if i == j else (1 if j == i + 1 else 0)
                         for j in range(6)] for i in range(6)])
        M = transform(L, T)
        assert validate(M).ok

    def test_singular_basis_rejected(self):
        from liecap.linalg import LinalgError
        L = build("L3_2")
        T = Matrix(QQ, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])
        with pytest.raises(LinalgError):
            transform(L, T)


class TestJson:
    def test_round_trip(self):
        for text in ("A3", "H2", "L5_6", "L6_19(e=2)", "L6_14"):
            L = build(text)
            again = loads(dumps(L))
            assert again.dim == L.dim
            assert again.table_key() == L.table_key()
            assert again.labels == L.labels

    def test_schema_shape(self):
        obj = json.loads(dumps(build("L3_2")))
        assert obj["dim"] == 3
        assert obj["field"] == "Q"
        assert obj["brackets"] == [{"i": 1, "j": 2, "out": [{"k": 3, "c": "1"}]}]

    def test_fraction_coefficients(self):
        from fractions import Fraction
        L = LieAlgebra(QQ, 3, {(0, 1): {2: Fraction(1, 2)}})
        again = loads(dumps(L))
        assert again.bracket_basis(0, 1) == {2: Fraction(1, 2)}

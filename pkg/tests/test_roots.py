import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromabounds.chromatic import chromatic_polynomial
from chromabounds.graph import enumerate_labeled_graphs, generate, make_graph
from chromabounds.harness import match_roots
from chromabounds.poly import IntPolynomial
from chromabounds.roots import (RHO_BOUNDS, RhoBoundTable, RootFindingError, RootSet, cauchy_bound,
                                cycle_root_moduli, cycle_roots_closed_form, find_roots,
                                newton_power_sums, rho_upper_bound, squarefree_factors)

X = IntPolynomial.x()


def test_factored_polynomial():
    rs = find_roots(X * (X - 1) ** 2)
    assert sorted(z.real for z in rs.roots) == [0, 1, 1]
    assert rs.rho == 1


def test_c4_roots():
    # (x-1)^3 = -1 gives x - 1 in {-1, e^{+-i pi/3}}
    rs = find_roots(chromatic_polynomial(generate("cycle", 4)))
    expected = [0, 1, 1 + cmath.exp(1j * math.pi / 3), 1 + cmath.exp(-1j * math.pi / 3)]
    assert match_roots(rs.roots, expected) < 1e-12
    assert rs.rho == pytest.approx(math.sqrt(3), abs=1e-12)


def test_c5_rho_is_two():
    assert find_roots(chromatic_polynomial(generate("cycle", 5))).rho == pytest.approx(2, abs=1e-9)


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles_against_closed_form(n):
    rs = find_roots(chromatic_polynomial(generate("cycle", n)))
    assert match_roots(rs.roots, cycle_roots_closed_form(n)) <= 1e-9
    moduli = sorted(abs(z) for z in rs.roots)
    assert max(abs(a - b) for a, b in zip(moduli, sorted(cycle_root_moduli(n)))) <= 1e-9
    if n % 2:
        assert abs(rs.rho - 2) <= 1e-9
    else:
        assert rs.rho < 2


def test_cycle_root_moduli_examples():
    m5 = cycle_root_moduli(5)
    assert max(m5) == pytest.approx(2)
    assert m5[2] == pytest.approx(2)
    m4 = cycle_root_moduli(4)
    assert m4[0] == 0
    assert m4[1:3] == pytest.approx([math.sqrt(3)] * 2)
    assert m4[3] == 1
    assert cycle_roots_closed_form(7)[0] == pytest.approx(0)
    with pytest.raises(ValueError):
        cycle_root_moduli(2)


def test_newton_examples():
    assert newton_power_sums(chromatic_polynomial(generate("complete", 3)), 3) == [3, 5, 9]
    assert newton_power_sums(X ** 5, 6) == [0] * 6
    for n in range(1, 7):
        assert newton_power_sums(X * (X - 1) ** (n - 1), 8) == [n - 1] * 8
    with pytest.raises(ValueError):
        newton_power_sums(2 * X ** 2, 2)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=8), st.integers(1, 12))
def test_newton_against_known_integer_roots(rs, count):
    p = IntPolynomial((1,))
    for r in rs:
        p = p * (X - r)
    assert newton_power_sums(p, count) == [sum(r ** k for r in rs) for k in range(1, count + 1)]


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6),
       st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 4)), max_size=3))
def test_find_roots_recovers_planted_roots(real, pairs):
    p = IntPolynomial((1,))
    planted = []
    for r in real:
        p = p * (X - r)
        planted.append(complex(r))
    for a, b in pairs:  # (x - a)^2 + b^2
        p = p * IntPolynomial((a * a + b * b, -2 * a, 1))
        planted += [complex(a, b), complex(a, -b)]
    rs = find_roots(p)
    assert len(rs.roots) == p.degree
    assert match_roots(rs.roots, planted) < 1e-6
    assert rs.max_residual <= rs.tol
    assert rs.rho <= cauchy_bound(p) + 1e-12


def test_conjugate_symmetry_on_output():
    rs = find_roots(chromatic_polynomial(generate("cycle", 9)))
    nonreal = sorted((z for z in rs.roots if z.imag), key=lambda z: (z.real, z.imag))
    for z in nonreal:
        assert z.conjugate() in rs.roots


def test_power_sums_match_roots_all_graphs_n5():
    seen = set()
    for g in enumerate_labeled_graphs(5):
        p = chromatic_polynomial(g)
        if p.coeffs in seen:
            continue
        seen.add(p.coeffs)
        rs = find_roots(p)
        exact = newton_power_sums(p, 8)
        for k, s in enumerate(exact, 1):
            assert abs(rs.power_sum(k) - s) <= 1e-8 * max(1, abs(s))


def test_rho_below_degree_bound_n5():
    for g in enumerate_labeled_graphs(5):
        if g.m:
            assert find_roots(chromatic_polynomial(g)).rho <= rho_upper_bound(g) + 1e-9


def test_rho_upper_bound_examples():
    assert rho_upper_bound(generate("cycle", 5)) == pytest.approx(7.62)
    assert rho_upper_bound(generate("star", 4)) == pytest.approx(12.75)
    assert rho_upper_bound(generate("empty", 4)) == 0
    assert RHO_BOUNDS.claw_free < RHO_BOUNDS.general
    with pytest.raises(ValueError):
        RhoBoundTable(general=3.0, claw_free=3.81)


def test_squarefree_factors():
    p = X ** 2 * (X - 1) ** 3 * (X ** 2 + 1)
    facs = squarefree_factors(p.coeffs)
    assert [m for _, m in facs] == [1, 2, 3]
    assert [len(f) - 1 for f, _ in facs] == [2, 1, 1]


def test_repeated_complex_roots():
    p = IntPolynomial((1, 0, 1)) ** 3 * (X - 5)
    rs = find_roots(p)
    assert match_roots(rs.roots, [1j] * 3 + [-1j] * 3 + [5]) < 1e-9


def test_degree_zero_rejected():
    with pytest.raises(ValueError):
        find_roots(IntPolynomial((3,)))


def test_rootset_json_roundtrip():
    rs = find_roots(chromatic_polynomial(generate("cycle", 6)))
    back = RootSet.from_dict(__import__("json").loads(rs.to_json()))
    assert back.roots == rs.roots and back.rho == rs.rho


def test_tolerance_failure_raises():
    with pytest.raises(RootFindingError) as info:
        find_roots(chromatic_polynomial(generate("cycle", 7)), tol=1e-30)
    assert info.value.worst_residual > 1e-30


def test_larger_engine_graph_roots():
    g = make_graph(8, [(i, j) for i in range(8) for j in range(i + 1, 8) if (i + j) % 3])
    rs = find_roots(chromatic_polynomial(g))
    assert rs.max_residual <= 1e-10

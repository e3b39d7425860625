import numpy as np
import pytest

from qgroth.cartan import build_cartan
from qgroth.compat import check_compatible
from qgroth.qcluster import (
    MutationError,
    classical_mutate_along,
    cp_add,
    cp_exact_div,
    cp_monomial,
    cp_mul,
    initial_seed,
    mutate,
    mutate_along,
)
from qgroth.quiver import QuiverError, build_slice
from qgroth.qtorus import TorusElement, evaluate_t1, make_key
from qgroth.verify import SL3_GOLDEN, SL3_PATH


@pytest.fixture(scope="module")
def a1():
    return build_cartan("A", 1)


@pytest.fixture(scope="module")
def a2():
    return build_cartan("A", 2)


class TestInitialSeed:
    def test_vars_are_monomials(self, a1):
        seed = initial_seed(a1, build_slice(a1, N=1))
        for v, el in seed.vars.items():
            assert el == TorusElement.monomial(a1, {v: 1})

    def test_compatible_at_construction(self, a2):
        seed = initial_seed(a2, build_slice(a2, N=1))
        rep = check_compatible(
            seed.b_current, seed.lambda_current, seed.slice.exch_rows
        )
        assert rep.ok

    def test_d4_window(self):
        c = build_cartan("D", 4)
        seed = initial_seed(c, build_slice(c, window=(-5, 2)))
        assert len(seed.vars) == 16

    def test_commutation_invariant(self, a1):
        initial_seed(a1, build_slice(a1, N=1)).check_commutation()


class TestQuantumMutate:
    def test_sl2_variable(self, a1):
        seed = mutate(initial_seed(a1, build_slice(a1, N=1)), (1, 0))
        want = TorusElement.monomial(a1, {(1, -2): 1, (1, 0): -1}) + (
            TorusElement.monomial(a1, {(1, 2): 1, (1, 0): -1})
        )
        assert seed.vars[(1, 0)] == want

    def test_involution(self, a2):
        slc = build_slice(a2, window=(-1, 6))
        seed0 = initial_seed(a2, slc)
        seed2 = mutate(mutate(seed0, (1, 2)), (1, 2))
        assert seed2.vars == seed0.vars
        assert np.array_equal(seed2.b_current, seed0.b_current)
        assert np.array_equal(seed2.lambda_current, seed0.lambda_current)

    def test_frozen_rejected(self, a1):
        seed = initial_seed(a1, build_slice(a1, N=1))
        with pytest.raises(QuiverError):
            mutate(seed, (1, 2))

    def test_bar_invariance_along_sl3(self, a2):
        seed = initial_seed(a2, build_slice(a2, window=(-1, 6)))
        for k in SL3_PATH:
            seed = mutate(seed, k)
            assert seed.vars[k].bar() == seed.vars[k]

    def test_commutation_tracked(self, a2):
        seed = mutate_along(
            initial_seed(a2, build_slice(a2, window=(-1, 6))), SL3_PATH[:3]
        )
        seed.check_commutation()

    def test_t1_specialization_matches_classical(self, a2):
        slc = build_slice(a2, window=(-1, 6))
        quantum = mutate_along(initial_seed(a2, slc), SL3_PATH)
        classical = classical_mutate_along(a2, slc, SL3_PATH)
        for v in slc.vertices:
            assert evaluate_t1(quantum.vars[v]) == classical[v]

    def test_positivity_and_parity(self, a2):
        seed = mutate_along(initial_seed(a2, build_slice(a2, window=(-1, 6))), SL3_PATH)
        for el in seed.vars.values():
            for coeff in el.terms.values():
                assert all(n > 0 for n in coeff.values())
                assert len({k % 2 for k in coeff}) == 1

    def test_history(self, a2):
        seed = mutate_along(initial_seed(a2, build_slice(a2, window=(-1, 6))), SL3_PATH)
        assert seed.history == tuple(SL3_PATH)

    def test_empty_path_identity(self, a1):
        seed0 = initial_seed(a1, build_slice(a1, N=1))
        assert mutate_along(seed0, []).vars == seed0.vars


class TestClassicalEngine:
    def test_sl2_baxter_exchange(self, a1):
        slc = build_slice(a1, N=1)
        got = classical_mutate_along(a1, slc, [(1, 0)])[(1, 0)]
        assert got == {
            make_key({(1, -2): 1, (1, 0): -1}): 1,
            make_key({(1, 2): 1, (1, 0): -1}): 1,
        }

    def test_sl3_printed_variables(self, a2):
        slc = build_slice(a2, window=(-1, 6))
        for (step, vertex), monos in SL3_GOLDEN.items():
            got = classical_mutate_along(a2, slc, SL3_PATH[:step])[vertex]
            assert got == {make_key(m): 1 for m in monos}, (step, vertex)

    def test_involution(self, a2):
        slc = build_slice(a2, window=(-1, 6))
        base = classical_mutate_along(a2, slc, [])
        assert classical_mutate_along(a2, slc, [(1, 2), (1, 2)]) == base

    def test_cp_division(self):
        a = cp_monomial({(1, 0): 1}, 2)
        b = cp_add(cp_monomial({(1, 2): 1}), cp_monomial({(1, -2): 1}, 3))
        assert cp_exact_div(cp_mul(a, b), a) == b
        with pytest.raises(MutationError):
            cp_exact_div(cp_add(cp_monomial({(1, 0): 1}), cp_monomial({(1, 2): 1})),
                         cp_add(cp_monomial({(1, 0): 1}), cp_monomial({(1, -2): 1})))

import threading

import pytest
from hypothesis import given, strategies as st

from buraukit.cyclotomic import (CyclotomicInt, cyc_add, cyc_is_one, cyc_is_zero, cyc_mul,
                                 cyc_neg, cyclotomic_poly, divisors, embed_complex,
                                 eval_at_root, euler_phi, reduce_mod_cyclotomic)
from buraukit.errors import TauMismatch
from buraukit.laurent import ONE, T, T_INV, LaurentPoly, eval_complex, poly_from_terms

from oracles import cyclotomic_mobius, root
from strategies import laurent_polys


def C(tau, *coeffs):
    return CyclotomicInt(tau, tuple(coeffs))


class TestCyclotomicPoly:
    @pytest.mark.parametrize("n, expected", [
        (1, {0: -1, 1: 1}),
        (3, {0: 1, 1: 1, 2: 1}),
        (6, {0: 1, 1: -1, 2: 1}),     # Mobius oracle
        (12, {0: 1, 2: -1, 4: 1}),    # Mobius oracle
    ])
    def test_known(self, n, expected):
        assert dict(cyclotomic_poly(n).terms()) == expected

    @pytest.mark.parametrize("n", range(1, 61))
    def test_against_mobius_oracle(self, n):
        assert dict(cyclotomic_poly(n).terms()) == cyclotomic_mobius(n)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cyclotomic_poly(0)

    def test_memo_consistent_across_threads(self):
        seen = []

        def work():
            seen.append(cyclotomic_poly(105))

        threads = [threading.Thread(target=work) for _ in range(8)]
        for th in threads:
            th.start()
        for th in threads:
            th.join()
        assert all(p is seen[0] for p in seen)
        # Phi_105 is the first with a coefficient of absolute value 2
        assert min(seen[0].coeffs) == -2

    def test_helpers(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert [euler_phi(n) for n in (1, 2, 9, 10, 12, 30)] == [1, 1, 6, 4, 4, 8]


class TestReduction:
    @pytest.mark.parametrize("tau", [1, 2, 3, 4, 5, 7, 12, 30])
    def test_x_to_tau_is_one(self, tau):
        assert reduce_mod_cyclotomic(LaurentPoly.monomial(tau), tau).is_one()

    def test_phi3_reduces_to_zero(self):
        assert reduce_mod_cyclotomic(LaurentPoly((1, 1, 1)), 3).is_zero()

    def test_x5_plus_x_mod_phi4(self):
        assert reduce_mod_cyclotomic(poly_from_terms([(5, 1), (1, 1)]), 4) == C(4, 0, 2)

    def test_dense_sequence_input(self):
        assert reduce_mod_cyclotomic([0, 1, 0, 0, 0, 1], 4) == C(4, 0, 2)

    def test_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            reduce_mod_cyclotomic(T_INV, 4)

    def test_length_invariant(self):
        with pytest.raises(ValueError):
            CyclotomicInt(5, (1, 2))


class TestEvalAtRoot:
    def test_one_minus_t15_at_5(self):
        assert eval_at_root(ONE - LaurentPoly.monomial(15), 5).is_zero()

    @pytest.mark.parametrize("tau", [1, 2, 5, 9])
    def test_unit_pair(self, tau):
        assert eval_at_root(T_INV * T, tau).is_one()

    def test_inverse_maps_to_power(self):
        assert eval_at_root(T_INV, 5) == eval_at_root(LaurentPoly.monomial(4), 5)

    @given(laurent_polys(), laurent_polys(), st.integers(1, 30))
    def test_homomorphism(self, p, q, tau):
        assert eval_at_root(p * q, tau) == cyc_mul(eval_at_root(p, tau), eval_at_root(q, tau))
        assert eval_at_root(p + q, tau) == cyc_add(eval_at_root(p, tau), eval_at_root(q, tau))

    @given(laurent_polys(), st.integers(1, 30))
    def test_exact_agrees_with_float(self, p, tau):
        exact = embed_complex(eval_at_root(p, tau))
        assert abs(exact - eval_complex(p, root(tau))) < 1e-9


class TestRingOps:
    def test_inverse_pair(self):
        x = CyclotomicInt.x(5)
        assert cyc_is_one(cyc_mul(x, x ** 4))

    def test_add_neg(self):
        a = C(5, 3, -1, 4, 2)
        assert cyc_is_zero(cyc_add(a, cyc_neg(a)))

    def test_tau4_product(self):
        assert cyc_mul(C(4, 1, 1), C(4, 1, -1)) == C(4, 2, 0)

    def test_tau_mismatch(self):
        with pytest.raises(TauMismatch):
            cyc_add(CyclotomicInt.one(4), CyclotomicInt.one(5))
        with pytest.raises(TauMismatch):
            cyc_mul(CyclotomicInt.one(4), CyclotomicInt.one(5))

    def test_embed(self):
        assert embed_complex(CyclotomicInt.one(7)) == 1
        assert abs(embed_complex(CyclotomicInt.x(4)) - 1j) < 1e-12

    def test_embed_x_plus_x3(self):
        a = C(5, 0, 1, 0, 1)
        z = root(5)
        assert abs(embed_complex(a) - (z + z ** 3)) < 1e-12
        b = C(5, 2, -1, 0, 3)
        assert abs(embed_complex(a * b) - embed_complex(a) * embed_complex(b)) < 1e-9

    @given(laurent_polys(), laurent_polys(), st.integers(2, 30))
    def test_embed_multiplicative(self, p, q, tau):
        a, b = eval_at_root(p, tau), eval_at_root(q, tau)
        assert abs(embed_complex(a * b) - embed_complex(a) * embed_complex(b)) < 1e-9 * max(
            1.0, abs(embed_complex(a)) * abs(embed_complex(b)))

    def test_json(self):
        a = C(5, 1, 0, -2, 7)
        assert a.to_json() == {"tau": 5, "coeffs": [1, 0, -2, 7]}
        assert CyclotomicInt.from_json(a.to_json()) == a

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordkit.bij import cantor_nat, identity, index_swap, invert, omega_sq_collapse, Ord
from ordkit.core import OMEGA, ONE, TWO, ZERO, add, mul, nat, power
from ordkit.errors import BadBase, DomainMismatch, MalformedCNF, OutOfRange, ZeroNotFixed
from ordkit.finsupp import FinSuppFn, cnf_eval, cnf_inv, floor_log, lift_index, lift_value

from conftest import ordinals

w = OMEGA
W2 = power(w, TWO)


def fn(base, bound, *entries):
    return FinSuppFn(base, bound, tuple((nat(i) if isinstance(i, int) else i, nat(v) if isinstance(v, int) else v) for i, v in entries))


class TestFinSuppFn:
    def test_rejects_zero_value(self):
        with pytest.raises(MalformedCNF):
            fn(w, w, (2, 0))

    def test_rejects_index_out_of_bound(self):
        with pytest.raises(MalformedCNF):
            fn(w, nat(3), (3, 1))

    def test_rejects_value_out_of_base(self):
        with pytest.raises(MalformedCNF):
            fn(nat(2), w, (3, 2))

    def test_rejects_increasing_indexes(self):
        with pytest.raises(MalformedCNF):
            fn(w, w, (0, 1), (2, 1))

    def test_call_and_support(self):
        f = fn(w, w, (2, 3), (0, 5))
        assert f(nat(2)) == 3 and f(nat(1)) == 0
        assert f.support == (nat(2), nat(0))


class TestCnfEval:
    def test_empty(self):
        assert cnf_eval(FinSuppFn(w, w)) == ZERO

    def test_omega_base(self):
        assert cnf_eval(fn(w, w, (2, 3), (0, 5))) == add(mul(power(w, TWO), nat(3)), nat(5))

    def test_finite_base(self):
        assert 2**3 + 2**1 == 10
        assert cnf_eval(fn(nat(2), w, (3, 1), (1, 1))) == 10

    def test_sum_order_is_largest_first(self):
        # largest-first keeps the low term; smallest-first would absorb it
        f = fn(w, w, (1, 1), (0, 1))
        assert cnf_eval(f) == w + 1


class TestCnfInv:
    def test_zero(self):
        assert cnf_inv(w, w, ZERO) == FinSuppFn(w, w)

    def test_round_trips_of_eval_examples(self):
        assert cnf_inv(w, w, add(mul(W2, nat(3)), nat(5))) == fn(w, w, (2, 3), (0, 5))
        assert cnf_inv(nat(2), w, nat(10)) == fn(nat(2), w, (3, 1), (1, 1))

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            cnf_inv(nat(2), nat(3), nat(8))
        with pytest.raises(OutOfRange):
            cnf_inv(w, w, power(w, w))

    def test_bad_base(self):
        with pytest.raises(BadBase):
            cnf_inv(ZERO, w, ZERO)

    def test_base_one(self):
        assert cnf_inv(ONE, w, ZERO) == FinSuppFn(ONE, w)
        assert cnf_eval(FinSuppFn(ONE, w)) == ZERO
        with pytest.raises(OutOfRange):
            cnf_inv(ONE, w, ONE)

    def test_finite_exhaustive(self):
        # base 3, bound 4: every z < 81 is its own base-3 expansion
        for z in range(81):
            f = cnf_inv(nat(3), nat(4), nat(z))
            digits = {int(i): int(v) for i, v in f.entries}
            assert sum(v * 3**i for i, v in digits.items()) == z
            assert all(0 < v < 3 for v in digits.values())

    @given(ordinals(2, 3, 6))
    def test_round_trip_omega_base(self, z):
        beta = w * 2 + 3
        if not z < power(w, beta):
            return
        assert cnf_eval(cnf_inv(w, beta, z)) == z

    @given(ordinals(2, 3, 6), st.sampled_from([nat(2), nat(5), w, W2, w + 1]))
    def test_floor_log(self, z, alpha):
        if not z:
            return
        g = floor_log(alpha, z)
        assert power(alpha, g) <= z < power(alpha, add(g, ONE))


class TestLifts:
    def test_identity_index(self):
        f = fn(w, w, (2, 3), (0, 5))
        assert lift_index(identity(Ord(w)), f) == f

    def test_empty(self):
        assert lift_index(index_swap(w), FinSuppFn(w, w * 2)) == FinSuppFn(w, w)
        assert lift_value(omega_sq_collapse(), FinSuppFn(W2, nat(7))) == FinSuppFn(w, nat(7))

    def test_index_swap_example(self):
        # index_swap(w) sends w+1 to 2*1 + 1 = 3; its codomain is 2*w = w
        f = FinSuppFn(w, w * 2, ((w + 1, nat(2)),))
        assert lift_index(index_swap(w), f) == FinSuppFn(w, w, ((nat(3), nat(2)),))

    def test_index_resorted(self):
        iota = index_swap(w)
        f = FinSuppFn(w, w * 2, ((w, nat(1)), (nat(5), nat(1))))
        g = lift_index(iota, f)
        # w -> 1, 5 -> 10
        assert g.entries == ((nat(10), nat(1)), (nat(1), nat(1)))
        assert lift_index(invert(iota), g) == f

    def test_value_example(self):
        f = FinSuppFn(W2, w, ((nat(5), w + 1),))
        assert cantor_nat().forward((ONE, ONE)) == 4
        assert lift_value(omega_sq_collapse(), f) == FinSuppFn(w, w, ((nat(5), nat(4)),))

    def test_identity_value(self):
        f = fn(w, w, (2, 3))
        assert lift_value(identity(Ord(w)), f) == f

    def test_domain_mismatch(self):
        with pytest.raises(DomainMismatch):
            lift_index(index_swap(w), fn(w, w, (2, 3)))
        with pytest.raises(DomainMismatch):
            lift_value(omega_sq_collapse(), fn(w, w, (2, 3)))

    def test_zero_not_fixed(self):
        from ordkit.bij import add_commute

        shifted = add_commute(nat(3), nat(4))  # sends 0 to 4
        with pytest.raises(ZeroNotFixed):
            lift_value(shifted, fn(nat(7), w, (1, 2)))

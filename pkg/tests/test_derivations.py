import pytest

from hekdv.curve import CurveParams
from hekdv.derivations import make_derivation, psi1, psi2
from hekdv.errors import ConfigError
from hekdv.poly import MPoly, variables
from hekdv.symsq import SymSqField

X1, Y1, X2, Y2 = variables("X1", "Y1", "X2", "Y2")


@pytest.fixture(scope="module")
def f3():
    return SymSqField(CurveParams.symbolic(3))


@pytest.fixture(scope="module")
def f2():
    return SymSqField(CurveParams.symbolic(2))


@pytest.fixture(scope="module")
def f32():
    return SymSqField(CurveParams.symbolic(3).specialize(y12=0, y14=0))


class TestImages:
    def test_d1(self, f3):
        D1 = make_derivation(f3, "D1")
        assert D1(f3.elem(X1)) == f3.elem(2 * Y1)
        assert D1(f3.elem(X2)).is_zero

    def test_t1_printed_images(self, f3):
        T1 = make_derivation(f3, "T1")
        dx = X1 - X2
        assert T1.images["X1"] == f3.elem(-2 * Y1, X1 * dx)
        assert T1.images["Y1"] == f3.elem(-1 * f3.dQ1, X1 * dx)
        assert T1.images["X2"] == f3.elem(2 * Y2, X2 * dx)
        assert T1.images["Y2"] == f3.elem(f3.dQ2, X2 * dx)

    def test_t3_printed_images(self, f3):
        T3 = make_derivation(f3, "T3")
        dx = X1 - X2
        assert T3.images["X1"] == f3.elem(2 * X2 * Y1, X1 * dx)
        assert T3.images["Y1"] == f3.elem(X2 * f3.dQ1, X1 * dx)
        assert T3.images["X2"] == f3.elem(-2 * X1 * Y2, X2 * dx)
        assert T3.images["Y2"] == f3.elem(-1 * X1 * f3.dQ2, X2 * dx)

    def test_genus2_operator_display(self, f2):
        # expanding the displayed total-differential form on the generators:
        # L1 sends X1 to -2Y1/(X1-X2) and Y1 to -Q'(X1)/(X1-X2)
        L1 = make_derivation(f2, "L1")
        dx = X1 - X2
        assert L1(f2.elem(X1)) == f2.elem(-2 * Y1, dx)
        assert L1(f2.elem(Y1)) == f2.elem(-1 * f2.dQ1, dx)
        L3 = make_derivation(f2, "L3")
        assert L3(f2.elem(X1)) == f2.elem(2 * X2 * Y1, dx)
        assert L3(f2.elem(Y2)) == f2.elem(-1 * X1 * f2.dQ2, dx)

    def test_t_flows_need_genus3(self, f2):
        with pytest.raises(ConfigError):
            make_derivation(f2, "T1")

    def test_unknown_name(self, f3):
        with pytest.raises(ConfigError):
            make_derivation(f3, "L1")   # genus-3 names are L3, L5


class TestStructure:
    @pytest.mark.parametrize("name", ["D1", "D2", "L3", "L5", "T1", "T3"])
    def test_curve_compatibility(self, f3, name):
        assert make_derivation(f3, name).check_compatible()

    def test_commutators_vanish(self, f3):
        L3 = make_derivation(f3, "L3")
        L5 = make_derivation(f3, "L5")
        T1 = make_derivation(f3, "T1")
        T3 = make_derivation(f3, "T3")
        for v in f3.gens().values():
            assert L3.commutator_on(L5, v).is_zero
            assert T1.commutator_on(T3, v).is_zero

    def test_derive_on_abcd(self, f3):
        L3 = make_derivation(f3, "L3")
        T1 = make_derivation(f3, "T1")
        ab = f3.abcd()
        assert L3(ab["a"]) == -1 * ab["c"]
        want = (ab["a"] * ab["c"] - ab["d"]) / (ab["b"] - ab["a"] ** 2)
        assert T1(ab["a"]) == want


class TestTransfer:
    def test_round_trips(self, f2, f32):
        for v in ("X1", "Y1", "X2", "Y2"):
            e2 = f2.elem(MPoly.var(v))
            assert psi2(psi1(e2, f32), f2) == e2
            e3 = f32.elem(MPoly.var(v))
            assert psi1(psi2(e3, f2), f32) == e3

    def test_c_image(self, f2, f32):
        # the c-generator maps to (ac - d)/(a^2 - b) on the degenerate square
        ab2 = f2.abcd()
        ab3 = f32.abcd()
        lhs = psi1(ab2["c"], f32)
        rhs = (ab3["a"] * ab3["c"] - ab3["d"]) / (ab3["a"] ** 2 - ab3["b"])
        assert lhs == rhs

    def test_x_fixed(self, f2, f32):
        assert psi1(f2.elem(X1), f32) == f32.elem(X1)

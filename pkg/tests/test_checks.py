import pytest

from norbit.orbits import orbit
from norbit.verify import (
    OracleConfig,
    check_collapse,
    check_duality,
    check_prop55,
    check_richardson_typeA,
    check_stage_independence,
)
from norbit.verify.checks import InductionData, Unsupported, sweep_prop55_typeA


class TestSweeps:
    @pytest.mark.parametrize("t,size", [("B", 11), ("C", 10), ("D", 10), ("A", 8)])
    def test_collapse(self, t, size):
        rep = check_collapse(t, size)
        assert rep.passed and rep.details["cases"] > 0

    def test_collapse_wrong_parity_is_empty(self):
        assert check_collapse("B", 10).details["cases"] == 0

    @pytest.mark.parametrize("t", "BCD")
    def test_stage_independence(self, t):
        rep = check_stage_independence(t, 4, 4)
        assert rep.passed, rep.witness

    @pytest.mark.parametrize("t", "ABCD")
    def test_duality(self, t):
        rep = check_duality(t, 4)
        assert rep.passed, rep.witness
        assert rep.details["square_is_identity"]

    def test_report_json(self):
        d = check_duality("C", 2).to_json()
        assert {"case", "status", "witness"} <= set(d)


class TestRichardson:
    def test_gl3_minimal(self):
        rep = check_richardson_typeA(orbit("A", 2, (2, 1)))
        assert rep.status == "pass"
        adj = [r for r in rep.details["compared"] if r["mu"] == ["1", "0", "-1"]]
        assert adj == [{"mu": ["1", "0", "-1"], "induced": 1, "oracle": 1, "degrees": {"1": 1}}]

    def test_gl2_principal(self):
        rep = check_richardson_typeA(orbit("A", 1, (2,)))
        assert rep.status == "pass"
        assert rep.details["hilbert"] == [1, 3, 5, 7]

    def test_zero_orbit(self):
        assert check_richardson_typeA(orbit("A", 2, (1, 1, 1))).status == "pass"

    def test_truncation_is_inconclusive(self):
        # the principal gl(3) ring has copies above degree 3
        rep = check_richardson_typeA(orbit("A", 2, (3,)))
        assert rep.status == "inconclusive"
        assert all(r["oracle"] < r["induced"] for r in rep.witness)

    def test_refuses_large(self):
        with pytest.raises(Unsupported):
            check_richardson_typeA(orbit("A", 3, (4,)))


class TestProp55:
    def test_principal_from_torus(self):
        rep = check_prop55(InductionData("A", 2, ((1,), (1,), (1,))))
        assert rep.passed and rep.details["all_equal"]
        assert rep.details["orbit"]["partition"] == [3]

    def test_trivial_mu(self):
        rep = check_prop55(InductionData("A", 3, ((2,), (1, 1))))
        first = rep.details["rows"][0]
        assert first["mu"] == ["0"] * 4 and first["lhs"] == first["rhs"] == 1

    def test_sweep_small(self):
        rep = sweep_prop55_typeA(3)
        assert rep.passed and rep.details["cases"] > 10

    def test_unsupported(self):
        with pytest.raises(Unsupported):
            check_prop55(InductionData("A", 1, ((1,), (1,)), psi="sign"))
        with pytest.raises(Unsupported):
            check_prop55(InductionData("B", 3, ((1,),), orbit("B", 2, (3, 1, 1))))

    def test_numeric_branch_reports(self):
        data = InductionData("B", 2, ((1, 1),), orbit("B", 0, (1,)))
        rep = check_prop55(data, cfg=OracleConfig(degree=3))
        assert rep.status == "info"
        assert rep.details["degree"] == 3
        assert rep.details["orbit"]["partition"] == [3, 1, 1]
        assert "bound_holds" in rep.details

import pytest
from hypothesis import given, strategies as st

from screencurve import ParadoxScenario, TestCharacteristics, ppv, run, step

COVID = TestCharacteristics(0.95, 0.99)


def scenario(**kw):
    base = dict(test=COVID, initial_prevalence=0.5, treatment_efficacy=0.5,
                screening_coverage=0.5, rounds=20)
    base.update(kw)
    return ParadoxScenario(**base)


class TestStep:
    def test_full_treatment(self):
        s = scenario(treatment_efficacy=1.0, screening_coverage=1.0)
        assert step(s, 0.5) == pytest.approx(0.025, rel=1e-14)

    def test_no_treatment(self):
        assert step(scenario(treatment_efficacy=0.0), 0.37) == 0.37

    def test_absorbing_zero(self):
        assert step(scenario(), 0.0) == 0.0

    @given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
    def test_never_increases(self, a, eff, cov, phi):
        s = scenario(test=TestCharacteristics(a, 0.9), treatment_efficacy=eff,
                     screening_coverage=cov)
        nxt = step(s, phi)
        assert 0 <= nxt <= phi
        if a * eff * cov == 0:
            assert nxt == phi


class TestRun:
    def test_covid_crossing(self):
        traj = run(scenario())
        assert len(traj.series) == 21
        assert traj.threshold == pytest.approx(0.09305, abs=1e-5)
        assert traj.crossing_round == 7
        assert 0.5 * 0.7625 ** 6 == pytest.approx(0.09827, abs=1e-5)
        assert 0.5 * 0.7625 ** 7 == pytest.approx(0.07493, abs=1e-5)

    def test_geometric_closed_form(self):
        s = scenario()
        for p in run(s).series:
            assert p.prevalence == pytest.approx(0.5 * (1 - s.removal_rate) ** p.round, abs=1e-12)
            assert p.ppv == ppv(COVID, p.prevalence)

    def test_monotone(self):
        traj = run(scenario(rounds=60))
        for p, q in zip(traj.series, traj.series[1:]):
            assert q.prevalence < p.prevalence
            assert q.ppv < p.ppv

    def test_crossing_consistency(self):
        traj = run(scenario(rounds=40, treatment_efficacy=0.2))
        k = traj.crossing_round
        assert k is not None
        assert all(p.prevalence >= traj.threshold for p in traj.series[:k])
        assert traj.series[k].prevalence < traj.threshold

    def test_no_treatment_is_flat(self):
        traj = run(scenario(treatment_efficacy=0.0))
        assert traj.crossing_round is None
        assert {p.prevalence for p in traj.series} == {0.5}

    def test_identity_test(self):
        traj = run(scenario(test=TestCharacteristics(0.5, 0.5)))
        assert traj.threshold is None and traj.crossing_round is None
        for p in traj.series:
            assert p.ppv == pytest.approx(p.prevalence, abs=1e-15)

    def test_starts_below_threshold(self):
        assert run(scenario(initial_prevalence=0.05)).crossing_round == 0

    def test_single_round(self):
        assert len(run(scenario(rounds=1)).series) == 2

    def test_deterministic(self):
        assert run(scenario()) == run(scenario())

    @pytest.mark.parametrize("kw", [
        dict(initial_prevalence=0.0), dict(initial_prevalence=1.0),
        dict(treatment_efficacy=1.5), dict(screening_coverage=-0.1),
        dict(rounds=0), dict(rounds=2.0),
    ])
    def test_validation(self, kw):
        with pytest.raises(ValueError):
            scenario(**kw)

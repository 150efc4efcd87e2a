import io
import json
from fractions import Fraction

import pytest

from kcritical import harness
from kcritical.errors import CapacityError, ParameterError, PreconditionError
from kcritical.families import ExtremalParams, build_G_star
from kcritical.graph import build_graph, complete
from kcritical.harness import (
    CONSISTENT,
    COUNTEREXAMPLE,
    EXTREMAL,
    InstanceVerdict,
    classify_instance,
    replay,
    star_hub,
    sweep,
    thresholds,
    tightness,
)


class TestThresholds:
    def test_examples(self):
        r = thresholds(1, 1, 2)
        assert r.thm12_terms == (3, 10) and r.n_min_thm12 == 10 and r.smallest_n_thm12 == 11
        assert r.thm11_terms == (Fraction(28, 6), 12) and r.n_min_thm11 == 12 and r.smallest_n_thm11 == 13
        r = thresholds(3, 1, 2)
        assert r.n_min_thm11 == max(r.thm11_terms)
        assert r.smallest_n_thm11 % 2 == 1 and r.smallest_n_thm11 >= r.n_min_thm11

    def test_rejects(self):
        for args in [(2, 1, 2), (1, 0, 2), (1, 2, 2)]:
            with pytest.raises(ParameterError):
                thresholds(*args)

    def test_monotone_in_delta(self):
        for b in (1, 3, 5):
            for k in (1, 2, 3):
                rows = [thresholds(b, k, d) for d in range(k + 1, k + 9)]
                for lo, hi in zip(rows, rows[1:]):
                    assert hi.n_min_thm12 > lo.n_min_thm12
                    assert hi.n_min_thm11 >= lo.n_min_thm11
                    assert hi.smallest_n_thm12 >= lo.smallest_n_thm12

    def test_json(self):
        d = thresholds(1, 1, 2).to_json()
        assert d["smallestNThm11"] == 13 and d["thm11Terms"] == ["14/3", "12"]


class TestClassify:
    def test_star_size_mode(self):
        g = build_G_star(ExtremalParams(13, 1, 1, 2))
        v = classify_instance(g, 1, 1, "size")
        assert v.classification == EXTREMAL
        assert v.e == v.e_star == 59 and v.critical is False
        assert v.certificate.witness == (0, 1) and v.certificate.deficiency == 2
        assert v.hypotheses_hold

    def test_star_spectral_mode(self):
        g = build_G_star(ExtremalParams(11, 1, 1, 2))
        v = classify_instance(g, 1, 1, "spectral")
        assert v.classification == EXTREMAL
        assert abs(v.rho - v.rho_star) <= 1e-8

    def test_complete_graph_consistent(self):
        v = classify_instance(complete(13), 1, 1, "size")
        assert v.classification == CONSISTENT and v.critical is True
        assert v.delta == 12 and not v.hypotheses["order"]

    def test_relabelled_star_still_recognised(self):
        g = build_G_star(ExtremalParams(13, 1, 1, 2))
        perm = list(range(13))[::-1]
        h = g.relabel(perm)
        assert sorted(star_hub(h, 1, 1)) == [11, 12]
        assert classify_instance(h, 1, 1).classification == EXTREMAL

    def test_near_star_not_flagged(self):
        g = build_G_star(ExtremalParams(13, 1, 1, 2))
        edges = g.edges()
        edges.remove((2, 3))
        assert star_hub(build_graph(13, edges), 1, 1) is None

    def test_capacity(self):
        g = build_G_star(ExtremalParams(25, 1, 1, 2))
        # extremal: the hub witness avoids enumeration
        assert classify_instance(g, 1, 1).classification == EXTREMAL
        edges = set(g.edges()) | {(2, 23)}
        with pytest.raises(CapacityError):
            classify_instance(build_graph(25, edges), 1, 1)

    def test_bad_mode(self):
        with pytest.raises(ParameterError):
            classify_instance(complete(4), 1, 1, "other")

    def test_json_replay(self):
        g = build_G_star(ExtremalParams(13, 1, 1, 2))
        v = classify_instance(g, 1, 1, "spectral")
        back = InstanceVerdict.from_json(v.dumps())
        assert back == v
        assert replay(v.dumps()) == v
        assert json.loads(v.dumps())["certificate"]["witness"] == [0, 1]


class TestTightness:
    def test_grid(self):
        for b in (1, 3):
            for k in (1, 2):
                for d in range(k + 1, k + 4):
                    for mode in ("size", "spectral"):
                        t = tightness(b, k, d, mode)
                        assert t["classification"] == EXTREMAL
                        assert t["edgesEqual"] and t["hubDeficiency"] == 2
                        if mode == "spectral":
                            assert t["rhoGap"] <= 1e-8


class TestSweep:
    def test_zero_samples(self):
        assert sweep(1, 1, 2, 13, "size", 0, 42) == []

    def test_deterministic(self):
        a = sweep(1, 1, 2, 13, "size", 20, 5)
        b = sweep(1, 1, 2, 13, "size", 20, 5)
        assert [v.dumps() for v in a] == [v.dumps() for v in b]
        assert [v.graph6 for v in a] == sorted(v.graph6 for v in a)

    def test_samples_meet_conditions(self):
        for mode, n in (("size", 13), ("spectral", 11)):
            for v in sweep(1, 1, 2, n, mode, 40, 3):
                assert v.hypotheses_hold and v.bound_holds
                assert v.classification != COUNTEREXAMPLE

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            sweep(1, 1, 2, 11, "size", 5, 1)
        with pytest.raises(PreconditionError):
            sweep(1, 1, 2, 14, "size", 5, 1)
        with pytest.raises(CapacityError):
            sweep(1, 1, 2, 23, "size", 5, 1)

    def test_reports(self):
        vs = sweep(1, 1, 2, 11, "spectral", 10, 9)
        counts = harness.summary(vs)
        assert sum(counts.values()) == 10
        buf = io.StringIO()
        harness.write_jsonl(vs, buf)
        lines = buf.getvalue().splitlines()
        assert [InstanceVerdict.from_json(ln) for ln in lines] == vs
        csv = harness.summary_csv([{"mode": "spectral", "b": 1, "k": 1, "delta": 2, "n": 11,
                                    "samples": 10, **counts}])
        assert csv.splitlines()[0].startswith("mode,b,k,delta,n,samples")

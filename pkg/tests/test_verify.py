"""The self-check registry: coverage, selection, determinism."""

import json

import pytest

from lacunary import verify

EXPECTED_PREFIXES = ("core.", "bits.", "dyadic.", "contfrac.", "stern.",
                     "qseries.", "automaton.", "cli.")


class TestRegistry:
    def test_names_unique_and_prefixed(self):
        names = [name for name, _ in verify.CHECKS]
        assert len(names) == len(set(names))
        for name in names:
            assert name.startswith(EXPECTED_PREFIXES), name

    def test_every_module_area_covered(self):
        names = {name.split(".")[0] for name, _ in verify.CHECKS}
        assert names == {p.rstrip(".") for p in EXPECTED_PREFIXES}

    def test_registry_size(self):
        assert len(verify.CHECKS) == 44


class TestRunChecks:
    def test_selection_keeps_canonical_order(self):
        picked = ["stern.carlitz-identity", "core.ring-axioms"]
        results = verify.run_checks(names=picked)
        assert [r.name for r in results] == ["core.ring-axioms", "stern.carlitz-identity"]
        assert all(r.ok for r in results)

    def test_unknown_name(self):
        with pytest.raises(KeyError, match="unknown check names"):
            verify.run_checks(names=["core.ring-axioms", "nope.missing"])

    def test_unknown_level(self):
        with pytest.raises(ValueError, match="unknown level"):
            verify.run_checks(level="exhaustive")

    def test_seed_determinism(self):
        picked = ["dyadic.digit-lemma-iv", "qseries.support-aperiodic"]
        a = verify.run_checks(seed=11, names=picked)
        b = verify.run_checks(seed=11, names=picked)
        assert [(r.name, r.ok, r.detail) for r in a] == [(r.name, r.ok, r.detail) for r in b]

    def test_cheap_subset_green(self):
        picked = [
            "core.reduce-mod2-homomorphism",
            "bits.lucas-support-count",
            "dyadic.roundtrip-canonical",
            "contfrac.determinant-identity",
            "stern.extended-doubling",
            "qseries.term-count",
            "automaton.padding-stability",
            "cli.deterministic-output",
        ]
        results = verify.run_checks(names=picked)
        assert all(r.ok for r in results), [r.name for r in results if not r.ok]
        assert all(r.seconds >= 0 for r in results)
        assert all(r.detail for r in results)


class TestRender:
    def test_text_report(self):
        results = verify.run_checks(names=["core.ring-axioms"])
        text = verify.render_report(results)
        assert "PASS" in text and "1/1 checks passed" in text

    def test_json_report(self):
        results = verify.run_checks(names=["core.ring-axioms"])
        obj = json.loads(verify.render_report(results, as_json=True))
        assert obj["passed"] == 1 and obj["failed"] == 0
        assert obj["checks"][0]["ok"] is True

    def test_failure_rendering(self):
        failed = [verify.CheckResult("core.ring-axioms", False, "boom", 0.0)]
        text = verify.render_report(failed)
        assert "FAIL" in text and "0/1 checks passed" in text

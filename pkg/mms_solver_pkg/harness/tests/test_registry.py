import pytest

from ..presets import THEOREM_PRESETS
from ..registry import CheckEntry, REFERENCES, REGISTRY, RUN_CHECK_IDS
from ..registry import audit_registry, entries_by_id, entries_for
from ..suite import Suite


@pytest.mark.harness
class TestRegistry:
    def test_audit_passes(self):
        audit_registry()

    def test_every_reference_has_a_check(self):
        covered = {entry.reference for entry in REGISTRY}
        assert covered == set(REFERENCES)

    def test_lemma_suite_covers_lemma_references(self):
        lemma_refs = {entry.reference for entry in entries_for(Suite.LEMMAS)}
        for reference in ("normalizing-constant", "operator-equivalence",
                          "pv-quadrature", "far-field-decay",
                          "interpolation-bound", "modulus-transfer",
                          "strict-modulus-fit", "gradient-strict-bound",
                          "touching-derivatives", "dissipation-inequality",
                          "tail-bound"):
            assert reference in lemma_refs

    def test_all_runs_everything_in_order(self):
        assert entries_for(Suite.ALL) == list(REGISTRY)

    @pytest.mark.parametrize("suite", [Suite.LEMMAS, Suite.KERNEL,
                                       Suite.PICARD, Suite.EVOLVE,
                                       Suite.THEOREM12])
    def test_suites_nonempty_and_ordered(self, suite: Suite):
        entries = entries_for(suite)
        assert entries
        positions = [REGISTRY.index(entry) for entry in entries]
        assert positions == sorted(positions)

    def test_theorem_suite_has_every_preset(self):
        ids = {entry.check_id for entry in entries_for(Suite.THEOREM12)}
        for preset in THEOREM_PRESETS:
            for prefix in ("dissipation", "gradient_bound",
                           "no_breakthrough"):
                assert f"{prefix}_{preset.name}" in ids
        assert "gradient_bound_configured" in ids

    def test_preset_names_unique(self):
        names = [preset.name for preset in THEOREM_PRESETS]
        assert len(set(names)) == len(names) == 6

    def test_entries_by_id(self):
        entries = entries_by_id(RUN_CHECK_IDS)
        assert {entry.check_id for entry in entries} == set(RUN_CHECK_IDS)

    def test_entries_by_id_missing(self):
        with pytest.raises(KeyError, match="no_such_check"):
            entries_by_id(["no_such_check"])

    def test_duplicate_ids(self, toy_registry, toy_references):
        registry = toy_registry + (toy_registry[0],)
        with pytest.raises(AssertionError, match="duplicate"):
            audit_registry(registry, toy_references)

    def test_unknown_reference(self, toy_registry, toy_references):
        entry = CheckEntry("extra", "ref-z", (Suite.KERNEL,),
                           toy_registry[0].func)
        with pytest.raises(AssertionError, match="unknown references"):
            audit_registry(toy_registry + (entry,), toy_references)

    def test_uncovered_reference(self, toy_registry, toy_references):
        with pytest.raises(AssertionError, match="without a check"):
            audit_registry(toy_registry, toy_references + ("ref-d",))

    def test_entry_without_suite(self, toy_registry, toy_references):
        entry = CheckEntry("lonely", "ref-a", (), toy_registry[0].func)
        with pytest.raises(AssertionError, match="no suite"):
            audit_registry(toy_registry + (entry,), toy_references)

from __future__ import annotations

import time

import pytest
from hypothesis import given, strategies as st

from candle.catalog import FacetId
from candle.errors import ConfigError
from candle.facetclf import (
    ClassifierConfig,
    classify,
    classify_all_facets,
    counter_probabilities,
    entail_probability,
    gate,
)

from .oracles import eq1_gate


class ScriptedNli:
    """Provider stub that answers from a fixed hypothesis -> probability map."""

    def __init__(self, table):
        self.table = table
        self.calls = []

    def entail(self, premise, hypotheses):
        self.calls.append((premise, tuple(hypotheses)))
        return [self.table[h] for h in hypotheses]


FOOD = FacetId("food", "This text is about food")
DRINKS = FacetId("drinks", "This text is about drinks")


def scripted(p_food=0.0, politics=0.0, business=0.0, **extra):
    table = {
        "This text is about food": p_food,
        "This text is about politics": politics,
        "This text is about business": business,
    }
    table.update(extra)
    return ScriptedNli(table)


class TestEntailProbability:
    def test_self_entailment_high(self, providers):
        text = "Beer is a drink."
        assert entail_probability(text, text, providers.nli) >= 0.5

    def test_paper_drinks_sentence_accepted(self, providers):
        decision = classify(
            "German October festivals are a celebration of beer and fun",
            "d:0",
            DRINKS,
            ClassifierConfig(),
            providers.nli,
        )
        assert decision.p_facet >= 0.5
        assert decision.accepted

    def test_deterministic(self, providers):
        premise = "Monks wear robes during prayer ceremonies."
        first = [entail_probability(premise, h.hypothesis_text, providers.nli) for h in (FOOD, DRINKS)]
        second = [entail_probability(premise, h.hypothesis_text, providers.nli) for h in (FOOD, DRINKS)]
        assert first == second

    def test_out_of_range_provider_rejected(self):
        with pytest.raises(ValueError):
            entail_probability("x", "h", ScriptedNli({"h": 1.5}))


class TestClassifyBoundaries:
    def test_rho_plus_inclusive(self):
        decision = classify("s", "d:0", FOOD, ClassifierConfig(), scripted(0.5, 0.1, 0.2))
        assert decision.accepted

    def test_counter_veto_exclusive_above(self):
        decision = classify("s", "d:0", FOOD, ClassifierConfig(), scripted(0.9, 0.31, 0.0))
        assert not decision.accepted

    def test_counter_boundary_accepts(self):
        decision = classify("s", "d:0", FOOD, ClassifierConfig(), scripted(0.5, 0.3, 0.3))
        assert decision.accepted

    def test_no_counter_labels_reduces_to_threshold(self):
        config = ClassifierConfig(counter_labels=())
        assert classify("s", "d:0", FOOD, config, scripted(0.5)).accepted
        assert not classify("s", "d:0", FOOD, config, scripted(0.49)).accepted

    def test_invalid_config_rejected(self):
        with pytest.raises(ConfigError):
            ClassifierConfig(rho_plus=1.01)
        with pytest.raises(ConfigError):
            ClassifierConfig(rho_minus=-0.1)


class TestGridOracle:
    def test_gate_matches_direct_eq1_evaluation_on_full_grid(self):
        config = ClassifierConfig()
        grid = [round(0.1 * i, 1) for i in range(11)]
        start = time.monotonic()
        checked = 0
        for p in grid:
            for politics in grid:
                for business in grid:
                    counters = {"politics": politics, "business": business}
                    expected = eq1_gate(p, counters, 0.5, 0.3)
                    assert gate(p, counters, config) == expected
                    checked += 1
        assert checked == 1331
        assert time.monotonic() - start < 1.0


class TestClassifyAllFacets:
    def test_multiple_facets_accepted(self, catalog):
        nli = scripted(0.8, 0.1, 0.1, **{"This text is about drinks": 0.7,
                                          "This text is about clothing": 0.1,
                                          "This text is about rituals": 0.1,
                                          "This text is about traditions": 0.1})
        domain = catalog.domains["geography.country"]
        decisions = classify_all_facets("s", "d:0", domain, ClassifierConfig(), nli)
        accepted = {d.facet for d in decisions if d.accepted}
        assert accepted == {"food", "drinks"}

    def test_counters_computed_once_per_sentence(self, catalog):
        nli = scripted(0.8, 0.1, 0.1, **{"This text is about drinks": 0.7,
                                          "This text is about clothing": 0.1,
                                          "This text is about rituals": 0.1,
                                          "This text is about traditions": 0.1})
        domain = catalog.domains["geography.country"]
        classify_all_facets("s", "d:0", domain, ClassifierConfig(), nli)
        counter_calls = [c for c in nli.calls if "This text is about politics" in c[1]]
        assert len(counter_calls) == 1

    def _all_low(self):
        return scripted(0.2, 0.1, 0.1, **{"This text is about drinks": 0.2,
                                           "This text is about clothing": 0.2,
                                           "This text is about rituals": 0.2,
                                           "This text is about traditions": 0.2,
                                           "This text is about behaviors": 0.2})

    def test_other_routing_for_occupation(self, catalog):
        domain = catalog.domains["occupation"]
        decisions = classify_all_facets("s", "d:0", domain, ClassifierConfig(), self._all_low())
        accepted = [d for d in decisions if d.accepted]
        assert [d.facet for d in accepted] == ["other"]
        assert accepted[0].p_facet == 0.2

    def test_other_routing_for_religion(self, catalog):
        domain = catalog.domains["religion"]
        decisions = classify_all_facets("s", "d:0", domain, ClassifierConfig(), self._all_low())
        assert [d.facet for d in decisions if d.accepted] == ["other"]

    def test_geography_dropped_instead_of_other(self, catalog):
        domain = catalog.domains["geography.country"]
        decisions = classify_all_facets("s", "d:0", domain, ClassifierConfig(), self._all_low())
        assert not any(d.accepted for d in decisions)
        assert not any(d.facet == "other" for d in decisions)

    def test_no_other_when_counter_fires(self, catalog):
        nli = scripted(0.2, 0.6, 0.1, **{"This text is about drinks": 0.2,
                                          "This text is about clothing": 0.2,
                                          "This text is about rituals": 0.2,
                                          "This text is about behaviors": 0.2})
        domain = catalog.domains["occupation"]
        decisions = classify_all_facets("s", "d:0", domain, ClassifierConfig(), nli)
        assert not any(d.accepted for d in decisions)

    def test_facet_subset_restricts_evaluation(self, catalog):
        nli = scripted(0.8, 0.1, 0.1, **{"This text is about drinks": 0.9})
        domain = catalog.domains["geography.country"]
        decisions = classify_all_facets("s", "d:0", domain, ClassifierConfig(), nli, {"food"})
        assert [d.facet for d in decisions] == ["food"]


class TestMonotonicity:
    probs = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)

    @given(p=probs, bump=probs, politics=probs, business=probs)
    def test_raising_p_facet_never_unaccepts(self, p, bump, politics, business):
        config = ClassifierConfig()
        counters = {"politics": politics, "business": business}
        if gate(p, counters, config):
            assert gate(min(1.0, p + bump), counters, config)

    @given(p=probs, politics=probs, bump=probs)
    def test_raising_counter_never_accepts(self, p, politics, bump):
        config = ClassifierConfig()
        if not gate(p, {"politics": politics}, config):
            assert not gate(p, {"politics": min(1.0, politics + bump)}, config)

    def test_counter_probabilities_empty_when_no_labels(self):
        assert counter_probabilities("s", ClassifierConfig(counter_labels=()), None) == {}

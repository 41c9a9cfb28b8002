from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from candle.errors import ConfigError
from candle.genfilter import (
    BASE_RULE_IDS,
    RULES,
    active_rules_for,
    failing_rules,
    is_generic,
)
from candle.ingest import AnnotatedSentence, Token


def geography_rules(catalog, facet="food"):
    return active_rules_for(catalog.domains["geography.country"], facet)


class TestPaperSentences:
    def test_generic_accepted(self, catalog, sentence_of):
        decision = is_generic(sentence_of("Germans like their currywurst."), geography_rules(catalog))
        assert decision.accepted and decision.failed_rule is None

    def test_first_person_rejected(self, catalog, sentence_of):
        decision = is_generic(sentence_of("I visited Germany to eat currywurst."), geography_rules(catalog))
        assert not decision.accepted
        assert decision.failed_rule == "R06-NOPRONOUN"

    def test_deictic_rejected(self, catalog, sentence_of):
        decision = is_generic(sentence_of("This restaurant serves German currywurst."), geography_rules(catalog))
        assert not decision.accepted
        assert decision.failed_rule == "R12-NODEICTIC"


class TestIndividualRules:
    @pytest.mark.parametrize(
        "text,failed",
        [
            ("the chinese use chopsticks daily.", "R02-CAP"),
            ("Germans like their currywurst", "R04-ENDPERIOD"),
            ("Germans like www.beer.example to buy beer.", "R05-NOURL"),
            ("Germans read beer.com reviews often.", "R05-NOURL"),
            ("You should visit Germany for beer.", "R06-NOPRONOUN"),
            ("Germans like their currywurst?", "R04-ENDPERIOD"),
            ("Beautiful German beer.", "R08-ROOTVERB"),
            ("Really enjoy drinking beer daily.", "R09-NOUNBEFOREROOT"),
            ("Germans visited France to drink wine.", "R10-NOPASTROOT"),
        ],
    )
    def test_first_failing_rule(self, sentence_of, text, failed):
        decision = is_generic(sentence_of(text))
        assert not decision.accepted
        assert decision.failed_rule == failed

    def test_deictic_reported_once_determiner_rule_is_off(self, sentence_of):
        sentence = sentence_of("Those lawyers wear suits.")
        assert is_generic(sentence).failed_rule == "R03-FIRSTWORD"
        reduced = frozenset(BASE_RULE_IDS) - {"R03-FIRSTWORD"}
        assert is_generic(sentence, reduced).failed_rule == "R12-NODEICTIC"

    def test_question_mark_rule(self, sentence_of):
        assert "R07-NOQUESTION" in failing_rules(sentence_of("Why Germans like beer?.."))

    def test_length_rule(self, providers):
        words = ["Germans"] + ["really"] * 30 + ["like", "beer"]
        text = " ".join(words) + "."
        from candle.ingest import Document, annotate

        (sentence,) = annotate(Document("d", "https://e.com", text=text), providers.annotator)
        assert is_generic(sentence).failed_rule == "R01-LEN"

    def test_person_entity_rule(self, sentence_of):
        sentence = sentence_of("Buddhists honor Buddha in temples.")
        assert "R11-NOPERSON" in failing_rules(sentence)

    def test_root_verb_not_first(self, sentence_of):
        sentence = sentence_of("Wear suits to court.")
        assert "R08-ROOTVERB" in failing_rules(sentence)

    def test_copular_root_accepted(self, sentence_of):
        decision = is_generic(sentence_of("Tofu is a major ingredient in many East Asian cuisines."))
        assert decision.accepted

    def test_unknown_rule_id_rejected(self, sentence_of):
        with pytest.raises(ConfigError, match="unknown rule"):
            is_generic(sentence_of("Beer is a drink."), {"R99-NOPE"})


class TestToggles:
    def test_geography_traditions_drops_r03_and_r10(self, catalog):
        active = active_rules_for(catalog.domains["geography.country"], "traditions")
        assert active == frozenset(BASE_RULE_IDS) - {"R03-FIRSTWORD", "R10-NOPASTROOT"}

    def test_occupation_behaviors_unchanged(self, catalog):
        active = active_rules_for(catalog.domains["occupation"], "behaviors")
        assert active == frozenset(BASE_RULE_IDS)

    def test_religion_drops_r11(self, catalog):
        active = active_rules_for(catalog.domains["religion"], "rituals")
        assert active == frozenset(BASE_RULE_IDS) - {"R11-NOPERSON"}

    def test_geography_determiner_sentence_accepted(self, catalog, sentence_of):
        sentence = sentence_of("The Chinese use chopsticks to eat their food.")
        assert not is_generic(sentence).accepted
        assert is_generic(sentence, geography_rules(catalog)).accepted

    def test_religion_person_sentence_accepted(self, catalog, sentence_of):
        sentence = sentence_of("Buddhists honor Buddha in temples.")
        active = active_rules_for(catalog.domains["religion"], "rituals")
        assert is_generic(sentence, active).accepted

    def test_traditions_past_root_accepted(self, catalog, sentence_of):
        sentence = sentence_of("Germans wore traditional costumes at festivals.")
        base = geography_rules(catalog, "food")
        traditions = geography_rules(catalog, "traditions")
        assert not is_generic(sentence, base).accepted
        assert is_generic(sentence, traditions).accepted


def token(surface, pos="NOUN", ner=None, lemma=None, start=0):
    return Token(surface, lemma or surface.lower(), pos, ner, False, start, start + len(surface))


def build_sentence(surfaces_pos, root_index, text=None, ner=None):
    tokens = []
    cursor = 0
    for i, (surface, pos) in enumerate(surfaces_pos):
        tokens.append(
            Token(surface, surface.lower(), pos, (ner or {}).get(i), False, cursor, cursor + len(surface))
        )
        cursor += len(surface) + 1
    text = text if text is not None else " ".join(s for s, _ in surfaces_pos)
    return AnnotatedSentence("d:0", text, tuple(tokens), "https://e.com", "e.com", root_index)


@st.composite
def synthetic_sentences(draw):
    nouns = ["Germans", "beer", "festivals", "suits", "temples"]
    verbs = ["like", "wear", "visit", "serve"]
    length = draw(st.integers(min_value=1, max_value=6))
    pieces = [(draw(st.sampled_from(nouns + verbs)), draw(st.sampled_from(["NOUN", "VERB", "DET", "PRON"])))
              for _ in range(length)]
    root = draw(st.integers(min_value=-1, max_value=length - 1))
    ender = draw(st.sampled_from([".", "?", ""]))
    text = " ".join(s for s, _ in pieces) + ender
    return build_sentence(pieces, root, text=text)


class TestProperties:
    @given(synthetic_sentences(), st.sets(st.sampled_from(list(BASE_RULE_IDS)), max_size=4))
    def test_dropping_rules_never_shrinks_accepted_set(self, sentence, dropped):
        full = is_generic(sentence, BASE_RULE_IDS)
        reduced = is_generic(sentence, frozenset(BASE_RULE_IDS) - dropped)
        if full.accepted:
            assert reduced.accepted

    @given(synthetic_sentences())
    def test_outcome_independent_of_rule_order(self, sentence):
        ids = list(BASE_RULE_IDS)
        assert is_generic(sentence, ids).accepted == is_generic(sentence, list(reversed(ids))).accepted

    @given(synthetic_sentences())
    def test_failed_rule_iff_rejected(self, sentence):
        decision = is_generic(sentence)
        assert decision.accepted == (decision.failed_rule is None)

    def test_all_rules_have_unique_ids_and_kinds(self):
        assert len(RULES) == 12
        assert all(RULES[rid].kind in ("LEXICAL", "SYNTACTIC") for rid in RULES)
